"""Pydantic models for qfrieze output payloads and verification reports."""

from __future__ import annotations

import logging
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, computed_field

from .const import SCHEMA_VERSION

_LOGGER = logging.getLogger(__name__)


class QFriezeModel(BaseModel):
    """Base model accepting both field names and aliases."""

    model_config = ConfigDict(populate_by_name=True)


class TermPayload(QFriezeModel):
    """One torus term: exponent vector and ascending [ν-exponent, coefficient] pairs."""

    exp: list[int]
    coeff: list[tuple[int, int]]


class ElementPayload(QFriezeModel):
    """Torus element, terms in descending lexicographic order."""

    terms: list[TermPayload]


class FriezeEntryPayload(QFriezeModel):
    """Frieze entry f(i, j)."""

    i: int
    j: int
    terms: list[TermPayload]


class FriezePayload(QFriezeModel):
    """Frieze window."""

    schema_version: str = Field(default=SCHEMA_VERSION, alias="schema")
    n: int
    j_min: int
    j_max: int
    entries: list[FriezeEntryPayload]


class SeedPayload(QFriezeModel):
    """Quantum seed: B and Λ row-major, cluster in the initial torus."""

    schema_version: str = Field(default=SCHEMA_VERSION, alias="schema")
    n: int
    b: list[list[int]] = Field(alias="B")
    lambda_: list[list[int]] = Field(alias="Lambda")
    cluster: list[ElementPayload]


class ContinuantPayload(QFriezeModel):
    """Continuant P_{m,i}."""

    schema_version: str = Field(default=SCHEMA_VERSION, alias="schema")
    n: int
    m: int
    i: int
    terms: list[TermPayload]


class VariablesPayload(QFriezeModel):
    """Quantum cluster variables indexed by the fundamental domain."""

    schema_version: str = Field(default=SCHEMA_VERSION, alias="schema")
    n: int
    count: int
    entries: list[FriezeEntryPayload]


class LaurentTermPayload(QFriezeModel):
    """Commutative Laurent term."""

    exp: list[int]
    coeff: int


class LaurentPayload(QFriezeModel):
    """Commutative Laurent polynomial, terms in descending lexicographic order."""

    terms: list[LaurentTermPayload]


class CheckResult(QFriezeModel):
    """Outcome of one named verification check.

    Only the first counterexample is kept; ``details`` carries check-specific
    figures such as counts.
    """

    name: str
    status: Literal["pass", "fail"]
    checked: int = 0
    counterexample: dict[str, Any] | None = None
    details: dict[str, Any] = Field(default_factory=dict)
    diagnostic: bool = False
    note: str | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"


class VerificationReport(QFriezeModel):
    """Results of a verification run, in fixed check order."""

    schema_version: str = Field(default=SCHEMA_VERSION, alias="schema")
    n: int
    checks: list[CheckResult]

    @computed_field  # type: ignore[prop-decorator]
    @property
    def summary(self) -> dict[str, int]:
        passed = sum(1 for check in self.checks if check.passed)
        return {"passed": passed, "failed": len(self.checks) - passed}

    @property
    def ok(self) -> bool:
        return all(check.passed for check in self.checks)


class CheckTally:
    """Accumulates the outcomes of one check."""

    def __init__(self, name: str, *, diagnostic: bool = False) -> None:
        """Initialize an empty tally."""
        self.name = name
        self.diagnostic = diagnostic
        self.checked = 0
        self.failures = 0
        self.counterexample: dict[str, Any] | None = None

    def record(self, ok: bool, **context: Any) -> bool:
        """Count one identity; remember its context if it is the first failure."""
        self.checked += 1
        if not ok:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = context
                _LOGGER.debug("%s: first counterexample %s", self.name, context)
        return ok

    def result(
        self, details: dict[str, Any] | None = None, note: str | None = None
    ) -> CheckResult:
        """Freeze the tally into a CheckResult."""
        merged = dict(details or {})
        if self.failures:
            merged["failures"] = self.failures
        return CheckResult(
            name=self.name,
            status="fail" if self.failures else "pass",
            checked=self.checked,
            counterexample=self.counterexample,
            details=merged,
            diagnostic=self.diagnostic,
            note=note,
        )
