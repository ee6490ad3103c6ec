"""Named verification checks and the concurrent suite runner."""

from __future__ import annotations

import asyncio
import logging
from collections.abc import Callable, Iterable

from .classical import cross_check
from .const import (
    ALL_CHECKS,
    CHECK_BAR_INVARIANCE,
    CHECK_BIJECTION,
    CHECK_CONTINUANT_FRIEZE,
    CHECK_FRIEZE_RELATIONS,
    CHECK_LEFT_RECURSION,
    CHECK_MAIN_THEOREM,
    CHECK_MOUTH,
    CHECK_PERIODICITY,
    CHECK_POSITIVITY,
    CHECK_QUASI_COMMUTATION,
    CHECK_SEED_PERIODICITY,
    CHECK_SPECIALIZATION,
    DEFAULT_CHECKS,
    DIAGNOSTIC_CHECKS,
    SEED_SWEEPS,
)
from .continuant import (
    ContinuantTable,
    verify_frieze_relation,
    verify_left_recursion,
    verify_main_theorem,
    verify_quasi_commutation,
)
from .exceptions import QFriezeError
from .frieze import (
    FriezeGrid,
    check_periodicity,
    check_unimodular,
    diagnose_bar_invariance,
    diagnose_positivity,
    frieze_of_variables,
    verify_bijection,
    verify_mouth_reconstruction,
)
from .models import CheckResult, VerificationReport
from .seed import check_rank, verify_source_sequence

_LOGGER = logging.getLogger(__name__)


class SuiteContext:
    """Inputs shared by every check of one run; read-only once built."""

    def __init__(self, n: int, grid: FriezeGrid, table: ContinuantTable) -> None:
        """Initialize context."""
        self.n = n
        self.grid = grid
        self.table = table

    @classmethod
    def build(cls, n: int) -> SuiteContext:
        """Frieze of variables on the default window and a filled continuant table."""
        check_rank(n)
        return cls(n, frieze_of_variables(n), ContinuantTable(n).fill())


def _seed_periodicity(ctx: SuiteContext) -> CheckResult:
    columns = {j: ctx.grid.column(j) for j in (-1, *range(1, SEED_SWEEPS + 1))}
    return verify_source_sequence(ctx.n, columns)


CHECKS: dict[str, Callable[[SuiteContext], CheckResult]] = {
    CHECK_FRIEZE_RELATIONS: lambda ctx: check_unimodular(ctx.grid),
    CHECK_PERIODICITY: lambda ctx: check_periodicity(ctx.grid),
    CHECK_BIJECTION: lambda ctx: verify_bijection(ctx.n, grid=ctx.grid),
    CHECK_MOUTH: lambda ctx: verify_mouth_reconstruction(ctx.n, grid=ctx.grid),
    CHECK_QUASI_COMMUTATION: lambda ctx: verify_quasi_commutation(ctx.n, table=ctx.table),
    CHECK_LEFT_RECURSION: lambda ctx: verify_left_recursion(ctx.n, table=ctx.table),
    CHECK_CONTINUANT_FRIEZE: lambda ctx: verify_frieze_relation(ctx.n, table=ctx.table),
    CHECK_MAIN_THEOREM: lambda ctx: verify_main_theorem(
        ctx.n, grid=ctx.grid, table=ctx.table
    ),
    CHECK_SPECIALIZATION: lambda ctx: cross_check(ctx.n, grid=ctx.grid),
    CHECK_SEED_PERIODICITY: _seed_periodicity,
    CHECK_POSITIVITY: lambda ctx: diagnose_positivity(ctx.grid),
    CHECK_BAR_INVARIANCE: lambda ctx: diagnose_bar_invariance(ctx.grid),
}


def select_checks(names: Iterable[str] | None = None) -> tuple[str, ...]:
    """Deduplicate and order requested check names; None selects the defaults."""
    if names is None:
        return DEFAULT_CHECKS
    requested = set(names)
    unknown = sorted(requested - set(ALL_CHECKS))
    if unknown:
        raise ValueError(f"unknown check: {', '.join(unknown)}")
    return tuple(name for name in ALL_CHECKS if name in requested)


def _error_result(name: str, err: Exception) -> CheckResult:
    return CheckResult(
        name=name,
        status="fail",
        counterexample={"error": type(err).__name__, "message": str(err)},
        diagnostic=name in DIAGNOSTIC_CHECKS,
    )


def _safe_check(name: str, ctx: SuiteContext) -> CheckResult:
    """Run one check; any exception it raises becomes a failed result."""
    _LOGGER.debug("Starting check %s", name)
    try:
        result = CHECKS[name](ctx)
    except QFriezeError as err:
        _LOGGER.warning("Check %s raised %s: %s", name, type(err).__name__, err)
        return _error_result(name, err)
    except Exception as err:
        _LOGGER.exception("Check %s crashed", name)
        return _error_result(name, err)
    if not result.passed:
        _LOGGER.warning("Check %s failed: %s", name, result.counterexample)
    _LOGGER.debug("Finished check %s (%d checked)", name, result.checked)
    return result


async def run_suite(
    n: int, checks: Iterable[str] | None = None
) -> VerificationReport:
    """Run the selected checks concurrently; results keep the fixed check order."""
    names = select_checks(checks)
    ctx = await asyncio.to_thread(SuiteContext.build, n)
    results = await asyncio.gather(
        *(asyncio.to_thread(_safe_check, name, ctx) for name in names)
    )
    return VerificationReport(n=n, checks=list(results))
