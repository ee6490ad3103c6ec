"""Text rendering and JSON payloads.

ν-powers are written in q-notation: ν^{2m} as q^{m}, odd ν^k as q^{k/2}.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from typing import TYPE_CHECKING

from pydantic import BaseModel

from .coefficients import NuPoly
from .models import (
    ContinuantPayload,
    ElementPayload,
    FriezeEntryPayload,
    FriezePayload,
    LaurentPayload,
    LaurentTermPayload,
    SeedPayload,
    TermPayload,
    VariablesPayload,
    VerificationReport,
)
from .torus import TorusElement

if TYPE_CHECKING:
    from .classical import CommLaurent
    from .frieze import FriezeGrid, GridCoord
    from .seed import QuantumSeed


def q_power(k: int) -> str:
    """Render ν^k; empty for k = 0."""
    if k == 0:
        return ""
    if k % 2:
        return f"q^{{{k}/2}}"
    m = k // 2
    return "q" if m == 1 else f"q^{{{m}}}"


def _signed(parts: list[tuple[int, str]]) -> str:
    """Join (sign, body) pairs as ``a + b - c``."""
    out = ""
    for index, (sign, body) in enumerate(parts):
        if index == 0:
            out = f"-{body}" if sign < 0 else body
        else:
            out += f" - {body}" if sign < 0 else f" + {body}"
    return out


def _scaled(magnitude: int, body: str) -> str:
    if not body:
        return str(magnitude)
    return body if magnitude == 1 else f"{magnitude}{body}"


def format_nupoly(p: NuPoly) -> str:
    """Ascending powers, e.g. ``1 + 2q^{1/2} - q``."""
    if not p:
        return "0"
    return _signed([(c, _scaled(abs(c), q_power(k))) for k, c in p.items()])


def format_monomial(u: Sequence[int]) -> str:
    if not any(u):
        return "1"
    return "X^(" + ",".join(str(x) for x in u) + ")"


def format_element(e: TorusElement) -> str:
    """Terms in descending lexicographic order."""
    if not e:
        return "0"
    parts: list[tuple[int, str]] = []
    for u, c in e.sorted_terms():
        mono = format_monomial(u)
        single = c.monomial()
        if single is not None:
            k, a = single
            prefix = _scaled(abs(a), q_power(k))
            if mono == "1":
                parts.append((a, prefix))
            else:
                parts.append((a, mono if prefix == "1" else prefix + mono))
        elif mono == "1" and len(e) == 1:
            parts.append((1, format_nupoly(c)))
        else:
            parts.append((1, f"({format_nupoly(c)})" + ("" if mono == "1" else mono)))
    return _signed(parts)


def format_laurent(p: CommLaurent) -> str:
    if not p:
        return "0"
    parts: list[tuple[int, str]] = []
    for u, c in p.sorted_terms():
        mono = "1" if not any(u) else "x^(" + ",".join(str(x) for x in u) + ")"
        if mono == "1":
            parts.append((c, str(abs(c))))
        else:
            parts.append((c, mono if abs(c) == 1 else f"{abs(c)}{mono}"))
    return _signed(parts)


# -- payloads --


def element_terms(e: TorusElement) -> list[TermPayload]:
    return [
        TermPayload(exp=list(u), coeff=[(k, a) for k, a in c.items()])
        for u, c in e.sorted_terms()
    ]


def element_payload(e: TorusElement) -> ElementPayload:
    return ElementPayload(terms=element_terms(e))


def laurent_payload(p: CommLaurent) -> LaurentPayload:
    return LaurentPayload(
        terms=[LaurentTermPayload(exp=list(u), coeff=c) for u, c in p.sorted_terms()]
    )


def frieze_payload(grid: FriezeGrid) -> FriezePayload:
    return FriezePayload(
        n=grid.n,
        j_min=grid.j_min,
        j_max=grid.j_max,
        entries=[
            FriezeEntryPayload(i=i, j=j, terms=element_terms(grid[(i, j)]))
            for i, j in grid.coords()
        ],
    )


def seed_payload(seed: QuantumSeed) -> SeedPayload:
    return SeedPayload(
        n=seed.rank,
        b=[list(row) for row in seed.b.matrix],
        lambda_=[list(row) for row in seed.lambda_.matrix],
        cluster=[element_payload(y) for y in seed.cluster],
    )


def continuant_payload(n: int, m: int, i: int, value: TorusElement) -> ContinuantPayload:
    return ContinuantPayload(n=n, m=m, i=i, terms=element_terms(value))


def variables_payload(n: int, values: Mapping[GridCoord, TorusElement]) -> VariablesPayload:
    return VariablesPayload(
        n=n,
        count=len(values),
        entries=[
            FriezeEntryPayload(i=i, j=j, terms=element_terms(value))
            for (i, j), value in values.items()
        ],
    )


# -- text blocks --


def _matrix_text(rows: Sequence[Sequence[int]]) -> str:
    return "[" + ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in rows) + "]"


def frieze_text(grid: FriezeGrid) -> str:
    return "\n".join(
        f"f({i},{j}) = {format_element(grid[(i, j)])}" for i, j in grid.coords()
    )


def seed_text(seed: QuantumSeed) -> str:
    lines = [
        f"B = {_matrix_text(seed.b.matrix)}",
        f"Lambda = {_matrix_text(seed.lambda_.matrix)}",
    ]
    lines.extend(
        f"Y{k} = {format_element(y)}" for k, y in enumerate(seed.cluster, start=1)
    )
    return "\n".join(lines)


def continuant_text(m: int, i: int, value: TorusElement) -> str:
    return f"P({m},{i}) = {format_element(value)}"


def variables_text(values: Mapping[GridCoord, TorusElement]) -> str:
    return "\n".join(
        f"f({i},{j}) = {format_element(value)}" for (i, j), value in values.items()
    )


def report_text(report: VerificationReport) -> str:
    lines = []
    for check in report.checks:
        label = f"{check.name}: {check.status} ({check.checked} checked)"
        if check.diagnostic:
            label += " [diagnostic]"
        lines.append(label)
        if check.counterexample is not None:
            lines.append(f"  counterexample: {check.counterexample}")
    summary = report.summary
    lines.append(f"{summary['passed']} passed, {summary['failed']} failed")
    return "\n".join(lines)


def dump_json(payload: BaseModel) -> str:
    return payload.model_dump_json(indent=2, by_alias=True)
