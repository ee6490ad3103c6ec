"""Classical (q = 1) frieze of variables and the specialization σ.

Nothing here touches the torus product: the commutative frieze is computed with its
own Laurent type and its own division, and then compared with σ of the quantum one.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping, Sequence

from .coefficients import specialize_nu_one
from .const import CHECK_SPECIALIZATION
from .exceptions import InvalidRank, InvalidWindow, NotDivisible, RankMismatch
from .formatting import laurent_payload
from .frieze import FriezeGrid, GridCoord, frieze_of_variables, phi
from .models import CheckResult, CheckTally
from .torus import ExponentVector, TorusElement

_LOGGER = logging.getLogger(__name__)


class CommLaurent:
    """Laurent polynomial in commuting x₁…x_n with integer coefficients."""

    __slots__ = ("_hash", "_terms", "rank")

    def __init__(self, rank: int, terms: Mapping[Sequence[int], int] | None = None) -> None:
        """Initialize from an exponent vector -> coefficient map."""
        out: dict[ExponentVector, int] = {}
        for key, c in (terms or {}).items():
            u = tuple(int(x) for x in key)
            if len(u) != rank:
                raise RankMismatch(f"exponent {u} does not have length {rank}")
            out[u] = out.get(u, 0) + int(c)
        self.rank = rank
        self._terms = {u: c for u, c in out.items() if c}
        self._hash: int | None = None

    @classmethod
    def one(cls, rank: int) -> CommLaurent:
        return cls(rank, {(0,) * rank: 1})

    @classmethod
    def variable(cls, rank: int, index: int) -> CommLaurent:
        """x_index (1-based)."""
        return cls(rank, {tuple(int(k == index) for k in range(1, rank + 1)): 1})

    @property
    def terms(self) -> Mapping[ExponentVector, int]:
        return self._terms

    def sorted_terms(self) -> list[tuple[ExponentVector, int]]:
        """Descending lexicographic order."""
        return sorted(self._terms.items(), reverse=True)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _lift(self, other: object) -> CommLaurent | None:
        if isinstance(other, CommLaurent):
            if other.rank != self.rank:
                raise RankMismatch(f"rank {self.rank} against rank {other.rank}")
            return other
        if isinstance(other, int):
            return CommLaurent(self.rank, {(0,) * self.rank: other})
        return None

    def __add__(self, other: object) -> CommLaurent:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        out = dict(self._terms)
        for u, c in rhs._terms.items():
            out[u] = out.get(u, 0) + c
        return CommLaurent(self.rank, out)

    __radd__ = __add__

    def __neg__(self) -> CommLaurent:
        return CommLaurent(self.rank, {u: -c for u, c in self._terms.items()})

    def __sub__(self, other: object) -> CommLaurent:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __mul__(self, other: object) -> CommLaurent:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        out: dict[ExponentVector, int] = {}
        for u, a in self._terms.items():
            for v, b in rhs._terms.items():
                w = tuple(x + y for x, y in zip(u, v, strict=True))
                out[w] = out.get(w, 0) + a * b
        return CommLaurent(self.rank, out)

    __rmul__ = __mul__

    def divide(self, d: CommLaurent) -> CommLaurent:
        """Exact quotient self / d."""
        if not d:
            raise NotDivisible("division by zero", "CommLaurent.divide")
        if not self:
            return CommLaurent(self.rank)
        n = self.rank
        d_lead = max(d._terms)
        d_lc = d._terms[d_lead]
        lo = [min(u[k] for u in self._terms) - min(v[k] for v in d._terms) for k in range(n)]
        hi = [max(u[k] for u in self._terms) - max(v[k] for v in d._terms) for k in range(n)]

        remainder = dict(self._terms)
        quotient: dict[ExponentVector, int] = {}
        while remainder:
            lead = max(remainder)
            u = tuple(a - b for a, b in zip(lead, d_lead, strict=True))
            c, r = divmod(remainder[lead], d_lc)
            if r or any(not lo[k] <= u[k] <= hi[k] for k in range(n)):
                raise NotDivisible(f"{d!r} does not divide {self!r}", "CommLaurent.divide")
            quotient[u] = c
            for v, dc in d._terms.items():
                w = tuple(x + y for x, y in zip(u, v, strict=True))
                value = remainder.get(w, 0) - c * dc
                if value:
                    remainder[w] = value
                else:
                    remainder.pop(w, None)
        return CommLaurent(n, quotient)

    def has_positive_coefficients(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def __eq__(self, other: object) -> bool:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rank, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"CommLaurent({self.rank}, {dict(self.sorted_terms())!r})"


def specialize(e: TorusElement) -> CommLaurent:
    """σ: ν ↦ 1, X^u ↦ x^u."""
    return CommLaurent(e.rank, {u: specialize_nu_one(c) for u, c in e.terms.items()})


def classical_from_slice(
    n: int,
    values: Sequence[CommLaurent],
    j_min: int,
    j_max: int,
    origin: int = 0,
) -> dict[GridCoord, CommLaurent]:
    """Classical frieze determined by column ``origin``; any n ≥ 2."""
    if n < 2:
        raise InvalidRank(f"n must be at least 2, got {n}")
    if not j_min <= origin <= j_max:
        raise InvalidWindow(f"window [{j_min}, {j_max}] does not contain column {origin}")
    if len(values) != n:
        raise RankMismatch(f"slice has {len(values)} values, expected {n}")
    one = CommLaurent.one(values[0].rank)
    f: dict[GridCoord, CommLaurent] = {(i, origin): values[i - 1] for i in range(1, n + 1)}

    def get(i: int, j: int) -> CommLaurent:
        return one if i in (0, n + 1) else f[(i, j)]

    for j in range(origin, j_max):
        for i in range(1, n + 1):
            f[(i, j + 1)] = (get(i - 1, j + 1) * get(i + 1, j) + 1).divide(get(i, j))
    for j in range(origin, j_min, -1):
        for i in range(n, 0, -1):
            f[(i, j - 1)] = (get(i - 1, j) * get(i + 1, j - 1) + 1).divide(get(i, j))
    return f


def classical_frieze(n: int, j_min: int, j_max: int) -> dict[GridCoord, CommLaurent]:
    """Classical frieze of variables: f̄(i, 0) = x_i."""
    values = [CommLaurent.variable(n, i) for i in range(1, n + 1)]
    return classical_from_slice(n, values, j_min, j_max)


def classical_invariants(n: int) -> dict[str, bool | int]:
    """φ-periodicity, distinct count on Γ₀ and positivity of the classical frieze."""
    f = classical_frieze(n, 0, 2 * (n + 3))
    periodic = all(f[phi(n, c)] == value for c, value in f.items() if phi(n, c) in f)
    domain = [(i, j) for i in range(1, n + 1) for j in range(n + 2 - i)]
    return {
        "periodic": periodic,
        "distinct": len({f[c] for c in domain}),
        "positive": all(value.has_positive_coefficients() for value in f.values()),
    }


def cross_check(
    n: int,
    j_min: int | None = None,
    j_max: int | None = None,
    *,
    grid: FriezeGrid | None = None,
) -> CheckResult:
    """σ(f(i, j)) equals the classical entry at every window coordinate."""
    if grid is None:
        grid = frieze_of_variables(n, j_min, j_max)
    classical = classical_frieze(n, grid.j_min, grid.j_max)
    tally = CheckTally(CHECK_SPECIALIZATION)
    for c in grid.coords():
        quantum = specialize(grid[c])
        if quantum == classical[c]:
            tally.record(True)
            continue
        tally.record(
            False,
            i=c[0],
            j=c[1],
            specialized=laurent_payload(quantum).model_dump(),
            classical=laurent_payload(classical[c]).model_dump(),
        )
    _LOGGER.debug("Specialization compared %d entries", tally.checked)
    return tally.result(details={"j_min": grid.j_min, "j_max": grid.j_max})
