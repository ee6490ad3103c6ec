"""Quantum frieze patterns on Q₀ × Z.

A frieze assigns a torus element f(i, j) to every row 1 ≤ i ≤ n and column j, with
boundary rows f(0, j) = f(n+1, j) = 1, subject to the quantum unimodular rule

    f(i, j)·f(i, j+1) − ν·f(i−1, j+1)·f(i+1, j) = 1.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator, Mapping, Sequence

from .const import (
    CHECK_BAR_INVARIANCE,
    CHECK_BIJECTION,
    CHECK_FRIEZE_RELATIONS,
    CHECK_MOUTH,
    CHECK_PERIODICITY,
    CHECK_POSITIVITY,
    WINDOW_PERIODS,
)
from .exceptions import (
    IndexOutOfRange,
    InvalidWindow,
    InvariantViolation,
    RankMismatch,
)
from .models import CheckResult, CheckTally
from .seed import check_rank, initial_lambda, one_step_variables
from .torus import (
    LambdaForm,
    TorusElement,
    is_bar_invariant,
    left_divide,
    multiply,
    right_divide,
)

_LOGGER = logging.getLogger(__name__)

GridCoord = tuple[int, int]

DIAGNOSTIC_NOTE = "literature diagnostic; not implied by the frieze construction itself"


def phi(n: int, c: GridCoord) -> GridCoord:
    """(i, j) ↦ (n − i + 1, j + i + 1)."""
    i, j = c
    return n - i + 1, j + i + 1


def phi_inverse(n: int, c: GridCoord) -> GridCoord:
    i, j = c
    return n - i + 1, j - n + i - 2


def fundamental_domain(n: int) -> frozenset[GridCoord]:
    """Γ₀ = {(i, j) : j ≥ 0, i + j ≤ n + 1}."""
    check_rank(n)
    return frozenset((i, j) for i in range(1, n + 1) for j in range(n + 2 - i))


def domain_size(n: int) -> int:
    return n * (n + 3) // 2


def domain_representative(n: int, c: GridCoord) -> GridCoord:
    """The point of Γ₀ in the φ-orbit of c."""
    i, j = c
    # φ² translates columns by n + 3
    period = n + 3
    j -= (j // period) * period
    if i + j <= n + 1:
        return i, j
    return phi_inverse(n, (i, j))


def _by_column(c: GridCoord) -> tuple[int, int]:
    return c[1], c[0]


def default_window(n: int) -> tuple[int, int]:
    """Window [−(n+3), WINDOW_PERIODS·(n+3)]."""
    return -(n + 3), WINDOW_PERIODS * (n + 3)


class FriezeGrid:
    """Frieze restricted to the columns j_min..j_max.

    Boundary rows read as 1 inside the window. Reading outside the window raises
    IndexOutOfRange.
    """

    __slots__ = ("_entries", "form", "j_max", "j_min", "n")

    def __init__(
        self,
        n: int,
        j_min: int,
        j_max: int,
        entries: Mapping[GridCoord, TorusElement],
        form: LambdaForm,
    ) -> None:
        """Initialize from a fully populated window."""
        missing = [
            (i, j)
            for j in range(j_min, j_max + 1)
            for i in range(1, n + 1)
            if (i, j) not in entries
        ]
        if missing:
            raise InvalidWindow(f"frieze window is missing {missing[0]}")
        self.n = n
        self.j_min = j_min
        self.j_max = j_max
        self.form = form
        self._entries = dict(entries)

    def __contains__(self, c: object) -> bool:
        return c in self._entries

    def __getitem__(self, c: GridCoord) -> TorusElement:
        i, j = c
        if self.j_min <= j <= self.j_max and i in (0, self.n + 1):
            return TorusElement.one(self.n)
        try:
            return self._entries[c]
        except KeyError:
            raise IndexOutOfRange(
                f"f{c} lies outside rows 0..{self.n + 1}, "
                f"columns {self.j_min}..{self.j_max}"
            ) from None

    def __iter__(self) -> Iterator[GridCoord]:
        return iter(self.coords())

    def __len__(self) -> int:
        return len(self._entries)

    def coords(self) -> list[GridCoord]:
        """Coordinates column by column, rows ascending."""
        return sorted(self._entries, key=_by_column)

    def column(self, j: int) -> tuple[TorusElement, ...]:
        return tuple(self[(i, j)] for i in range(1, self.n + 1))

    def covers(self, j_min: int, j_max: int) -> bool:
        return self.j_min <= j_min and j_max <= self.j_max

    def with_entry(self, c: GridCoord, value: TorusElement) -> FriezeGrid:
        """Copy with one entry replaced."""
        if c not in self._entries:
            raise IndexOutOfRange(f"f{c} is not stored in this window")
        entries = dict(self._entries)
        entries[c] = value
        return FriezeGrid(self.n, self.j_min, self.j_max, entries, self.form)


def _unimodular_excess(form: LambdaForm, a: TorusElement, b: TorusElement) -> TorusElement:
    """1 + ν·a·b."""
    return multiply(form, a, b).shift(1) + 1


def frieze_from_slice(
    n: int,
    values: Sequence[TorusElement],
    j_min: int,
    j_max: int,
    origin: int = 0,
    *,
    form: LambdaForm | None = None,
) -> FriezeGrid:
    """Frieze determined by its column ``origin``.

    Columns right of ``origin`` are filled with rows ascending, columns left of it
    with rows descending; every step divides by an entry that is already known.
    """
    check_rank(n)
    if not j_min <= origin <= j_max:
        raise InvalidWindow(f"window [{j_min}, {j_max}] does not contain column {origin}")
    if len(values) != n:
        raise RankMismatch(f"slice has {len(values)} values, expected {n}")
    form = form if form is not None else initial_lambda(n)
    one = TorusElement.one(n)

    entries: dict[GridCoord, TorusElement] = {
        (i, origin): values[i - 1] for i in range(1, n + 1)
    }

    def get(i: int, j: int) -> TorusElement:
        return one if i in (0, n + 1) else entries[(i, j)]

    for j in range(origin, j_max):
        for i in range(1, n + 1):
            numerator = _unimodular_excess(form, get(i - 1, j + 1), get(i + 1, j))
            entries[(i, j + 1)] = left_divide(form, get(i, j), numerator)
        _LOGGER.debug("Filled column %d", j + 1)

    for j in range(origin, j_min, -1):
        for i in range(n, 0, -1):
            numerator = _unimodular_excess(form, get(i - 1, j), get(i + 1, j - 1))
            entries[(i, j - 1)] = right_divide(form, numerator, get(i, j))
        _LOGGER.debug("Filled column %d", j - 1)

    return FriezeGrid(n, j_min, j_max, entries, form)


def frieze_of_variables(
    n: int, j_min: int | None = None, j_max: int | None = None
) -> FriezeGrid:
    """Quantum frieze of variables: f(i, 0) = X_i."""
    default_min, default_max = default_window(n)
    j_min = default_min if j_min is None else j_min
    j_max = default_max if j_max is None else j_max
    check_rank(n)
    values = [TorusElement.generator(n, i) for i in range(1, n + 1)]
    return frieze_from_slice(n, values, j_min, j_max)


def frieze_from_mouth(
    n: int,
    mouth: Sequence[TorusElement],
    *,
    form: LambdaForm | None = None,
) -> dict[GridCoord, TorusElement]:
    """Rebuild Γ₀ row by row from f(1, 0), …, f(1, n).

    Raises InvariantViolation when the result breaks the unimodular rule at the
    bottom boundary, NotDivisible when a row cannot be divided out.
    """
    check_rank(n)
    if len(mouth) != n + 1:
        raise RankMismatch(f"mouth has {len(mouth)} values, expected {n + 1}")
    form = form if form is not None else initial_lambda(n)

    f: dict[GridCoord, TorusElement] = {(1, j): mouth[j] for j in range(n + 1)}
    for j in range(n):
        f[(2, j)] = (multiply(form, f[(1, j)], f[(1, j + 1)]) - 1).shift(-1)
    for i in range(2, n):
        for j in range(n + 1 - i):
            rhs = (multiply(form, f[(i, j)], f[(i, j + 1)]) - 1).shift(-1)
            f[(i + 1, j)] = left_divide(form, f[(i - 1, j + 1)], rhs)

    boundary = multiply(form, f[(n, 0)], f[(n, 1)]) - f[(n - 1, 1)].shift(1)
    if boundary != 1:
        raise InvariantViolation(f"mouth is not frieze-consistent at row {n}")
    return {c: f[c] for c in sorted(f, key=_by_column)}


def check_unimodular(grid: FriezeGrid) -> CheckResult:
    """Unimodular rule at every position whose four participants are in the window."""
    tally = CheckTally(CHECK_FRIEZE_RELATIONS)
    for j in range(grid.j_min, grid.j_max):
        for i in range(1, grid.n + 1):
            lhs = multiply(grid.form, grid[(i, j)], grid[(i, j + 1)]) - multiply(
                grid.form, grid[(i - 1, j + 1)], grid[(i + 1, j)]
            ).shift(1)
            tally.record(lhs == 1, i=i, j=j)
    return tally.result(details={"j_min": grid.j_min, "j_max": grid.j_max})


def check_periodicity(grid: FriezeGrid) -> CheckResult:
    """f(φ(i, j)) = f(i, j) for every pair inside the window.

    A window holding no pair related by φ fails with ``property="window"``.
    """
    tally = CheckTally(CHECK_PERIODICITY)
    for i, j in grid.coords():
        image = phi(grid.n, (i, j))
        if image not in grid:
            continue
        tally.record(grid[(i, j)] == grid[image], i=i, j=j, image=list(image))
    if not tally.checked:
        tally.record(False, property="window", j_min=grid.j_min, j_max=grid.j_max)
    return tally.result(details={"j_min": grid.j_min, "j_max": grid.j_max})


def cluster_variables(n: int) -> dict[GridCoord, TorusElement]:
    """Frieze of variables restricted to Γ₀; values are pairwise distinct."""
    domain = fundamental_domain(n)
    grid = frieze_of_variables(n, 0, n + 1)
    values = {c: grid[c] for c in sorted(domain, key=_by_column)}
    if len(set(values.values())) != len(values):
        raise InvariantViolation("cluster variables on the fundamental domain repeat")
    return values


def _window_over(n: int, grid: FriezeGrid | None, j_min: int, j_max: int) -> FriezeGrid:
    if grid is not None and grid.n == n and grid.covers(j_min, j_max):
        return grid
    return frieze_of_variables(n, j_min, j_max)


def verify_bijection(n: int, *, grid: FriezeGrid | None = None) -> CheckResult:
    """Γ₀ carries n(n+3)/2 distinct values and every φ-orbit reads one of them."""
    domain = fundamental_domain(n)
    window = _window_over(n, grid, 0, n + 2)
    tally = CheckTally(CHECK_BIJECTION)

    distinct = len({window[c] for c in domain})
    tally.record(distinct == domain_size(n), property="distinct", distinct=distinct)
    for j in range(0, n + 3):
        for i in range(1, n + 1):
            rep = domain_representative(n, (i, j))
            tally.record(
                window[(i, j)] == window[rep], i=i, j=j, representative=list(rep)
            )
    return tally.result(details={"distinct": distinct, "expected": domain_size(n)})


def verify_mouth_reconstruction(
    n: int, *, grid: FriezeGrid | None = None
) -> CheckResult:
    """Mouth of the frieze of variables rebuilds it on Γ₀; f(1, j) = X′_j."""
    window = _window_over(n, grid, 0, n + 1)
    tally = CheckTally(CHECK_MOUTH)

    primes = one_step_variables(n)
    for j in range(1, n + 1):
        tally.record(window[(1, j)] == primes[j - 1], i=1, j=j, property="one-step")

    rebuilt = frieze_from_mouth(n, [window[(1, j)] for j in range(n + 1)])
    for (i, j), value in rebuilt.items():
        tally.record(value == window[(i, j)], i=i, j=j, property="reconstruction")
    return tally.result(details={"entries": len(rebuilt)})


def diagnose_positivity(grid: FriezeGrid) -> CheckResult:
    """Every coefficient of every entry is a nonnegative integer."""
    tally = CheckTally(CHECK_POSITIVITY, diagnostic=True)
    for i, j in grid.coords():
        tally.record(grid[(i, j)].has_nonnegative_coefficients(), i=i, j=j)
    if tally.failures:
        _LOGGER.warning("Positivity diagnostic failed at %s", tally.counterexample)
    return tally.result(note=DIAGNOSTIC_NOTE)


def diagnose_bar_invariance(grid: FriezeGrid) -> CheckResult:
    """Every entry has palindromic ν-coefficients."""
    tally = CheckTally(CHECK_BAR_INVARIANCE, diagnostic=True)
    for i, j in grid.coords():
        tally.record(is_bar_invariant(grid[(i, j)]), i=i, j=j)
    if tally.failures:
        _LOGGER.warning("Bar-invariance diagnostic failed at %s", tally.counterexample)
    return tally.result(note=DIAGNOSTIC_NOTE)
