"""Quantum signed continuants P_{m,i} in the one-step variables X′_i."""

from __future__ import annotations

import logging
from collections.abc import Mapping
from functools import lru_cache

from .const import (
    CHECK_CONTINUANT_FRIEZE,
    CHECK_LEFT_RECURSION,
    CHECK_MAIN_THEOREM,
    CHECK_QUASI_COMMUTATION,
)
from .exceptions import IndexOutOfRange
from .frieze import FriezeGrid, cluster_variables, domain_size, fundamental_domain
from .models import CheckResult, CheckTally
from .seed import check_rank, initial_lambda, one_step_variables
from .torus import LambdaForm, TorusElement, multiply

_LOGGER = logging.getLogger(__name__)


class ContinuantTable:
    """Memoized P_{m,i} for one rank.

    P_{0,i} = 1, P_{1,i} = X′_i, and

        P_{m+1,i} = P_{m,i}X′_{i+m} − ν⁻¹P_{m−1,i}        (m even)
        P_{m+1,i} = ν⁻¹(P_{m,i}X′_{i+m} − P_{m−1,i})      (m odd)

    A table is not safe to fill from several threads; call fill() before sharing.
    """

    def __init__(self, n: int) -> None:
        """Initialize an empty table for rank n."""
        check_rank(n)
        self.n = n
        self.form: LambdaForm = initial_lambda(n)
        self.primes: tuple[TorusElement, ...] = one_step_variables(n)
        self._values: dict[tuple[int, int], TorusElement] = {}

    def is_legal(self, m: int, i: int) -> bool:
        if m < 0 or i < 1:
            return False
        if m == 0:
            return i <= self.n + 1
        return i + m - 1 <= self.n

    def prime(self, i: int) -> TorusElement:
        """X′_i (1-based)."""
        return self.primes[i - 1]

    def get(self, m: int, i: int) -> TorusElement:
        """P_{m,i}."""
        if not self.is_legal(m, i):
            raise IndexOutOfRange(f"P_{{{m},{i}}} is undefined for n = {self.n}")
        cached = self._values.get((m, i))
        if cached is not None:
            return cached
        if m == 0:
            value = TorusElement.one(self.n)
        elif m == 1:
            value = self.prime(i)
        else:
            k = m - 1
            step = multiply(self.form, self.get(k, i), self.prime(i + k))
            previous = self.get(k - 1, i)
            if k % 2 == 0:
                value = step - previous.shift(-1)
            else:
                value = (step - previous).shift(-1)
        self._values[(m, i)] = value
        return value

    def fill(self) -> ContinuantTable:
        """Compute every legal entry."""
        for m in range(self.n + 1):
            for i in range(1, self.n + 2):
                if self.is_legal(m, i):
                    self.get(m, i)
        _LOGGER.debug("Filled continuant table for n=%d (%d entries)", self.n, len(self._values))
        return self

    @property
    def values(self) -> Mapping[tuple[int, int], TorusElement]:
        return self._values


@lru_cache(maxsize=8)
def continuant_table(n: int) -> ContinuantTable:
    """Filled, shared table for rank n."""
    return ContinuantTable(n).fill()


def continuant(n: int, m: int, i: int) -> TorusElement:
    """P_{m,i} for rank n."""
    return continuant_table(n).get(m, i)


def _table(n: int, table: ContinuantTable | None) -> ContinuantTable:
    return table if table is not None and table.n == n else continuant_table(n)


def verify_quasi_commutation(n: int, *, table: ContinuantTable | None = None) -> CheckResult:
    """Commutation rules among the X′_i and between P_{m,i} and X′."""
    t = _table(n, table)
    form = t.form
    tally = CheckTally(CHECK_QUASI_COMMUTATION)

    def mul(a: TorusElement, b: TorusElement) -> TorusElement:
        return multiply(form, a, b)

    # X′_i X′_{i+1} − 1 = q(X′_{i+1} X′_i − 1)
    for i in range(1, n):
        a, b = t.prime(i), t.prime(i + 1)
        tally.record(
            mul(a, b) - 1 == (mul(b, a) - 1).shift(2), identity="neighbours", i=i
        )

    # X′_i X′_{i+k} = q^{(−1)^{k−1}} X′_{i+k} X′_i for k > 1
    for i in range(1, n + 1):
        for k in range(2, n - i + 1):
            a, b = t.prime(i), t.prime(i + k)
            exponent = 2 if k % 2 else -2
            tally.record(
                mul(a, b) == mul(b, a).shift(exponent), identity="distant", i=i, k=k
            )

    # P_{m,i} X′_{i+m−1+k}: factor q^{(−1)^{k−1}} for m odd, 1 for m even
    for m in range(1, n + 1):
        for k in range(2, n + 1):
            for i in range(1, n - (m - 1 + k) + 1):
                p, x = t.get(m, i), t.prime(i + m - 1 + k)
                exponent = (2 if k % 2 else -2) if m % 2 else 0
                tally.record(
                    mul(p, x) == mul(x, p).shift(exponent),
                    identity="continuant",
                    m=m,
                    i=i,
                    k=k,
                )
    return tally.result()


def verify_left_recursion(n: int, *, table: ContinuantTable | None = None) -> CheckResult:
    """The recursion read with X′ multiplied from the left."""
    t = _table(n, table)
    tally = CheckTally(CHECK_LEFT_RECURSION)
    for m in range(1, n):
        for i in range(1, n - m + 1):
            left = multiply(t.form, t.prime(i + m), t.get(m, i))
            previous = t.get(m - 1, i)
            if m % 2 == 0:
                expected = left - previous.shift(1)
            else:
                expected = (left - previous).shift(1)
            tally.record(t.get(m + 1, i) == expected, m=m, i=i)
    return tally.result()


def verify_frieze_relation(n: int, *, table: ContinuantTable | None = None) -> CheckResult:
    """P_{m,i}P_{m,i+1} = ν·P_{m+1,i}P_{m−1,i+1} + 1 for 1 ≤ i ≤ n − m."""
    t = _table(n, table)
    tally = CheckTally(CHECK_CONTINUANT_FRIEZE)
    for m in range(1, n):
        for i in range(1, n - m + 1):
            lhs = multiply(t.form, t.get(m, i), t.get(m, i + 1))
            rhs = multiply(t.form, t.get(m + 1, i), t.get(m - 1, i + 1)).shift(1) + 1
            tally.record(lhs == rhs, m=m, i=i)
    return tally.result()


def continuant_generators(n: int) -> list[tuple[int, int]]:
    """Index pairs (m, i) with m ≥ 1 and i + m − 1 ≤ n."""
    return [(m, i) for m in range(1, n + 1) for i in range(1, n - m + 2)]


def lower_bound_generators(n: int) -> tuple[TorusElement, ...]:
    """(X₁, X′₁, …, X_n, X′_n)."""
    primes = one_step_variables(n)
    out: list[TorusElement] = []
    for i in range(1, n + 1):
        out.extend((TorusElement.generator(n, i), primes[i - 1]))
    return tuple(out)


def verify_main_theorem(
    n: int,
    *,
    grid: FriezeGrid | None = None,
    table: ContinuantTable | None = None,
) -> CheckResult:
    """f(i, j) = P_{i,j} on Γ₀ and the variables are {X_i} ⊔ {P_{m,i}}."""
    t = _table(n, table)
    tally = CheckTally(CHECK_MAIN_THEOREM)
    if grid is not None and grid.n == n and grid.covers(0, n + 1):
        values = {c: grid[c] for c in fundamental_domain(n)}
    else:
        values = cluster_variables(n)

    for (i, j), value in sorted(values.items(), key=lambda item: (item[0][1], item[0][0])):
        if j == 0:
            tally.record(value == TorusElement.generator(n, i), i=i, j=j)
        else:
            tally.record(value == t.get(i, j), i=i, j=j)

    initial = {TorusElement.generator(n, i) for i in range(1, n + 1)}
    continuants = {t.get(m, i) for m, i in continuant_generators(n)}
    tally.record(
        not initial & continuants and len(continuants) == n * (n + 1) // 2,
        property="disjoint union",
    )
    tally.record(
        initial | continuants == set(values.values()), property="set equality"
    )
    return tally.result(
        details={
            "identities": len(values),
            "variables": len(initial) + len(continuants),
            "expected": domain_size(n),
        }
    )
