"""Quantum seeds of the linearly oriented A_n quiver and their mutations.

A seed is (B, Λ, Y₁…Y_n). Every cluster variable is stored in the coordinates of the
initial torus, so a seed also remembers that ``ambient`` form; its own ``lambda_``
is the form the current cluster quasi-commutes under.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping, Sequence
from functools import cache

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, Field, model_validator

from .const import CHECK_SEED_PERIODICITY, SEED_SWEEPS
from .exceptions import (
    DirectionOutOfRange,
    InvalidRank,
    InvariantViolation,
    NotQuasiCommuting,
    OddRank,
)
from .models import CheckResult, CheckTally
from .torus import (
    LambdaForm,
    TorusElement,
    lambda_eval,
    left_divide,
    multiply,
    unit_vector,
)

_LOGGER = logging.getLogger(__name__)


class ExchangeMatrix(BaseModel):
    """Skew-symmetric exchange matrix B."""

    model_config = ConfigDict(frozen=True)

    matrix: tuple[tuple[int, ...], ...]

    @model_validator(mode="after")
    def _check_skew(self) -> ExchangeMatrix:
        n = len(self.matrix)
        if any(len(row) != n for row in self.matrix):
            raise ValueError("exchange matrix must be square")
        for i in range(n):
            for j in range(n):
                if self.matrix[i][j] != -self.matrix[j][i]:
                    raise ValueError(
                        f"exchange matrix is not skew-symmetric at ({i + 1}, {j + 1})"
                    )
        return self

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> ExchangeMatrix:
        return cls(matrix=tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def entry(self, i: int, j: int) -> int:
        """b_{i,j} with 1-based indices."""
        return self.matrix[i - 1][j - 1]

    def column(self, k: int) -> tuple[int, ...]:
        """Column k (1-based): the entries b_{i,k}."""
        return tuple(row[k - 1] for row in self.matrix)


def _as_array(rows: tuple[tuple[int, ...], ...]) -> npt.NDArray[np.int64]:
    return np.array(rows, dtype=np.int64).reshape(len(rows), len(rows))


def is_compatible(b: ExchangeMatrix, form: LambdaForm) -> bool:
    """True if BᵀΛ is the identity."""
    n = b.rank
    if form.rank != n:
        return False
    product = _as_array(b.matrix).T @ _as_array(form.matrix)
    return bool(np.array_equal(product, np.eye(n, dtype=np.int64)))


def check_rank(n: int) -> None:
    """Reject ranks the quiver family excludes."""
    if n < 2:
        raise InvalidRank(f"n must be at least 2, got {n}")
    if n % 2:
        raise OddRank(n)


def initial_exchange_matrix(n: int) -> ExchangeMatrix:
    """B of the linearly oriented quiver: b_{i,i+1} = 1, b_{i+1,i} = -1."""
    rows = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        rows[i][i + 1] = 1
        rows[i + 1][i] = -1
    return ExchangeMatrix.from_rows(rows)


def initial_lambda(n: int) -> LambdaForm:
    """Λ = (Bᵀ)⁻¹ in closed form.

    Λ_{ij} is 1 for i odd, j even, i < j; -1 for i even, j odd, i > j; 0 otherwise.
    """
    rows = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i % 2 == 1 and j % 2 == 0 and i < j:
                rows[i - 1][j - 1] = 1
            elif i % 2 == 0 and j % 2 == 1 and i > j:
                rows[i - 1][j - 1] = -1
    return LambdaForm.from_rows(rows)


class QuantumSeed(BaseModel):
    """Quantum seed (B, Λ, Y).

    The validator enforces BᵀΛ = I; a failure raises InvariantViolation.
    """

    model_config = ConfigDict(
        frozen=True, arbitrary_types_allowed=True, populate_by_name=True
    )

    b: ExchangeMatrix = Field(alias="B")
    lambda_: LambdaForm = Field(alias="Lambda")
    cluster: tuple[TorusElement, ...]
    ambient: LambdaForm

    @model_validator(mode="after")
    def _check_compatible(self) -> QuantumSeed:
        n = self.b.rank
        if self.lambda_.rank != n or self.ambient.rank != n or len(self.cluster) != n:
            raise ValueError("seed components have inconsistent ranks")
        if any(y.rank != n for y in self.cluster):
            raise ValueError("cluster variable of the wrong rank")
        if not is_compatible(self.b, self.lambda_):
            raise InvariantViolation("exchange matrix and form are not compatible")
        return self

    @property
    def rank(self) -> int:
        return self.b.rank


def initial_seed(n: int) -> QuantumSeed:
    """Initial seed with cluster (X₁, …, X_n)."""
    check_rank(n)
    form = initial_lambda(n)
    return QuantumSeed(
        b=initial_exchange_matrix(n),
        lambda_=form,
        cluster=tuple(TorusElement.generator(n, i) for i in range(1, n + 1)),
        ambient=form,
    )


def quasi_commute(
    ambient: LambdaForm, a: TorusElement, b: TorusElement, exponent: int
) -> bool:
    """True if a·b = ν^{2·exponent} b·a in the ambient torus."""
    return multiply(ambient, a, b) == multiply(ambient, b, a).shift(2 * exponent)


def normalized_product(
    form: LambdaForm,
    factors: Sequence[tuple[TorusElement, Sequence[int]]],
    *,
    ambient: LambdaForm | None = None,
) -> TorusElement:
    """Weyl-normalized product of quasi-commuting factors.

    Each factor carries an exponent-vector label; ``form`` evaluated on the labels
    gives the quasi-commutation exponents, and the ordered product is rescaled by
    ν^{-Σ_{a<b} Λ(l_a, l_b)} so the result does not depend on the factor order.
    Products are taken in ``ambient`` (defaults to ``form``).
    """
    torus = ambient if ambient is not None else form
    if not factors:
        return TorusElement.one(torus.rank)

    correction = 0
    for a, (z_a, l_a) in enumerate(factors):
        for z_b, l_b in factors[a + 1 :]:
            exponent = lambda_eval(form, l_a, l_b)
            if not quasi_commute(torus, z_a, z_b, exponent):
                raise NotQuasiCommuting(
                    f"factors labelled {tuple(l_a)} and {tuple(l_b)} "
                    f"do not satisfy the exponent {exponent}"
                )
            correction += exponent

    product = factors[0][0]
    for z, _ in factors[1:]:
        product = multiply(torus, product, z)
    return product.shift(-correction)


def _exchange_term(seed: QuantumSeed, k: int, v: Sequence[int]) -> TorusElement:
    """Y_k · M(-e_k + v) = ν^{Λ(e_k, v)} · M(v)."""
    n = seed.rank
    factors = [
        (seed.cluster[i], unit_vector(n, i + 1))
        for i in range(n)
        for _ in range(v[i])
    ]
    product = normalized_product(seed.lambda_, factors, ambient=seed.ambient)
    return product.shift(lambda_eval(seed.lambda_, unit_vector(n, k), v))


def mutate(seed: QuantumSeed, k: int) -> QuantumSeed:
    """Mutate ``seed`` in direction k (1-based)."""
    n = seed.rank
    if not 1 <= k <= n:
        raise DirectionOutOfRange(k, n)
    c = k - 1

    b = _as_array(seed.b.matrix)
    # Standard skew-symmetric matrix mutation
    b_new = b.copy()
    for i in range(n):
        for j in range(n):
            if i == c or j == c:
                b_new[i, j] = -b[i, j]
            elif b[i, c] * b[c, j] > 0:
                sign = 1 if b[i, c] > 0 else -1
                b_new[i, j] = b[i, j] + sign * b[i, c] * b[c, j]

    e = np.eye(n, dtype=np.int64)
    e[:, c] = np.maximum(-b[:, c], 0)
    e[c, c] = -1
    lam_new = e.T @ _as_array(seed.lambda_.matrix) @ e

    column = seed.b.column(k)
    positive = tuple(max(x, 0) for x in column)
    negative = tuple(max(-x, 0) for x in column)
    # Only the sum of the two exchange monomials is a Laurent polynomial
    exchange = _exchange_term(seed, k, positive) + _exchange_term(seed, k, negative)
    y_new = left_divide(seed.ambient, seed.cluster[c], exchange)

    new_form = LambdaForm.from_rows(lam_new)
    for j, y in enumerate(seed.cluster):
        if j == c:
            continue
        if not quasi_commute(seed.ambient, y_new, y, new_form.matrix[c][j]):
            raise InvariantViolation(
                f"mutated variable at {k} does not quasi-commute with Y_{j + 1}"
            )

    cluster = list(seed.cluster)
    cluster[c] = y_new
    _LOGGER.debug("Mutated rank %d seed in direction %d", n, k)
    return QuantumSeed(
        b=ExchangeMatrix.from_rows(b_new),
        lambda_=new_form,
        cluster=tuple(cluster),
        ambient=seed.ambient,
    )


def mutate_sequence(seed: QuantumSeed, dirs: Iterable[int]) -> QuantumSeed:
    """Apply mutations left to right."""
    for k in dirs:
        seed = mutate(seed, k)
    return seed


@cache
def one_step_variables(n: int) -> tuple[TorusElement, ...]:
    """(X′₁, …, X′_n): X′_k is the new variable of μ_k applied to the initial seed."""
    seed = initial_seed(n)
    return tuple(mutate(seed, k).cluster[k - 1] for k in range(1, n + 1))


def source_sweep(n: int, sweeps: int = SEED_SWEEPS) -> list[QuantumSeed]:
    """Seeds after each of ``sweeps`` rounds of μ₁, μ₂, …, μ_n."""
    seed = initial_seed(n)
    out = []
    for _ in range(sweeps):
        seed = mutate_sequence(seed, range(1, n + 1))
        out.append(seed)
    return out


def sink_sweep(n: int, sweeps: int = 1) -> list[QuantumSeed]:
    """Seeds after each of ``sweeps`` rounds of μ_n, μ_{n-1}, …, μ₁."""
    seed = initial_seed(n)
    out = []
    for _ in range(sweeps):
        seed = mutate_sequence(seed, range(n, 0, -1))
        out.append(seed)
    return out


def _flip(rows: tuple[tuple[int, ...], ...], k: int) -> tuple[tuple[int, ...], ...]:
    """Negate row and column k (1-based)."""
    c = k - 1
    return tuple(
        tuple(-x if (i == c) != (j == c) else x for j, x in enumerate(row))
        for i, row in enumerate(rows)
    )


def verify_source_sequence(
    n: int, columns: Mapping[int, Sequence[TorusElement]]
) -> CheckResult:
    """Replay the sweep μ_n∘⋯∘μ₁ and its mirror against frieze columns.

    ``columns`` maps j to (f(1,j), …, f(n,j)); it must hold j = -1 and
    j = 1..SEED_SWEEPS.
    """
    tally = CheckTally(CHECK_SEED_PERIODICITY)
    start = initial_seed(n)

    current = start
    for k in range(1, n + 1):
        row = current.b.matrix[k - 1]
        tally.record(
            all(x >= 0 for x in row) and all(x <= 0 for x in current.b.column(k)),
            step=k,
            property="source orientation",
        )
        following = mutate(current, k)
        tally.record(
            following.b.matrix == _flip(current.b.matrix, k)
            and following.lambda_.matrix == _flip(current.lambda_.matrix, k),
            step=k,
            property="sign flip",
        )
        tally.record(
            is_compatible(following.b, following.lambda_),
            step=k,
            property="compatibility",
        )
        tally.record(mutate(following, k) == current, step=k, property="involution")
        current = following

    tally.record(
        current.b == start.b and current.lambda_ == start.lambda_,
        step=n,
        property="return of B and Lambda",
    )

    for sweep, seed in enumerate(source_sweep(n, SEED_SWEEPS), start=1):
        tally.record(
            seed.cluster == tuple(columns[sweep]), column=sweep, property="cluster"
        )
    (backward,) = sink_sweep(n, 1)
    tally.record(backward.cluster == tuple(columns[-1]), column=-1, property="cluster")

    return tally.result(details={"sweeps": SEED_SWEEPS})


def cluster_is_nonnegative(seed: QuantumSeed) -> bool:
    """Diagnostic: every coefficient of every cluster variable is nonnegative."""
    return all(y.has_nonnegative_coefficients() for y in seed.cluster)


__all__ = [
    "ExchangeMatrix",
    "QuantumSeed",
    "check_rank",
    "cluster_is_nonnegative",
    "initial_exchange_matrix",
    "initial_lambda",
    "initial_seed",
    "is_compatible",
    "mutate",
    "mutate_sequence",
    "normalized_product",
    "one_step_variables",
    "quasi_commute",
    "sink_sweep",
    "source_sweep",
    "verify_source_sequence",
]
