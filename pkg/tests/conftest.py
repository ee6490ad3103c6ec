"""Test fixtures for qfrieze."""

import random
from collections.abc import Callable

import pytest

from qfrieze.coefficients import NuPoly
from qfrieze.seed import initial_lambda
from qfrieze.torus import LambdaForm, TorusElement, multiply

PROPERTY_RUNS = 1000


@pytest.fixture
def rng() -> random.Random:
    """Seeded random source for property sweeps."""
    return random.Random(20240517)


@pytest.fixture
def random_nupoly(rng: random.Random) -> Callable[..., NuPoly]:
    """Factory for small random ν-Laurent polynomials."""

    def make(nonzero: bool = False, terms: int = 3) -> NuPoly:
        while True:
            p = NuPoly(
                {rng.randint(-2, 2): rng.randint(-2, 2) for _ in range(rng.randint(1, terms))}
            )
            if p or not nonzero:
                return p

    return make


@pytest.fixture
def random_element(
    rng: random.Random, random_nupoly: Callable[..., NuPoly]
) -> Callable[..., TorusElement]:
    """Factory for small random torus elements."""

    def make(rank: int, nonzero: bool = False, terms: int = 3) -> TorusElement:
        while True:
            e = TorusElement(
                rank,
                {
                    tuple(rng.randint(-2, 2) for _ in range(rank)): random_nupoly(terms=2)
                    for _ in range(rng.randint(1, terms))
                },
            )
            if e or not nonzero:
                return e

    return make


@pytest.fixture
def random_form(rng: random.Random) -> Callable[[int], LambdaForm]:
    """Factory for random skew-symmetric forms with entries in -2..2."""

    def make(rank: int) -> LambdaForm:
        rows = [[0] * rank for _ in range(rank)]
        for i in range(rank):
            for j in range(i + 1, rank):
                rows[i][j] = rng.randint(-2, 2)
                rows[j][i] = -rows[i][j]
        return LambdaForm.from_rows(rows)

    return make


def x(*exponents: int) -> TorusElement:
    """Monomial X^u."""
    return TorusElement.monomial(exponents)


@pytest.fixture
def rank_two_entries() -> dict[tuple[int, int], TorusElement]:
    """n = 2 frieze of variables on columns 0..3, expanded from factored forms.

    f(1,1) = X₁⁻¹(1 + q^{1/2}X₂), f(2,1) = X₂⁻¹X₁⁻¹(X₁ + q^{1/2} + qX₂),
    f(1,2) = (1 + q^{1/2}X₁)X₂⁻¹, then X₁ and X₂ again.
    """
    form = initial_lambda(2)
    x1, x2 = x(1, 0), x(0, 1)
    x1_inv, x2_inv = x(-1, 0), x(0, -1)

    f11 = multiply(form, x1_inv, 1 + x2.shift(1))
    f21 = multiply(
        form, multiply(form, x2_inv, x1_inv), x1 + NuPoly.nu(1) + x2.shift(2)
    )
    f12 = multiply(form, 1 + x1.shift(1), x2_inv)
    return {
        (1, 0): x1,
        (2, 0): x2,
        (1, 1): f11,
        (2, 1): f21,
        (1, 2): f12,
        (2, 2): x1,
        (1, 3): x2,
    }
