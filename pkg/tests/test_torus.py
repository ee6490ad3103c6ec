"""Tests for the based quantum torus."""

import pytest
from pydantic import ValidationError

from qfrieze.coefficients import NuPoly
from qfrieze.exceptions import NotDivisible, RankMismatch
from qfrieze.seed import initial_lambda
from qfrieze.torus import (
    LambdaForm,
    TorusElement,
    is_bar_invariant,
    lambda_eval,
    left_divide,
    multiply,
    right_divide,
    unit_vector,
)

from .conftest import PROPERTY_RUNS


def _x(*u: int) -> TorusElement:
    return TorusElement.monomial(u)


class TestLambdaForm:
    """Tests for LambdaForm and lambda_eval."""

    def test_rank_two_pairing(self):
        """Λ(e₁, e₂) = 1 for n = 2."""
        assert lambda_eval(initial_lambda(2), (1, 0), (0, 1)) == 1

    def test_alternating(self, rng, random_form):
        """Λ(u, u) = 0."""
        form = random_form(4)
        for _ in range(100):
            u = tuple(rng.randint(-3, 3) for _ in range(4))
            assert lambda_eval(form, u, u) == 0

    def test_rank_four_sum(self):
        """Λ(e₁ + e₃, e₂ + e₄) = 3 for n = 4."""
        assert lambda_eval(initial_lambda(4), (1, 0, 1, 0), (0, 1, 0, 1)) == 3

    def test_rank_mismatch(self):
        """Vectors of the wrong length are rejected."""
        with pytest.raises(RankMismatch):
            lambda_eval(initial_lambda(2), (1, 0, 0), (0, 1))

    def test_rejects_non_skew(self):
        """Validation refuses a symmetric matrix."""
        with pytest.raises(ValidationError):
            LambdaForm(matrix=((0, 1), (1, 0)))

    def test_rejects_non_square(self):
        """Validation refuses ragged rows."""
        with pytest.raises(ValidationError):
            LambdaForm(matrix=((0, 1), (-1,)))


class TestTorusElement:
    """Construction and module operations."""

    def test_zero_terms_dropped(self):
        """Zero coefficients are not stored."""
        e = TorusElement(2, {(1, 0): 0, (0, 1): 2})
        assert dict(e.terms) == {(0, 1): NuPoly.constant(2)}

    def test_wrong_key_length(self):
        """Keys must have length rank."""
        with pytest.raises(RankMismatch):
            TorusElement(2, {(1, 0, 0): 1})

    def test_scalar_embedding(self):
        """Integers and NuPoly embed at X^0."""
        one = TorusElement.one(2)
        assert one == 1
        assert one + NuPoly.nu(1) == TorusElement(2, {(0, 0): NuPoly({0: 1, 1: 1})})
        assert 1 - one == TorusElement.zero(2)

    def test_scalar_hash_matches_equality(self):
        """Elements equal to a scalar hash like it and collide in sets."""
        one = TorusElement.one(3)
        nu = TorusElement.one(2).scale(NuPoly.nu(1))
        assert hash(one) == hash(1)
        assert hash(TorusElement.zero(2)) == hash(0)
        assert hash(nu) == hash(NuPoly.nu(1))
        assert {one, 1} == {1}
        assert len({nu, NuPoly.nu(1)}) == 1

    def test_generator(self):
        """generator(n, i) is X^{e_i}."""
        assert TorusElement.generator(3, 2) == _x(0, 1, 0)
        assert unit_vector(3, 3) == (0, 0, 1)

    def test_sorted_terms_descending(self):
        """Terms come out in descending lexicographic order."""
        e = _x(-1, 0) + _x(-1, 1) + _x(0, -1)
        assert [u for u, _ in e.sorted_terms()] == [(0, -1), (-1, 1), (-1, 0)]
        assert e.leading()[0] == (0, -1)

    def test_rank_mismatch_on_add(self):
        """Adding elements of different rank raises."""
        with pytest.raises(RankMismatch):
            _ = _x(1, 0) + _x(1, 0, 0)

    def test_bar(self):
        """bar inverts ν and fixes monomials."""
        e = _x(1, 0).shift(1) + _x(0, 1)
        assert e.bar() == _x(1, 0).shift(-1) + _x(0, 1)
        assert not is_bar_invariant(e)
        assert is_bar_invariant(_x(1, 0) + _x(0, 1).scale(NuPoly({-1: 1, 1: 1})))


class TestMultiply:
    """Tests for the twisted product."""

    def test_generators(self):
        """X^{e₁}·X^{e₂} = ν X^{e₁+e₂}."""
        form = initial_lambda(2)
        assert multiply(form, _x(1, 0), _x(0, 1)) == _x(1, 1).shift(1)

    def test_reversed_generators(self):
        """X^{e₂}·X^{e₁} = ν⁻¹ X^{e₁+e₂}."""
        form = initial_lambda(2)
        assert multiply(form, _x(0, 1), _x(1, 0)) == _x(1, 1).shift(-1)

    def test_unimodular_at_origin(self):
        """X^{e₁}·(X^{−e₁} + X^{−e₁+e₂}) = 1 + ν X^{e₂}."""
        form = initial_lambda(2)
        product = multiply(form, _x(1, 0), _x(-1, 0) + _x(-1, 1))
        assert product == 1 + _x(0, 1).shift(1)

    def test_rank_mismatch(self):
        """Elements must match the form's rank."""
        with pytest.raises(RankMismatch):
            multiply(initial_lambda(2), _x(1, 0, 0), _x(0, 1, 0))

    def test_associative(self, rng, random_form, random_element):
        """(ab)c = a(bc) on random elements."""
        for _ in range(PROPERTY_RUNS):
            n = rng.choice((2, 3, 4))
            form = random_form(n)
            a, b, c = random_element(n), random_element(n), random_element(n)
            assert multiply(form, multiply(form, a, b), c) == multiply(
                form, a, multiply(form, b, c)
            )

    def test_monomial_quasi_commutation(self, rng, random_form):
        """X^u X^v = q^{Λ(u,v)} X^v X^u."""
        for _ in range(PROPERTY_RUNS):
            n = rng.choice((2, 3, 4))
            form = random_form(n)
            u = tuple(rng.randint(-3, 3) for _ in range(n))
            v = tuple(rng.randint(-3, 3) for _ in range(n))
            lhs = multiply(form, _x(*u), _x(*v))
            rhs = multiply(form, _x(*v), _x(*u)).shift(2 * lambda_eval(form, u, v))
            assert lhs == rhs


class TestDivision:
    """Tests for left_divide and right_divide."""

    def test_left_example(self):
        """X^{e₁} \\ (1 + ν X^{e₂}) = X^{−e₁} + X^{−e₁+e₂}."""
        form = initial_lambda(2)
        quotient = left_divide(form, _x(1, 0), 1 + _x(0, 1).shift(1))
        assert quotient == _x(-1, 0) + _x(-1, 1)

    def test_right_example(self):
        """(ν X^{e₁+e₂}) / X^{e₂} = X^{e₁}."""
        form = initial_lambda(2)
        assert right_divide(form, _x(1, 1).shift(1), _x(0, 1)) == _x(1, 0)

    def test_zero_dividend(self, random_element):
        """0 divided by anything nonzero is 0."""
        form = initial_lambda(2)
        d = random_element(2, nonzero=True)
        assert left_divide(form, d, TorusElement.zero(2)) == 0
        assert right_divide(form, TorusElement.zero(2), d) == 0

    def test_division_by_zero(self):
        """Zero divisor raises NotDivisible."""
        form = initial_lambda(2)
        with pytest.raises(NotDivisible):
            left_divide(form, TorusElement.zero(2), _x(1, 0))

    def test_outside_torus(self):
        """X^{e₂} is not a multiple of 1 + X^{e₁}."""
        form = initial_lambda(2)
        with pytest.raises(NotDivisible) as err:
            left_divide(form, 1 + _x(1, 0), _x(0, 1))
        assert err.value.operation == "left_divide"
        with pytest.raises(NotDivisible):
            right_divide(form, _x(0, 1), 1 + _x(1, 0))

    def test_non_exact_coefficient(self):
        """2X^{e₁} does not divide X^{e₁}."""
        form = initial_lambda(2)
        with pytest.raises(NotDivisible):
            left_divide(form, _x(1, 0).scale(2), _x(1, 0))

    def test_left_round_trip(self, rng, random_form, random_element):
        """left_divide(d, d·y) = y."""
        for _ in range(PROPERTY_RUNS):
            n = rng.choice((2, 3, 4))
            form = random_form(n)
            d, y = random_element(n, nonzero=True), random_element(n)
            p = multiply(form, d, y)
            quotient = left_divide(form, d, p)
            assert quotient == y
            assert multiply(form, d, quotient) == p

    def test_right_round_trip(self, rng, random_form, random_element):
        """right_divide(y·d, d) = y."""
        for _ in range(PROPERTY_RUNS):
            n = rng.choice((2, 3, 4))
            form = random_form(n)
            d, y = random_element(n, nonzero=True), random_element(n)
            p = multiply(form, y, d)
            quotient = right_divide(form, p, d)
            assert quotient == y
            assert multiply(form, quotient, d) == p
