"""Exact arithmetic in Z[ν, ν⁻¹] with ν = q^{1/2}.

Every scalar of the package lives here: ν, q = ν², the factors q^{a/2} produced by
the twisted torus product, and all frieze coefficients. Coefficients are Python
integers, so there is no overflow to guard against.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping

from .exceptions import NotDivisible

_LOGGER = logging.getLogger(__name__)


class NuPoly:
    """Laurent polynomial in ν with integer coefficients.

    Instances are immutable; ``terms`` maps a ν-exponent to a nonzero integer.
    Equality is equality of the term maps.
    """

    __slots__ = ("_hash", "_terms")

    _terms: dict[int, int]
    _hash: int | None

    def __init__(self, terms: Mapping[int, int] | None = None) -> None:
        """Initialize from an exponent -> coefficient map, dropping zeros."""
        self._terms = {int(e): int(c) for e, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict[int, int]) -> NuPoly:
        """Adopt an already trimmed term dict without copying."""
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, value: int) -> NuPoly:
        """Return the constant polynomial ``value``."""
        return cls._wrap({0: value} if value else {})

    @classmethod
    def nu(cls, power: int = 1) -> NuPoly:
        """Return ν^power."""
        return cls._wrap({power: 1})

    @property
    def terms(self) -> Mapping[int, int]:
        """Exponent -> coefficient map (read-only by convention)."""
        return self._terms

    def items(self) -> list[tuple[int, int]]:
        """Terms in ascending ν-exponent order."""
        return sorted(self._terms.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def min_degree(self) -> int:
        """Lowest ν-exponent. Undefined for zero."""
        return min(self._terms)

    def max_degree(self) -> int:
        """Highest ν-exponent. Undefined for zero."""
        return max(self._terms)

    def lowest(self) -> tuple[int, int]:
        """Lowest term as ``(exponent, coefficient)``."""
        e = min(self._terms)
        return e, self._terms[e]

    def monomial(self) -> tuple[int, int] | None:
        """Return ``(exponent, coefficient)`` if self is a single term."""
        if len(self._terms) != 1:
            return None
        return next(iter(self._terms.items()))

    # -- ring operations --

    def __add__(self, other: object) -> NuPoly:
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        if not rhs._terms:
            return self
        out = dict(self._terms)
        for e, c in rhs._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return NuPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> NuPoly:
        return NuPoly._wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: object) -> NuPoly:
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> NuPoly:
        lhs = _coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs + (-self)

    def __mul__(self, other: object) -> NuPoly:
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        return multiply(self, rhs)

    __rmul__ = __mul__

    def shift(self, power: int) -> NuPoly:
        """Return ν^power · self."""
        if not power:
            return self
        return NuPoly._wrap({e + power: c for e, c in self._terms.items()})

    def bar(self) -> NuPoly:
        """Image under ν ↦ ν⁻¹."""
        return NuPoly._wrap({-e: c for e, c in self._terms.items()})

    def is_palindromic(self) -> bool:
        """True if self is fixed by ν ↦ ν⁻¹."""
        return all(self._terms.get(-e) == c for e, c in self._terms.items())

    def is_nonnegative(self) -> bool:
        """True if every coefficient is a nonnegative integer."""
        return all(c >= 0 for c in self._terms.values())

    # -- value semantics --

    def __eq__(self, other: object) -> bool:
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms

    def __hash__(self) -> int:
        if self._hash is None:
            if not self._terms.keys() - {0}:
                self._hash = hash(self._terms.get(0, 0))
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"NuPoly({dict(self.items())!r})"


ZERO = NuPoly()
ONE = NuPoly.constant(1)
NU = NuPoly.nu()


def _coerce(value: object) -> NuPoly | None:
    if isinstance(value, NuPoly):
        return value
    if isinstance(value, int):
        return NuPoly.constant(value)
    return None


def multiply(a: NuPoly, b: NuPoly) -> NuPoly:
    """Product of two ν-Laurent polynomials."""
    if not a._terms or not b._terms:
        return ZERO
    out: dict[int, int] = {}
    for e1, c1 in a._terms.items():
        for e2, c2 in b._terms.items():
            e = e1 + e2
            out[e] = out.get(e, 0) + c1 * c2
    return NuPoly._wrap({e: c for e, c in out.items() if c})


def exact_divide(p: NuPoly, d: NuPoly) -> NuPoly:
    """Return y with d·y = p in Z[ν, ν⁻¹].

    Long division from the lowest ν-exponent upward. Any non-exact step aborts with
    NotDivisible; a partial quotient is never returned.
    """
    if not d._terms:
        raise NotDivisible("division by zero", "exact_divide")
    if not p._terms:
        return ZERO

    single = d.monomial()
    if single is not None:
        d_exp, d_coeff = single
        if any(c % d_coeff for c in p._terms.values()):
            raise NotDivisible(f"{d!r} does not divide {p!r}", "exact_divide")
        return NuPoly._wrap({e - d_exp: c // d_coeff for e, c in p._terms.items()})

    d_low, d_lc = d.lowest()
    # Quotient exponents are bounded above by the top degrees
    ceiling = p.max_degree() - d.max_degree()
    remainder = dict(p._terms)
    quotient: dict[int, int] = {}
    while remainder:
        e = min(remainder)
        c = remainder[e]
        q_exp = e - d_low
        if q_exp > ceiling or c % d_lc:
            _LOGGER.debug("Division of %r by %r stalls at exponent %d", p, d, e)
            raise NotDivisible(f"{d!r} does not divide {p!r}", "exact_divide")
        q_coeff = c // d_lc
        quotient[q_exp] = q_coeff
        for de, dc in d._terms.items():
            k = de + q_exp
            v = remainder.get(k, 0) - dc * q_coeff
            if v:
                remainder[k] = v
            else:
                remainder.pop(k, None)
    return NuPoly._wrap(quotient)


def specialize_nu_one(a: NuPoly) -> int:
    """Evaluate at ν = 1, i.e. sum the coefficients."""
    return sum(a._terms.values())
