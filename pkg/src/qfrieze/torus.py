"""Based quantum torus T(Λ).

Elements are sparse maps from exponent vectors u ∈ Z^n to coefficients in
Z[ν, ν⁻¹]; the product is the bilinear extension of

    X^u X^v = ν^{Λ(u, v)} X^{u+v}.

The form Λ is never stored on an element: it is passed to every operation that needs
it, so the same element can be read against different forms.

Division is exact division in T(Λ) and stands in for computing in the skew field of
fractions: a quotient outside the torus raises NotDivisible.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping, Sequence
from typing import Literal

from pydantic import BaseModel, ConfigDict, model_validator

from .coefficients import NuPoly, exact_divide
from .exceptions import NotDivisible, RankMismatch

_LOGGER = logging.getLogger(__name__)

ExponentVector = tuple[int, ...]


def unit_vector(rank: int, index: int) -> ExponentVector:
    """Return e_index (1-based) in Z^rank."""
    return tuple(1 if k == index else 0 for k in range(1, rank + 1))


def add_vectors(u: Sequence[int], v: Sequence[int]) -> ExponentVector:
    """Componentwise sum."""
    return tuple(a + b for a, b in zip(u, v, strict=True))


class LambdaForm(BaseModel):
    """Skew-symmetric integer form Λ on Z^n."""

    model_config = ConfigDict(frozen=True)

    matrix: tuple[tuple[int, ...], ...]

    @model_validator(mode="after")
    def _check_skew(self) -> LambdaForm:
        n = len(self.matrix)
        if any(len(row) != n for row in self.matrix):
            raise ValueError("form matrix must be square")
        for i in range(n):
            for j in range(n):
                if self.matrix[i][j] != -self.matrix[j][i]:
                    raise ValueError(f"form is not skew-symmetric at ({i + 1}, {j + 1})")
        return self

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> LambdaForm:
        """Build from any nested iterable of integers (lists, numpy rows)."""
        return cls(matrix=tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def entry(self, i: int, j: int) -> int:
        """Λ_{i,j} with 1-based indices."""
        return self.matrix[i - 1][j - 1]

    def apply(self, v: Sequence[int]) -> ExponentVector:
        """Return the vector Λv, so that Λ(u, v) = u · Λv."""
        return tuple(sum(a * b for a, b in zip(row, v, strict=True)) for row in self.matrix)


def lambda_eval(form: LambdaForm, u: Sequence[int], v: Sequence[int]) -> int:
    """Return uᵀΛv."""
    n = form.rank
    if len(u) != n or len(v) != n:
        raise RankMismatch(f"vectors of length {len(u)}, {len(v)} against rank {n}")
    return sum(a * b for a, b in zip(u, form.apply(v), strict=True))


class TorusElement:
    """Element of T(Λ): a sparse sum of c_u(ν)·X^u.

    Immutable. No stored coefficient is zero and every key has length ``rank``.
    Scalars (int or NuPoly) embed as multiples of X^0.
    """

    __slots__ = ("_hash", "_rank", "_terms")

    _rank: int
    _terms: dict[ExponentVector, NuPoly]
    _hash: int | None

    def __init__(
        self,
        rank: int,
        terms: Mapping[Sequence[int], NuPoly | int] | None = None,
    ) -> None:
        """Initialize from an exponent vector -> coefficient map."""
        collected: dict[ExponentVector, NuPoly] = {}
        for key, value in (terms or {}).items():
            u = tuple(int(x) for x in key)
            if len(u) != rank:
                raise RankMismatch(f"exponent {u} does not have length {rank}")
            coeff = value if isinstance(value, NuPoly) else NuPoly.constant(value)
            collected[u] = collected[u] + coeff if u in collected else coeff
        self._rank = rank
        self._terms = {u: c for u, c in collected.items() if c}
        self._hash = None

    @classmethod
    def _wrap(cls, rank: int, terms: dict[ExponentVector, NuPoly]) -> TorusElement:
        obj = cls.__new__(cls)
        obj._rank = rank
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, rank: int) -> TorusElement:
        return cls._wrap(rank, {})

    @classmethod
    def one(cls, rank: int) -> TorusElement:
        return cls._wrap(rank, {(0,) * rank: NuPoly.constant(1)})

    @classmethod
    def monomial(cls, u: Sequence[int], coeff: NuPoly | int = 1) -> TorusElement:
        """Return coeff·X^u."""
        return cls(len(u), {tuple(u): coeff})

    @classmethod
    def generator(cls, rank: int, index: int) -> TorusElement:
        """Return X_index = X^{e_index} (1-based)."""
        return cls._wrap(rank, {unit_vector(rank, index): NuPoly.constant(1)})

    @property
    def rank(self) -> int:
        return self._rank

    @property
    def terms(self) -> Mapping[ExponentVector, NuPoly]:
        """Exponent vector -> coefficient map (read-only by convention)."""
        return self._terms

    def sorted_terms(self) -> list[tuple[ExponentVector, NuPoly]]:
        """Terms in descending lexicographic order of exponent vectors."""
        return sorted(self._terms.items(), reverse=True)

    def leading(self) -> tuple[ExponentVector, NuPoly]:
        """Lex-largest term. Undefined for zero."""
        u = max(self._terms)
        return u, self._terms[u]

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # -- module operations --

    def _coerce(self, other: object) -> TorusElement | None:
        if isinstance(other, TorusElement):
            if other._rank != self._rank:
                raise RankMismatch(f"rank {self._rank} against rank {other._rank}")
            return other
        if isinstance(other, NuPoly | int):
            return TorusElement(self._rank, {(0,) * self._rank: other})
        return None

    def __add__(self, other: object) -> TorusElement:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out = dict(self._terms)
        for u, c in rhs._terms.items():
            v = out[u] + c if u in out else c
            if v:
                out[u] = v
            else:
                del out[u]
        return TorusElement._wrap(self._rank, out)

    __radd__ = __add__

    def __neg__(self) -> TorusElement:
        return TorusElement._wrap(self._rank, {u: -c for u, c in self._terms.items()})

    def __sub__(self, other: object) -> TorusElement:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> TorusElement:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs + (-self)

    def scale(self, factor: NuPoly | int) -> TorusElement:
        """Multiply every coefficient by a scalar."""
        if not factor:
            return TorusElement.zero(self._rank)
        return TorusElement._wrap(
            self._rank, {u: c * factor for u, c in self._terms.items()}
        )

    def shift(self, power: int) -> TorusElement:
        """Return ν^power · self."""
        if not power:
            return self
        return TorusElement._wrap(
            self._rank, {u: c.shift(power) for u, c in self._terms.items()}
        )

    def bar(self) -> TorusElement:
        """Apply ν ↦ ν⁻¹ to coefficients, fixing every X^u."""
        return TorusElement._wrap(self._rank, {u: c.bar() for u, c in self._terms.items()})

    def has_nonnegative_coefficients(self) -> bool:
        return all(c.is_nonnegative() for c in self._terms.values())

    # -- value semantics --

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TorusElement):
            return self._rank == other._rank and self._terms == other._terms
        if isinstance(other, NuPoly | int):
            return self._terms == TorusElement(self._rank, {(0,) * self._rank: other})._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            origin = (0,) * self._rank
            # Scalars hash like the NuPoly or int they compare equal to
            if not self._terms.keys() - {origin}:
                self._hash = hash(self._terms.get(origin, 0))
            else:
                self._hash = hash((self._rank, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"{u}: {c!r}" for u, c in self.sorted_terms())
        return f"TorusElement({self._rank}, {{{body}}})"


def is_bar_invariant(element: TorusElement) -> bool:
    """Diagnostic: element is fixed by the bar involution."""
    return all(c.is_palindromic() for c in element.terms.values())


def _check_ranks(form: LambdaForm, *elements: TorusElement) -> None:
    for element in elements:
        if element.rank != form.rank:
            raise RankMismatch(
                f"element of rank {element.rank} against form of rank {form.rank}"
            )


def multiply(form: LambdaForm, a: TorusElement, b: TorusElement) -> TorusElement:
    """Twisted product: each X^u·X^v contributes ν^{Λ(u,v)} X^{u+v}."""
    _check_ranks(form, a, b)
    if not a or not b:
        return TorusElement.zero(form.rank)

    right = [(v, form.apply(v), cv.terms) for v, cv in b.terms.items()]
    acc: dict[ExponentVector, dict[int, int]] = {}
    for u, cu in a.terms.items():
        left_terms = cu.terms
        for v, lv, right_terms in right:
            twist = sum(x * y for x, y in zip(u, lv, strict=True))
            slot = acc.setdefault(add_vectors(u, v), {})
            for e1, c1 in left_terms.items():
                for e2, c2 in right_terms.items():
                    e = e1 + e2 + twist
                    slot[e] = slot.get(e, 0) + c1 * c2

    out: dict[ExponentVector, NuPoly] = {}
    for w, slot in acc.items():
        coeff = NuPoly._wrap({e: c for e, c in slot.items() if c})
        if coeff:
            out[w] = coeff
    return TorusElement._wrap(form.rank, out)


def left_divide(form: LambdaForm, d: TorusElement, p: TorusElement) -> TorusElement:
    """Return y with d·y = p."""
    return _divide(form, d, p, "left")


def right_divide(form: LambdaForm, p: TorusElement, d: TorusElement) -> TorusElement:
    """Return y with y·d = p."""
    return _divide(form, d, p, "right")


def _divide(
    form: LambdaForm,
    d: TorusElement,
    p: TorusElement,
    side: Literal["left", "right"],
) -> TorusElement:
    """Lex-leading-term division.

    The lexicographic order is translation invariant, so the leading exponent of a
    product is the sum of the leading exponents and its coefficient is
    lc(d)·lc(y)·ν^{twist}. Each step peels one quotient term off the remainder.
    Quotient exponents are confined to the box cut out by the per-coordinate extremes
    of p and d, which bounds the loop.
    """
    _check_ranks(form, d, p)
    n = form.rank
    operation = f"{side}_divide"
    if not d:
        raise NotDivisible("division by zero", operation)
    if not p:
        return TorusElement.zero(n)

    d_lead, d_lc = d.leading()
    floor = tuple(
        min(u[k] for u in p.terms) - min(v[k] for v in d.terms) for k in range(n)
    )
    ceiling = tuple(
        max(u[k] for u in p.terms) - max(v[k] for v in d.terms) for k in range(n)
    )
    d_terms = [(v, form.apply(v), c) for v, c in d.terms.items()]

    remainder: dict[ExponentVector, NuPoly] = dict(p.terms)
    quotient: dict[ExponentVector, NuPoly] = {}
    while remainder:
        r_lead = max(remainder)
        u = tuple(a - b for a, b in zip(r_lead, d_lead, strict=True))
        if any(not lo <= x <= hi for lo, x, hi in zip(floor, u, ceiling, strict=True)):
            _LOGGER.debug("%s: quotient exponent %s leaves the box", operation, u)
            raise NotDivisible(f"no quotient in the torus for {p!r} by {d!r}", operation)
        lu = form.apply(u)
        twist = lambda_eval(form, d_lead, u) if side == "left" else lambda_eval(form, u, d_lead)
        coeff = exact_divide(remainder[r_lead], d_lc).shift(-twist)
        quotient[u] = coeff

        for v, lv, cv in d_terms:
            if side == "left":
                t = sum(x * y for x, y in zip(v, lu, strict=True))
            else:
                t = sum(x * y for x, y in zip(u, lv, strict=True))
            w = add_vectors(u, v)
            prod = (cv * coeff).shift(t)
            rest = remainder[w] - prod if w in remainder else -prod
            if rest:
                remainder[w] = rest
            else:
                remainder.pop(w, None)

        if remainder and max(remainder) >= r_lead:
            raise NotDivisible(f"leading exponent did not decrease at {r_lead}", operation)
    return TorusElement._wrap(n, quotient)
