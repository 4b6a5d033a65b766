"""
Rational functions of A in a reduced canonical form.

A RatFunc is num/den with gcd(num, den) = 1 up to powers of A, the denominator
monic with minimal exponent 0. Normalization shifts both parts to ordinary
polynomials and takes the gcd in ``sympy``'s sparse ring QQ[A].
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Tuple, Union

from sympy import QQ
from sympy.polys.rings import ring

from src.errors import ZeroDenominatorError
from src.qpoly.laurent import ONE, ZERO, LaurentPoly

_RING, _ = ring("A", QQ)

RatLike = Union["RatFunc", LaurentPoly, int, Fraction]


def _to_ring(p: LaurentPoly, shift: int):
    return _RING.from_dict(
        {(e + shift,): QQ(Fraction(c).numerator, Fraction(c).denominator) for e, c in p.items()}
    )


def _from_ring(element, shift: int) -> LaurentPoly:
    acc: Dict[int, object] = {}
    for (e,), c in element.terms():
        acc[e + shift] = Fraction(int(c.numerator), int(c.denominator))
    return LaurentPoly(acc)


def poly_gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Monic gcd of two Laurent polynomials, with minimal exponent 0."""
    if p.is_zero():
        return q if q.is_zero() else _monic(q.shift(-q.min_degree))
    if q.is_zero():
        return _monic(p.shift(-p.min_degree))
    g = _to_ring(p, -p.min_degree).gcd(_to_ring(q, -q.min_degree))
    return _monic(_from_ring(g, 0))


def exact_quotient(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """p / q when q divides p in the Laurent ring, else ValueError."""
    if q.is_zero():
        raise ZeroDenominatorError("division by the zero polynomial")
    if p.is_zero():
        return ZERO
    if q.is_monomial():
        (e, c), = q.items()
        return p.shift(-e).scale(Fraction(1) / Fraction(c))
    quotient, remainder = _to_ring(p, -p.min_degree).div(_to_ring(q, -q.min_degree))
    if remainder:
        raise ValueError("polynomial division is not exact")
    return _from_ring(quotient, p.min_degree - q.min_degree)


def _monic(p: LaurentPoly) -> LaurentPoly:
    lc = p.leading_coefficient
    return p if lc in (0, 1) else p.scale(Fraction(1) / Fraction(lc))


class RatFunc:
    __slots__ = ("numerator", "denominator", "_hash")

    def __init__(self, numerator: Union[LaurentPoly, int, Fraction] = 0,
                 denominator: Union[LaurentPoly, int, Fraction] = 1):
        num, den = _normalize(LaurentPoly.coerce(numerator), LaurentPoly.coerce(denominator))
        self.numerator: LaurentPoly = num
        self.denominator: LaurentPoly = den
        self._hash = None

    @classmethod
    def _reduced(cls, num: LaurentPoly, den: LaurentPoly) -> "RatFunc":
        value = cls.__new__(cls)
        value.numerator = num
        value.denominator = den
        value._hash = None
        return value

    @classmethod
    def coerce(cls, value: RatLike) -> "RatFunc":
        if isinstance(value, RatFunc):
            return value
        return cls._reduced(LaurentPoly.coerce(value), ONE)

    # ── arithmetic ────────────────────────────────────────────────────────

    def __add__(self, other: RatLike) -> "RatFunc":
        if not isinstance(other, (RatFunc, LaurentPoly, int, Fraction)):
            return NotImplemented
        other = RatFunc.coerce(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.denominator == other.denominator:
            return RatFunc(self.numerator + other.numerator, self.denominator)
        return RatFunc(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc._reduced(-self.numerator, self.denominator)

    def __sub__(self, other: RatLike) -> "RatFunc":
        if not isinstance(other, (RatFunc, LaurentPoly, int, Fraction)):
            return NotImplemented
        return self + (-RatFunc.coerce(other))

    def __rsub__(self, other: RatLike) -> "RatFunc":
        return RatFunc.coerce(other) - self

    def __mul__(self, other: RatLike) -> "RatFunc":
        if not isinstance(other, (RatFunc, LaurentPoly, int, Fraction)):
            return NotImplemented
        other = RatFunc.coerce(other)
        if self.is_zero() or other.is_zero():
            return RAT_ZERO
        if self.denominator == ONE and other.denominator == ONE:
            return RatFunc._reduced(self.numerator * other.numerator, ONE)
        return RatFunc(self.numerator * other.numerator, self.denominator * other.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other: RatLike) -> "RatFunc":
        if not isinstance(other, (RatFunc, LaurentPoly, int, Fraction)):
            return NotImplemented
        other = RatFunc.coerce(other)
        if other.is_zero():
            raise ZeroDenominatorError("division by the zero rational function")
        return RatFunc(self.numerator * other.denominator, self.denominator * other.numerator)

    def __rtruediv__(self, other: RatLike) -> "RatFunc":
        return RatFunc.coerce(other) / self

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            return RAT_ONE / (self ** -n)
        return RatFunc(self.numerator ** n, self.denominator ** n)

    def bar(self) -> "RatFunc":
        return RatFunc(self.numerator.bar(), self.denominator.bar())

    def is_bar_invariant(self) -> bool:
        return self == self.bar()

    # ── inspection ────────────────────────────────────────────────────────

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_laurent(self) -> bool:
        return self.denominator == ONE

    def as_laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.numerator

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatFunc):
            return self.numerator == other.numerator and self.denominator == other.denominator
        if isinstance(other, (LaurentPoly, int, Fraction)) and not isinstance(other, bool):
            return self.denominator == ONE and self.numerator == LaurentPoly.coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.numerator, self.denominator))
        return self._hash

    def __str__(self) -> str:
        if self.denominator == ONE:
            return str(self.numerator)
        return f"({self.numerator}) / ({self.denominator})"

    def __repr__(self) -> str:
        return f"RatFunc({str(self)!r})"

    def to_json(self) -> Dict[str, object]:
        return {"numerator": self.numerator.to_json(), "denominator": self.denominator.to_json()}

    @classmethod
    def from_json(cls, data) -> "RatFunc":
        return cls(LaurentPoly.from_json(data["numerator"]), LaurentPoly.from_json(data["denominator"]))


def _normalize(num: LaurentPoly, den: LaurentPoly) -> Tuple[LaurentPoly, LaurentPoly]:
    if den.is_zero():
        raise ZeroDenominatorError("rational function with zero denominator")
    if num.is_zero():
        return ZERO, ONE
    # den -> A^s * D with D(0) != 0; A never divides D, so powers of A cancel freely
    num = num.shift(-den.min_degree)
    den = den.shift(-den.min_degree)
    if not den.is_constant():
        m = num.min_degree
        _, n_cof, d_cof = _to_ring(num, -m).cofactors(_to_ring(den, 0))
        num = _from_ring(n_cof, m)
        den = _from_ring(d_cof, 0)
    lc = den.leading_coefficient
    if lc != 1:
        inverse = Fraction(1) / Fraction(lc)
        num = num.scale(inverse)
        den = den.scale(inverse)
    return num, den


def ratfunc_normalize(num: LaurentPoly, den: LaurentPoly) -> RatFunc:
    """Reduced canonical representative of num/den."""
    return RatFunc(num, den)


RAT_ZERO = RatFunc._reduced(ZERO, ONE)
RAT_ONE = RatFunc._reduced(ONE, ONE)

__all__ = [
    "RatFunc",
    "RAT_ONE",
    "RAT_ZERO",
    "exact_quotient",
    "poly_gcd",
    "ratfunc_normalize",
]
