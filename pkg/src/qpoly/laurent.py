"""
Laurent polynomials in the bracket variable A with exact rational coefficients.

Values are immutable and hashable. The stored term tuple is sorted by exponent
and never holds a zero coefficient, so structural equality is value equality.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Mapping, Tuple, Union

Coefficient = Union[int, Fraction]
PolyLike = Union["LaurentPoly", int, Fraction]


def canonical_coefficient(c: object) -> Coefficient:
    """Return ``c`` as an int when integral, else as a Fraction."""
    if isinstance(c, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return canonical_coefficient(Fraction(c.numerator, c.denominator))
    if isinstance(c, str):
        return canonical_coefficient(Fraction(c))
    raise TypeError(f"unsupported coefficient type: {type(c).__name__}")


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[int, object], Iterable[Tuple[int, object]]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[int, Coefficient] = {}
        for exponent, coeff in items:
            e = int(exponent)
            acc[e] = acc.get(e, 0) + canonical_coefficient(coeff)
        self._terms: Tuple[Tuple[int, Coefficient], ...] = tuple(
            (e, canonical_coefficient(c)) for e, c in sorted(acc.items()) if c != 0
        )
        self._hash = None

    @classmethod
    def _from_dict(cls, acc: Dict[int, Coefficient]) -> "LaurentPoly":
        poly = cls.__new__(cls)
        poly._terms = tuple(
            (e, c.numerator if isinstance(c, Fraction) and c.denominator == 1 else c)
            for e, c in sorted(acc.items())
            if c != 0
        )
        poly._hash = None
        return poly

    # ── constructors ──────────────────────────────────────────────────────

    @classmethod
    def constant(cls, c: object) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, c: object, exponent: int) -> "LaurentPoly":
        return cls({exponent: c})

    @classmethod
    def coerce(cls, value: PolyLike) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        return cls.constant(value)

    # ── inspection ────────────────────────────────────────────────────────

    @property
    def terms(self) -> Dict[int, Coefficient]:
        return dict(self._terms)

    def items(self) -> Tuple[Tuple[int, Coefficient], ...]:
        return self._terms

    def coefficient(self, exponent: int) -> Coefficient:
        for e, c in self._terms:
            if e == exponent:
                return c
        return 0

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return self._terms[0][0]

    @property
    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return self._terms[-1][0]

    @property
    def span(self) -> int:
        return self.max_degree - self.min_degree if self._terms else 0

    @property
    def leading_coefficient(self) -> Coefficient:
        return self._terms[-1][1] if self._terms else 0

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and self._terms[0][0] == 0)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    # ── ring operations ───────────────────────────────────────────────────

    def __add__(self, other: PolyLike) -> "LaurentPoly":
        if not isinstance(other, (LaurentPoly, int, Fraction)):
            return NotImplemented
        other = LaurentPoly.coerce(other)
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly._from_dict(acc)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._from_dict({e: -c for e, c in self._terms})

    def __sub__(self, other: PolyLike) -> "LaurentPoly":
        if not isinstance(other, (LaurentPoly, int, Fraction)):
            return NotImplemented
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other: PolyLike) -> "LaurentPoly":
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other: PolyLike) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc: Dict[int, Coefficient] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentPoly._from_dict(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if self.is_monomial():
                (e, c), = self._terms
                return LaurentPoly({-e * -n: Fraction(1) / Fraction(c) ** -n})
            raise ValueError("negative powers exist only for monomials")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: object) -> "LaurentPoly":
        c = canonical_coefficient(c)
        if c == 0:
            return ZERO
        return LaurentPoly._from_dict({e: v * c for e, v in self._terms})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by A^k."""
        if k == 0:
            return self
        return LaurentPoly._from_dict({e + k: c for e, c in self._terms})

    def bar(self) -> "LaurentPoly":
        """The substitution A -> A^-1."""
        return LaurentPoly._from_dict({-e: c for e, c in self._terms})

    def is_bar_invariant(self) -> bool:
        return self == self.bar()

    # ── comparison ────────────────────────────────────────────────────────

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == LaurentPoly.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    # ── serialization ─────────────────────────────────────────────────────

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self._terms):
            magnitude = f"{abs(c)}*A^{e}"
            if i == 0:
                parts.append(f"-{magnitude}" if c < 0 else magnitude)
            else:
                parts.append(f" - {magnitude}" if c < 0 else f" + {magnitude}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def to_json(self) -> Dict[str, Dict[str, str]]:
        return {"A": {str(e): str(c) for e, c in self._terms}}

    @classmethod
    def from_json(cls, data: Mapping[str, Mapping[str, str]]) -> "LaurentPoly":
        return cls({int(e): Fraction(c) for e, c in data["A"].items()})

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Inverse of ``str``: accepts ``c*A^e`` terms joined by `` + `` / `` - ``."""
        text = text.strip()
        if text == "0":
            return ZERO
        acc: Dict[int, Coefficient] = {}
        sign = 1
        for token in text.replace(" - ", " + -").split(" + "):
            token = token.strip()
            sign = -1 if token.startswith("-") else 1
            coeff, _, exponent = token.lstrip("-").partition("*A^")
            if not exponent:
                raise ValueError(f"malformed term {token!r}")
            e = int(exponent)
            acc[e] = acc.get(e, 0) + sign * canonical_coefficient(Fraction(coeff))
        return cls(acc)


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
A = LaurentPoly.monomial(1, 1)


def bar(p: LaurentPoly) -> LaurentPoly:
    return p.bar()
