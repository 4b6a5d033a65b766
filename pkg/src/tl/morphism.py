"""
Formal linear combinations of loop-free planar matchings.

Coefficients are Laurent polynomials over one shared denominator, so a whole
projector is ``terms / denominator``. Closed loops are resolved into the loop
value δ = −A² − A⁻² as soon as they appear.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, Mapping, Optional

from src.errors import BoundaryMismatchError
from src.qpoly import LOOP_VALUE, ONE, ZERO, LaurentPoly, RatFunc, exact_quotient, poly_gcd
from src.tl.matching import PlanarMatching


def loop_power(k: int) -> LaurentPoly:
    return LOOP_VALUE ** k


class TLMorphism:
    __slots__ = ("n_in", "n_out", "terms", "denominator")

    def __init__(self, n_in: int, n_out: int,
                 terms: Optional[Mapping[PlanarMatching, LaurentPoly]] = None,
                 denominator: LaurentPoly = ONE):
        self.n_in = n_in
        self.n_out = n_out
        combined: Dict[PlanarMatching, LaurentPoly] = {}
        for m, c in (terms or {}).items():
            if (m.n_in, m.n_out) != (n_in, n_out):
                raise BoundaryMismatchError(f"{m!r} does not fit {n_in}->{n_out}")
            if m.loops:
                c = c * loop_power(m.loops)
                m = m.without_loops()
            combined[m] = combined.get(m, LaurentPoly()) + c
        self.terms: Dict[PlanarMatching, LaurentPoly] = {m: c for m, c in combined.items() if c}
        self.denominator = denominator

    @classmethod
    def identity(cls, n: int) -> "TLMorphism":
        return cls(n, n, {PlanarMatching.identity(n): ONE})

    @classmethod
    def from_matching(cls, m: PlanarMatching, coeff: LaurentPoly = ONE) -> "TLMorphism":
        return cls(m.n_in, m.n_out, {m: coeff})

    # ── algebra ───────────────────────────────────────────────────────────

    def __add__(self, other: "TLMorphism") -> "TLMorphism":
        if (self.n_in, self.n_out) != (other.n_in, other.n_out):
            raise BoundaryMismatchError("cannot add morphisms with different boundaries")
        g = poly_gcd(self.denominator, other.denominator)
        left = exact_quotient(other.denominator, g)
        right = exact_quotient(self.denominator, g)
        terms: Dict[PlanarMatching, LaurentPoly] = {m: c * left for m, c in self.terms.items()}
        for m, c in other.terms.items():
            terms[m] = terms.get(m, LaurentPoly()) + c * right
        return TLMorphism(self.n_in, self.n_out, terms, self.denominator * left).reduced()

    def scale(self, numerator: LaurentPoly, denominator: LaurentPoly = ONE) -> "TLMorphism":
        return TLMorphism(
            self.n_in, self.n_out,
            {m: c * numerator for m, c in self.terms.items()},
            self.denominator * denominator,
        ).reduced()

    def then(self, upper: "TLMorphism") -> "TLMorphism":
        """``upper`` stacked on top of ``self``."""
        if self.n_out != upper.n_in:
            raise BoundaryMismatchError(f"boundary mismatch: {self.n_out} outputs vs {upper.n_in} inputs")
        terms: Dict[PlanarMatching, LaurentPoly] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in upper.terms.items():
                stacked = m1.then(m2)
                coeff = c1 * c2
                if stacked.loops:
                    coeff = coeff * loop_power(stacked.loops)
                    stacked = stacked.without_loops()
                terms[stacked] = terms.get(stacked, LaurentPoly()) + coeff
        return TLMorphism(self.n_in, upper.n_out, terms, self.denominator * upper.denominator).reduced()

    def tensor(self, right: "TLMorphism") -> "TLMorphism":
        terms = {
            m1.tensor(m2): c1 * c2
            for m1, c1 in self.terms.items()
            for m2, c2 in right.terms.items()
        }
        return TLMorphism(self.n_in + right.n_in, self.n_out + right.n_out, terms,
                          self.denominator * right.denominator).reduced()

    def reduced(self) -> "TLMorphism":
        """Cancel the common factor of all coefficients and the denominator."""
        den = self.denominator
        if not self.terms:
            return self if den == ONE else TLMorphism(self.n_in, self.n_out, {}, ONE)
        g = poly_gcd(den, ZERO)
        for c in self.terms.values():
            if g.is_constant():
                break
            g = poly_gcd(g, c)
        terms = self.terms
        if not g.is_constant():
            terms = {m: exact_quotient(c, g) for m, c in terms.items()}
            den = exact_quotient(den, g)
        shift, lc = -den.min_degree, den.leading_coefficient
        if shift == 0 and lc == 1 and terms is self.terms:
            return self
        inv = Fraction(1) / Fraction(lc)
        result = TLMorphism.__new__(TLMorphism)
        result.n_in, result.n_out = self.n_in, self.n_out
        result.terms = {m: c.shift(shift).scale(inv) for m, c in terms.items()}
        result.denominator = den.shift(shift).scale(inv)
        return result

    # ── inspection ────────────────────────────────────────────────────────

    def coefficient(self, m: PlanarMatching) -> RatFunc:
        return RatFunc(self.terms.get(m, LaurentPoly()), self.denominator)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TLMorphism):
            return NotImplemented
        if (self.n_in, self.n_out) != (other.n_in, other.n_out):
            return False
        keys = set(self.terms) | set(other.terms)
        zero = LaurentPoly()
        return all(
            self.terms.get(m, zero) * other.denominator == other.terms.get(m, zero) * self.denominator
            for m in keys
        )

    __hash__ = None  # type: ignore[assignment]

    def closure(self) -> RatFunc:
        """Right-hand trace closure of an n -> n morphism, as a scalar."""
        total = LaurentPoly()
        for m, c in self.terms.items():
            total = total + c * loop_power(m.closure_loops())
        return RatFunc(total, self.denominator)

    def __repr__(self) -> str:
        return f"TLMorphism({self.n_in}->{self.n_out}, {len(self.terms)} terms)"


def tl_compose(f: TLMorphism, g: TLMorphism) -> TLMorphism:
    """Apply ``f`` then ``g`` (g stacked on top); needs f.n_out == g.n_in."""
    return f.then(g)
