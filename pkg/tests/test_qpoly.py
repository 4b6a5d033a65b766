from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.errors import ZeroDenominatorError
from src.qpoly import (
    A,
    LOOP_VALUE,
    ONE,
    ZERO,
    LaurentPoly,
    RatFunc,
    poly_gcd,
    quantum_factorial,
    quantum_integer,
    ratfunc_normalize,
)

polys = st.dictionaries(
    st.integers(min_value=-8, max_value=8),
    st.integers(min_value=-5, max_value=5),
    max_size=5,
).map(LaurentPoly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


class TestLaurentPoly:
    def test_zero_coefficients_dropped(self):
        p = LaurentPoly({2: 0, -1: 3})
        assert p.items() == ((-1, 3),)

    def test_fraction_coefficients_normalized(self):
        p = LaurentPoly({0: Fraction(4, 2)})
        assert p.coefficient(0) == 2
        assert isinstance(p.coefficient(0), int)

    def test_loop_value(self):
        assert LOOP_VALUE == -(A ** 2) - A ** -2

    def test_negative_power(self):
        assert A ** -3 * A ** 3 == ONE

    def test_degrees_and_span(self):
        p = LaurentPoly({-4: 1, 0: 1, 4: 1})
        assert p.min_degree == -4
        assert p.max_degree == 4
        assert p.span == 8

    def test_str(self):
        assert str(LaurentPoly({-4: 1, 0: 1, 4: 1})) == "1*A^-4 + 1*A^0 + 1*A^4"
        assert str(LOOP_VALUE) == "-1*A^-2 - 1*A^2"
        assert str(ZERO) == "0"

    def test_parse_inverts_str(self):
        p = LaurentPoly({-3: Fraction(1, 2), 1: -2, 5: 7})
        assert LaurentPoly.parse(str(p)) == p

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            LaurentPoly.parse("A squared")

    def test_bar(self):
        assert (A ** 3 + 2).bar() == A ** -3 + 2

    def test_bool_coefficient_rejected(self):
        with pytest.raises(TypeError):
            LaurentPoly({0: True})

    def test_json_round_trip(self):
        p = LaurentPoly({-2: Fraction(-1, 3), 6: 4})
        assert LaurentPoly.from_json(p.to_json()) == p

    @given(polys, polys, polys)
    @settings(max_examples=1000)
    def test_ring_laws(self, p, q, r):
        assert p + q == q + p
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p - p == ZERO

    @given(polys, polys)
    @settings(max_examples=200)
    def test_bar_is_ring_involution(self, p, q):
        assert (p * q).bar() == p.bar() * q.bar()
        assert (p + q).bar() == p.bar() + q.bar()
        assert p.bar().bar() == p


class TestQuantumIntegers:
    def test_small_values(self):
        assert quantum_integer(0) == ZERO
        assert quantum_integer(1) == ONE
        assert quantum_integer(2) == A ** 2 + A ** -2
        assert quantum_integer(3) == A ** 4 + 1 + A ** -4

    @pytest.mark.parametrize("n", range(1, 9))
    def test_span_runs_over_a_squared(self, n):
        assert quantum_integer(n).span == 4 * (n - 1)

    def test_loop_is_minus_two(self):
        assert LOOP_VALUE == -quantum_integer(2)

    @pytest.mark.parametrize("n", range(2, 10))
    def test_recursion(self, n):
        assert quantum_integer(2) * quantum_integer(n) == quantum_integer(n + 1) + quantum_integer(n - 1)

    def test_factorial(self):
        assert quantum_factorial(0) == ONE
        assert quantum_factorial(3) == quantum_integer(2) * quantum_integer(3)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            quantum_integer(-1)


class TestRatFunc:
    def test_reduces_common_factor(self):
        x = RatFunc(quantum_integer(4), quantum_integer(2))
        assert x.is_laurent()
        assert x.as_laurent() == A ** 4 + A ** -4

    def test_str_with_denominator(self):
        x = RatFunc(ONE, quantum_integer(2))
        assert str(x).startswith("(") and " / (" in str(x)

    def test_str_without_denominator(self):
        assert str(RatFunc(LOOP_VALUE)) == str(LOOP_VALUE)

    def test_zero_denominator(self):
        with pytest.raises(ZeroDenominatorError):
            RatFunc(ONE, ZERO)

    def test_zero_denominator_is_zero_division(self):
        with pytest.raises(ZeroDivisionError):
            RatFunc(ONE) / ZERO

    def test_equality_across_representations(self):
        assert RatFunc(A ** 2, A) == RatFunc(A)
        assert RatFunc(2 * A, 4 * A ** 3) == RatFunc(LaurentPoly({-2: Fraction(1, 2)}))

    def test_mixed_arithmetic(self):
        x = RatFunc(ONE, LOOP_VALUE)
        assert x * LOOP_VALUE == RatFunc(1)
        assert 1 - x * LOOP_VALUE == RatFunc(0)
        assert 1 / x == RatFunc(LOOP_VALUE)

    def test_bar(self):
        x = RatFunc(A, quantum_integer(3))
        assert x.bar() == RatFunc(A ** -1, quantum_integer(3))

    def test_json_round_trip(self):
        x = RatFunc(A ** 3 - 1, quantum_integer(3))
        assert RatFunc.from_json(x.to_json()) == x

    def test_not_laurent(self):
        with pytest.raises(ValueError):
            RatFunc(ONE, LOOP_VALUE).as_laurent()

    def test_normalize_makes_denominator_monic(self):
        x = ratfunc_normalize(ONE, 2 * A ** 3 + 2 * A)
        assert x.denominator == A ** 2 + 1
        assert x.numerator == LaurentPoly({-1: Fraction(1, 2)})

    def test_normalize_cancels_common_factor(self):
        x = ratfunc_normalize(A ** 4 - 1, A ** 2 - 1)
        assert x.is_laurent()
        assert x.as_laurent() == A ** 2 + 1

    @given(nonzero_polys, nonzero_polys)
    @settings(max_examples=100, deadline=None)
    def test_division_inverts_multiplication(self, p, q):
        assert RatFunc(p) / q * q == RatFunc(p)

    @given(polys, nonzero_polys, polys, nonzero_polys)
    @settings(max_examples=1000, deadline=None)
    def test_sum_of_fractions(self, a, b, c, d):
        assert RatFunc(a, b) + RatFunc(c, d) == RatFunc(a * d + c * b, b * d)

    @given(nonzero_polys, nonzero_polys, nonzero_polys)
    @settings(max_examples=100, deadline=None)
    def test_gcd_divides(self, p, q, r):
        g = poly_gcd(p * r, q * r)
        assert RatFunc(p * r, g).is_laurent()
        assert RatFunc(q * r, g).is_laurent()
