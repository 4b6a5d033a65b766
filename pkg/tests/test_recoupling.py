import threading

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.errors import InadmissibleLabelsError
from src.qpoly import A, LOOP_VALUE, RatFunc, quantum_integer
from src.recoupling import (
    AdmissibleTriple,
    RecouplingCache,
    admissible_thirds,
    admissible_triples,
    delta,
    is_admissible,
    lambda_neg,
    lambda_pos,
    six_j,
    tet,
    theta,
    twist,
)

labels = st.integers(min_value=0, max_value=4)


class TestAdmissibility:
    @pytest.mark.parametrize("triple,expected", [
        ((1, 1, 0), True),
        ((1, 1, 2), True),
        ((2, 2, 2), True),
        ((1, 1, 1), False),
        ((1, 2, 4), False),
        ((0, 0, 0), True),
        ((-1, 1, 0), False),
    ])
    def test_is_admissible(self, triple, expected):
        assert is_admissible(*triple) is expected

    def test_thirds(self):
        assert list(admissible_thirds(1, 2)) == [1, 3]
        assert list(admissible_thirds(2, 2)) == [0, 2, 4]

    def test_triples(self):
        assert sorted(admissible_triples(1)) == [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)]

    def test_bundles(self):
        t = AdmissibleTriple(a=1, b=2, c=3)
        assert t.admissible
        assert t.bundles() == (0, 2, 1)

    @given(labels, labels, labels)
    def test_symmetric(self, a, b, c):
        assert is_admissible(a, b, c) == is_admissible(b, c, a) == is_admissible(b, a, c)


class TestDelta:
    def test_string_form(self):
        assert str(delta(2)) == "1*A^-4 + 1*A^0 + 1*A^4"

    def test_low_values(self):
        assert delta(0) == 1
        assert delta(1) == LOOP_VALUE

    @pytest.mark.parametrize("n", range(1, 8))
    def test_recursion(self, n):
        assert delta(n + 1) == LOOP_VALUE * delta(n) - delta(n - 1)

    def test_negative(self):
        with pytest.raises(ValueError):
            delta(-1)


class TestTheta:
    def test_edge_of_label_zero(self):
        for a in range(5):
            assert theta(a, a, 0) == RatFunc(delta(a))
            assert theta(0, a, a) == RatFunc(delta(a))

    def test_one_one_two(self):
        assert theta(1, 1, 2) == RatFunc(delta(2))

    def test_two_two_two(self):
        value = theta(2, 2, 2)
        assert not value.is_zero()
        assert value.is_bar_invariant()

    def test_inadmissible_is_zero(self):
        assert theta(1, 2, 4).is_zero()
        assert theta(1, 1, 1).is_zero()

    @given(labels, labels, labels)
    @settings(max_examples=60, deadline=None)
    def test_permutation_invariant(self, a, b, c):
        assert theta(a, b, c) == theta(c, a, b) == theta(b, a, c)


class TestTet:
    def test_symmetries(self):
        value = tet(2, 2, 2, 1, 1, 1)
        assert not value.is_zero()
        assert tet(1, 1, 2, 2, 2, 1) == value
        assert tet(2, 1, 1, 1, 2, 2) == value

    def test_bar_invariant(self):
        assert tet(2, 2, 2, 1, 1, 1).is_bar_invariant()
        assert tet(2, 2, 2, 2, 2, 2).is_bar_invariant()

    def test_zero_edge_collapses_to_theta(self):
        assert tet(1, 1, 0, 1, 1, 2) == theta(1, 1, 2)
        assert tet(1, 1, 0, 1, 1, 0) == theta(1, 1, 0)

    def test_inadmissible_face(self):
        assert tet(1, 1, 1, 1, 1, 1).is_zero()

    def test_six_j_from_cup_cap(self):
        assert six_j(1, 1, 0, 1, 1, 2) == RatFunc(1)
        assert six_j(1, 1, 0, 1, 1, 0) == RatFunc(1) / LOOP_VALUE

    def test_six_j_inadmissible_target(self):
        assert six_j(1, 1, 0, 1, 1, 1).is_zero()

    def test_completeness_of_cup_cap(self):
        # id on two strands: P_2 + (1/δ) cup-cap
        total = sum((six_j(1, 1, e, 1, 1, 0) * six_j(1, 1, 0, 1, 1, e) for e in (0, 2)), RatFunc(0))
        assert total == RatFunc(1)


class TestBraiding:
    def test_lambda_values(self):
        assert lambda_pos(1, 1, 2) == RatFunc(A)
        assert lambda_pos(1, 1, 0) == RatFunc(-(A ** -3))

    def test_lambda_neg_is_bar(self):
        assert lambda_neg(1, 1, 0) == RatFunc(-(A ** 3))

    def test_lambda_inadmissible(self):
        with pytest.raises(InadmissibleLabelsError) as info:
            lambda_pos(1, 1, 4)
        assert info.value.triple == (1, 1, 4)

    def test_twist(self):
        assert twist(0) == RatFunc(1)
        assert twist(1) == RatFunc(-(A ** 3))
        assert twist(2) == RatFunc(A ** 8)

    def test_twist_is_unit(self):
        for n in range(6):
            assert twist(n) * twist(n).bar() == RatFunc(1)

    def test_quantum_dimension_sign(self):
        for n in range(6):
            expected = quantum_integer(n + 1) if n % 2 == 0 else -quantum_integer(n + 1)
            assert delta(n) == expected


class TestRecouplingCache:
    def test_computed_once(self):
        cache = RecouplingCache()
        first = theta(1, 1, 2, cache)
        second = theta(2, 1, 1, cache)
        assert first == second
        assert cache.misses == 1
        assert cache.size("theta") == 1

    def test_clear(self):
        cache = RecouplingCache()
        delta(3, cache)
        cache.clear()
        assert cache.size("delta") == 0
        assert cache.misses == 0

    def test_concurrent_readers(self):
        cache = RecouplingCache()
        results = []

        def read():
            results.append(tet(2, 2, 2, 2, 2, 2, cache))

        workers = [threading.Thread(target=read) for _ in range(8)]
        for w in workers:
            w.start()
        for w in workers:
            w.join()
        assert len(set(results)) == 1
        assert cache.size("tet") == 1
