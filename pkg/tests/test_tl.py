import pytest

from src.diagram import ColoredNetwork, eval_single, load_diagram
from src.errors import BoundaryMismatchError, OracleBudgetExceeded
from src.qpoly import A, LOOP_VALUE, RatFunc
from src.recoupling import delta, theta
from src.tl import (
    PlanarMatching,
    TLMorphism,
    all_matchings,
    jones_wenzl,
    oracle_evaluate,
    projector_closure,
    tl_compose,
)


def e(n: int, at: int) -> TLMorphism:
    return TLMorphism.from_matching(PlanarMatching.e(n, at))


class TestPlanarMatching:
    def test_cup_then_cap_is_a_loop(self):
        m = PlanarMatching.cup().then(PlanarMatching.cap())
        assert (m.n_in, m.n_out) == (0, 0)
        assert m.loops == 1

    def test_identity_closure_counts_strands(self):
        assert PlanarMatching.identity(3).closure_loops() == 3

    def test_crossing_pairs_rejected(self):
        with pytest.raises(ValueError):
            PlanarMatching(0, 4, (2, 3, 0, 1))

    def test_odd_boundary_rejected(self):
        with pytest.raises(ValueError):
            PlanarMatching(1, 2, (1, 0, 2))

    def test_stacking_mismatch(self):
        with pytest.raises(BoundaryMismatchError):
            PlanarMatching.identity(2).then(PlanarMatching.identity(3))

    @pytest.mark.parametrize("n_in,n_out,count", [(0, 2, 1), (2, 2, 2), (3, 3, 5), (0, 6, 5), (4, 4, 14)])
    def test_catalan_counts(self, n_in, n_out, count):
        assert len(list(all_matchings(n_in, n_out))) == count


class TestTemperleyLieb:
    def test_e_squared_is_loop_times_e(self):
        assert e(3, 0).then(e(3, 0)) == e(3, 0).scale(LOOP_VALUE)

    def test_e_e_e(self):
        assert e(3, 0).then(e(3, 1)).then(e(3, 0)) == e(3, 0)

    def test_compose_stacks_second_on_top(self):
        assert tl_compose(e(3, 0), e(3, 1)) == e(3, 0).then(e(3, 1))
        assert tl_compose(e(2, 0), e(2, 0)) == e(2, 0).scale(LOOP_VALUE)

    def test_compose_needs_matching_boundaries(self):
        with pytest.raises(BoundaryMismatchError):
            tl_compose(TLMorphism.identity(2), TLMorphism.identity(3))

    def test_far_generators_commute(self):
        assert e(4, 0).then(e(4, 2)) == e(4, 2).then(e(4, 0))

    def test_addition_needs_matching_boundaries(self):
        with pytest.raises(BoundaryMismatchError):
            TLMorphism.identity(2) + TLMorphism.identity(3)

    def test_closure_of_identity(self):
        assert TLMorphism.identity(2).closure() == RatFunc(LOOP_VALUE ** 2)


class TestJonesWenzl:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_idempotent(self, n):
        p = jones_wenzl(n)
        assert p.then(p) == p

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_killed_by_caps(self, n):
        p = jones_wenzl(n)
        for at in range(n - 1):
            assert p.then(e(n, at)).is_zero()
            assert e(n, at).then(p).is_zero()

    def test_identity_coefficient(self):
        assert jones_wenzl(3).coefficient(PlanarMatching.identity(3)) == RatFunc(1)

    @pytest.mark.parametrize("n", range(0, 6))
    def test_closure_is_quantum_dimension(self, n):
        assert projector_closure(n) == RatFunc(delta(n))

    def test_negative_size(self):
        with pytest.raises(ValueError):
            jones_wenzl(-1)


class TestOracle:
    def test_colored_loop(self, corpus_path):
        net = ColoredNetwork(load_diagram(corpus_path("loop-2.json")))
        assert oracle_evaluate(net, budget=10_000) == RatFunc(delta(2))

    def test_theta_network(self, corpus_path):
        net = ColoredNetwork(load_diagram(corpus_path("theta-112.json")))
        assert oracle_evaluate(net, budget=10_000) == theta(1, 1, 2)

    def test_positive_curl(self, corpus_path):
        net = ColoredNetwork(load_diagram(corpus_path("curl-1.json")))
        assert oracle_evaluate(net, budget=10_000) == RatFunc(-(A ** 3) * LOOP_VALUE)

    def test_agrees_with_fused_evaluation(self, corpus_path):
        net = ColoredNetwork(load_diagram(corpus_path("curl-1.json")))
        assert oracle_evaluate(net, budget=10_000) == eval_single(net)

    def test_budget(self, corpus_path):
        net = ColoredNetwork(load_diagram(corpus_path("loop-2.json")))
        with pytest.raises(OracleBudgetExceeded) as info:
            oracle_evaluate(net, budget=1)
        assert info.value.budget == 1
        assert info.value.reached > 1

    def test_budget_from_environment(self, corpus_path, monkeypatch):
        monkeypatch.setenv("SPINNET_ORACLE_BUDGET", "1")
        net = ColoredNetwork(load_diagram(corpus_path("loop-2.json")))
        with pytest.raises(OracleBudgetExceeded):
            oracle_evaluate(net)
