import pytest

from src.diagram import Cap, Cup, SlicedDiagram, load_diagram
from src.diagram.library import HOPF_WORD, cycle_graph, plat_diagram, tet_graph, twisted_theta_graph
from src.errors import InvalidDiagramError
from src.invariant import (
    EmbeddedGraphDiagram,
    add_curl,
    bracket,
    disjoint_union,
    forget_vertices,
    g_invariant,
    g_invariant_colored,
    is_eulerian,
    jones,
    mirror,
    state_sum,
    wedge_at_vertex,
    writhe,
)
from src.qpoly import A, LOOP_VALUE, LaurentPoly, RatFunc
from src.recoupling import delta

TREFOIL_BRACKET = LaurentPoly({7: 1, 3: 1, -1: 1, -9: -1})


class TestBracket:
    def test_unknot(self, unknot_link):
        assert bracket(unknot_link) == LOOP_VALUE

    def test_trefoil(self, trefoil_link):
        assert bracket(trefoil_link) == TREFOIL_BRACKET
        assert str(bracket(trefoil_link)) == "-1*A^-9 + 1*A^-1 + 1*A^3 + 1*A^7"

    def test_trefoil_factors_through_the_loop(self, trefoil_link):
        assert bracket(trefoil_link) == LOOP_VALUE * (A ** -7 - A ** -3 - A ** 5)

    def test_hopf(self):
        assert bracket(plat_diagram(HOPF_WORD)) == LOOP_VALUE * (-(A ** 4) - A ** -4)

    def test_mirror_is_bar(self, trefoil_link):
        assert bracket(mirror(trefoil_link)) == TREFOIL_BRACKET.bar()

    def test_corpus_file(self, corpus_path):
        assert bracket(load_diagram(corpus_path("trefoil.txt"))) == TREFOIL_BRACKET

    def test_rejects_vertices(self):
        with pytest.raises(InvalidDiagramError):
            bracket(cycle_graph(1))


class TestWrithe:
    def test_trefoil(self, trefoil_link):
        assert writhe(trefoil_link) == 3
        assert writhe(mirror(trefoil_link)) == -3

    def test_unknot(self, unknot_link):
        assert writhe(unknot_link) == 0

    def test_normalized_jones(self, trefoil_link):
        expected = LaurentPoly({-2: -1, -6: -1, -10: -1, -18: 1})
        assert jones(trefoil_link, normalized=True) == expected
        assert jones(trefoil_link) == TREFOIL_BRACKET

    def test_curl_does_not_change_normalized_value(self, unknot_link):
        for sign in (1, -1):
            curled = add_curl(unknot_link, 1, 0, sign)
            assert writhe(curled) == sign
            assert jones(curled, normalized=True) == LOOP_VALUE


class TestEmbeddedGraphDiagram:
    def test_theta(self, graphs):
        d = graphs["theta"]
        assert d.vertex_count == 2
        assert not is_eulerian(d.graph)

    def test_cycles_are_eulerian(self, graphs):
        assert is_eulerian(graphs["unknot-3v"].graph)
        assert is_eulerian(graphs["bouquet"].graph)

    def test_needs_graph_kind(self, trefoil_link):
        with pytest.raises(InvalidDiagramError):
            EmbeddedGraphDiagram(trefoil_link)

    def test_unknown_coloring(self, graphs):
        with pytest.raises(InvalidDiagramError):
            EmbeddedGraphDiagram(graphs["theta"].diagram, {"e9": 1})

    def test_closed_component(self):
        with pytest.raises(InvalidDiagramError):
            EmbeddedGraphDiagram(SlicedDiagram(kind="graph", slices=(Cup(at=0), Cap(at=0))))

    def test_tetrahedron(self):
        d = EmbeddedGraphDiagram(tet_graph())
        assert d.vertex_count == 4
        assert len(d.graph.edges) == 6
        assert set(d.graph.valences.values()) == {3}
        assert not is_eulerian(d.graph)

    def test_twisted_theta(self):
        d = EmbeddedGraphDiagram(twisted_theta_graph())
        assert d.vertex_count == 2
        assert d.graph.valences == {"u": 3, "v": 3}
        assert [c.sign for _, c in d.diagram.crossings] == [1]


class TestGInvariant:
    @pytest.mark.parametrize("j", [1, 2])
    def test_one_vertex_unknot(self, graphs, j):
        assert g_invariant(graphs["unknot-1v"], j) == RatFunc(delta(j))

    @pytest.mark.parametrize("j", [1, 2])
    def test_more_bivalent_vertices(self, graphs, j):
        assert g_invariant(graphs["unknot-2v"], j) == RatFunc(1)
        assert g_invariant(graphs["unknot-3v"], j) == RatFunc(1) / delta(j)

    def test_odd_vertex_vanishes(self, graphs):
        assert g_invariant(graphs["theta"], 1).is_zero()
        assert g_invariant(graphs["arc"], 1).is_zero()

    def test_theta_two(self, graphs):
        assert g_invariant(graphs["theta"], 2) == RatFunc(1)

    def test_colored(self, graphs, corpus_path):
        d = EmbeddedGraphDiagram(load_diagram(corpus_path("theta.json")))
        assert g_invariant_colored(d, {"e0": 2, "e1": 2, "e2": 2}) == g_invariant(graphs["theta"], 2)

    def test_colored_needs_every_edge(self, graphs):
        with pytest.raises(InvalidDiagramError):
            g_invariant_colored(graphs["theta"], {"e0": 2})

    def test_trefoil_is_bracket_norm(self, graphs, trefoil_link):
        b = RatFunc(bracket(trefoil_link))
        assert g_invariant(graphs["trefoil-1v"], 1) * LOOP_VALUE == b * b.bar()

    def test_forget_vertices(self, graphs):
        link = forget_vertices(graphs["trefoil-2v"].diagram)
        assert link.kind == "link"
        assert bracket(link) == TREFOIL_BRACKET
        with pytest.raises(InvalidDiagramError):
            forget_vertices(graphs["theta"].diagram)

    def test_mirror(self, graphs):
        d = graphs["trefoil-1v"]
        assert g_invariant(EmbeddedGraphDiagram(mirror(d.diagram)), 1) == g_invariant(d, 1)

    def test_curl(self, graphs):
        d = graphs["unknot-1v"]
        for sign in (1, -1):
            curled = EmbeddedGraphDiagram(add_curl(d.diagram, 1, 0, sign))
            assert g_invariant(curled, 2) == g_invariant(d, 2)

    def test_curl_position_checked(self, graphs):
        with pytest.raises(InvalidDiagramError):
            add_curl(graphs["unknot-1v"].diagram, 1, 5)
        with pytest.raises(InvalidDiagramError):
            add_curl(graphs["unknot-1v"].diagram, 9, 0)

    def test_disjoint_union(self, graphs):
        union = disjoint_union(graphs["unknot-1v"], graphs["trefoil-1v"])
        assert union.vertex_count == 2
        expected = g_invariant(graphs["unknot-1v"], 1) * g_invariant(graphs["trefoil-1v"], 1)
        assert g_invariant(union, 1) == expected

    def test_wedge(self, graphs):
        wedge = wedge_at_vertex(graphs["unknot-1v"], graphs["unknot-left-1v"], "v0", "v0")
        assert wedge.vertex_count == 1
        assert wedge.graph.valences == {"v0": 4}
        assert g_invariant(wedge, 1) == RatFunc(delta(1)) * delta(1)

    def test_wedge_needs_outer_strands(self, graphs):
        with pytest.raises(InvalidDiagramError):
            wedge_at_vertex(graphs["unknot-left-1v"], graphs["unknot-1v"], "v0", "v0")

    def test_negative_label(self, graphs):
        with pytest.raises(ValueError):
            g_invariant(graphs["theta"], -1)

    def test_threads(self, graphs):
        d = graphs["hopf-2v"]
        assert g_invariant(d, 1, threads=3) == g_invariant(d, 1)

    @pytest.mark.parametrize("name,j", [("unknot-1v", 1), ("theta", 2), ("unknot-2v", 2)])
    def test_oracle_engine(self, graphs, name, j):
        assert g_invariant(graphs[name], j, engine="oracle") == g_invariant(graphs[name], j)

    def test_bar_invariant(self, graphs):
        assert g_invariant(graphs["figure-eight-1v"], 1).is_bar_invariant()

    def test_tetrahedron_odd_label_vanishes(self):
        assert g_invariant(EmbeddedGraphDiagram(tet_graph()), 1).is_zero()

    def test_twisted_theta_matches_its_mirror(self, graphs):
        twisted = g_invariant(graphs["twisted-theta"], 2)
        assert g_invariant(EmbeddedGraphDiagram(twisted_theta_graph(-1)), 2) == twisted
        assert twisted.is_bar_invariant()

    def test_state_sum_with_explicit_colors(self, graphs):
        colors = {"e0": 2, "e1": 2, "e2": 2}
        assert state_sum(graphs["theta"], colors) == g_invariant(graphs["theta"], 2)
        assert state_sum(graphs["theta"], colors, engine="oracle") == RatFunc(1)

    def test_state_sum_vanishes_on_an_odd_vertex(self, graphs):
        assert state_sum(graphs["theta"], {"e0": 1, "e1": 1, "e2": 1}).is_zero()
