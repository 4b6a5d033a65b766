import pytest

from src.diagram import (
    Cap,
    ColoredNetwork,
    Cup,
    PairLabel,
    PairNetwork,
    SlicedDiagram,
    Vertex,
    edge_colors,
    eval_pair,
    eval_planar,
    eval_single,
    load_diagram,
    parse_json,
    parse_text,
    serialize_json,
    serialize_text,
    trace,
    underlying_graph,
)
from src.diagram.library import (
    bubble_theta_network,
    crossing_corpus,
    hopf_network,
    loop_network,
    move_pairs,
    planar_corpus,
    prism_network,
    tet_network,
    theta_network,
    twisted_theta_network,
)
from src.errors import DiagramSchemaError, DiagramSyntaxError, InvalidDiagramError
from src.qpoly import RatFunc
from src.recoupling import delta, lambda_pos, tet, theta, twist
from src.tl import oracle_evaluate
from tests.conftest import THETA_TEXT


class TestTextFormat:
    def test_theta(self):
        d = parse_text(THETA_TEXT)
        assert d.kind == "graph"
        assert [s.id for s in d.vertices] == ["u", "v"]

    def test_default_kind(self):
        assert parse_text("cup 0\ncap 0\n").kind == "link"
        assert parse_text("vertex 0 in=0 out=2 id=a\ncap 0\n").kind == "graph"

    def test_comments_and_colors(self):
        d = parse_text("kind network\n# a loop\ncup 0 color=2  # bent\ncap 0\ncolor e0 2\n")
        assert d.slices[0] == Cup(at=0, color=2)
        assert d.colors == {"e0": 2}

    def test_vertex_colors(self):
        d = parse_text("kind network\nvertex 0 in=0 out=3 id=u colors=1,1,2\nvertex 0 in=3 out=0 id=v\n")
        assert d.slices[0].out_colors == (1, 1, 2)

    def test_serialize_reparses(self):
        d = parse_text("kind network\ncup 0 color=1\ncup 1\ncross- 0\ncap 1\ncap 0\ncolor e0 1\n")
        assert parse_text(serialize_text(d)) == d

    @pytest.mark.parametrize("text,line,column", [
        ("cup x", 1, 5),
        ("cup 0\nfoo 1", 2, 1),
        ("cup 0 colour=1\ncap 0", 1, 7),
        ("kind braid", 1, 1),
        ("vertex 0 in=0 out=3", 1, 1),
        ("cup 0\ncap 0 extra", 2, 7),
        ("cup", 1, 4),
        ("vertex 0 in=0 out=2 id=a b=1", 1, 26),
    ])
    def test_syntax_errors(self, text, line, column):
        with pytest.raises(DiagramSyntaxError) as info:
            parse_text(text)
        assert (info.value.line, info.value.column) == (line, column)
        assert str(info.value).startswith(f"line {line}, column {column}:")

    def test_edge_colored_twice(self):
        with pytest.raises(DiagramSyntaxError):
            parse_text("cup 0\ncap 0\ncolor e0 1\ncolor e0 2\n")


class TestJsonFormat:
    def test_parse(self, corpus_path):
        with open(corpus_path("theta.json"), encoding="utf-8") as f:
            d = parse_json(f)
        assert d == parse_text(THETA_TEXT)

    def test_serialize_reparses(self):
        d = parse_text("kind network\nvertex 0 in=0 out=3 id=u colors=1,1,2\nvertex 0 in=3 out=0 id=v\n")
        assert parse_json(serialize_json(d)) == d

    def test_text_and_json_agree(self, corpus_path):
        assert load_diagram(corpus_path("trefoil.txt")) == load_diagram(corpus_path("trefoil.json"))

    def test_schema_paths(self):
        doc = '{"format": "spinnet-diagram/1", "kind": "network", "slices": [{"op": "cup", "at": -1}]}'
        with pytest.raises(DiagramSchemaError) as info:
            parse_json(doc)
        assert [path for path, _ in info.value.problems] == ["$.slices[0].at"]

    @pytest.mark.parametrize("doc", [
        '{"kind": "link", "slices": []}',
        '{"format": "spinnet-diagram/2", "kind": "link", "slices": []}',
        '{"format": "spinnet-diagram/1", "kind": "braid", "slices": []}',
        '{"format": "spinnet-diagram/1", "kind": "link", "slices": [{"op": "twist", "at": 0}]}',
        '{"format": "spinnet-diagram/1", "kind": "link", "slices": [], "extra": 1}',
        'not json',
    ])
    def test_schema_errors(self, doc):
        with pytest.raises(DiagramSchemaError):
            parse_json(doc)

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            load_diagram(str(tmp_path / "absent.json"))


class TestInvalidDiagrams:
    def test_open_diagram(self):
        with pytest.raises(InvalidDiagramError) as info:
            parse_text("cup 0\ncup 0\ncap 0\n")
        assert info.value.slice_index == 2

    def test_cap_out_of_range(self):
        with pytest.raises(InvalidDiagramError) as info:
            SlicedDiagram(kind="link", slices=(Cup(at=0), Cap(at=1)))
        assert info.value.slice_index == 1

    def test_duplicate_vertex_id(self):
        with pytest.raises(InvalidDiagramError) as info:
            parse_text("cup 0\nvertex 0 in=1 out=1 id=a\nvertex 0 in=1 out=1 id=a\ncap 0\n")
        assert info.value.slice_index == 2

    def test_vertex_in_link(self):
        with pytest.raises(InvalidDiagramError):
            parse_text("kind link\nvertex 0 in=0 out=2 id=a\ncap 0\n")

    def test_color_count(self):
        with pytest.raises(InvalidDiagramError):
            parse_text("vertex 0 in=0 out=2 id=a colors=1\ncap 0\n")

    def test_vertex_between_cup_and_cap_is_accepted(self):
        # strand counts balance; the cup and the cap become loops at one 4-valent vertex
        d = parse_text("cup 0\nvertex 0 in=2 out=2 id=v\ncap 0\n")
        assert d.kind == "graph"
        g = underlying_graph(d)
        assert g.valences == {"v": 4}
        assert len(g.edges) == 2


class TestTracing:
    def test_theta_edges(self):
        t = trace(parse_text(THETA_TEXT))
        assert [e.id for e in t.edges] == ["e0", "e1", "e2"]
        for e in t.edges:
            assert sorted(v for v, _ in e.ends) == ["u", "v"]

    def test_closed_component(self, unknot_link):
        t = trace(unknot_link)
        assert len(t.edges) == 1
        assert t.edges[0].closed

    def test_trefoil_is_one_component(self, trefoil_link):
        assert len(trace(trefoil_link).edges) == 1

    def test_conflicting_colors(self):
        d = parse_text("kind network\ncup 0 color=1\ncap 0\ncolor e0 2\n")
        with pytest.raises(InvalidDiagramError):
            edge_colors(d)

    def test_unknown_edge(self):
        d = parse_text("kind network\ncup 0\ncap 0\n")
        with pytest.raises(InvalidDiagramError):
            edge_colors(d, colors={"e7": 1})

    def test_default_and_missing(self):
        d = parse_text("kind network\ncup 0\ncap 0\n")
        assert edge_colors(d, default=3) == {"e0": 3}
        with pytest.raises(InvalidDiagramError):
            edge_colors(d)

    def test_underlying_graph(self):
        g = underlying_graph(parse_text(THETA_TEXT))
        assert g.vertex_count == 2
        assert sorted(g.edges) == ["e0", "e1", "e2"]
        assert g.valences == {"u": 3, "v": 3}

    def test_underlying_graph_needs_vertices_on_cycles(self):
        with pytest.raises(InvalidDiagramError) as info:
            underlying_graph(parse_text("kind graph\ncup 0\ncap 0\n"))
        assert info.value.slice_index == 0


class TestPlanarEvaluation:
    @pytest.mark.parametrize("c", range(4))
    def test_loop(self, c):
        assert eval_planar(loop_network(c)) == RatFunc(delta(c))

    @pytest.mark.parametrize("labels", [(1, 1, 2), (1, 1, 0), (2, 2, 2), (1, 2, 3)])
    def test_theta(self, labels):
        assert eval_planar(theta_network(*labels)) == theta(*labels)

    @pytest.mark.parametrize("labels", [(1, 1, 2, 1, 1, 2), (1, 1, 0, 1, 1, 2), (2, 2, 2, 2, 2, 2)])
    def test_tetrahedron(self, labels):
        assert eval_planar(tet_network(*labels)) == tet(*labels)

    def test_bubble(self):
        # a (d,e) bigon on the c edge contributes θ(c,d,e)/Δ_c
        expected = theta(1, 1, 2) * theta(2, 1, 1) / delta(2)
        assert eval_planar(bubble_theta_network(1, 1, 2, 1, 1)) == expected

    def test_matches_oracle(self):
        net = tet_network(1, 1, 2, 1, 1, 2)
        assert eval_planar(net) == oracle_evaluate(net, budget=100_000)

    def test_prism_matches_oracle(self):
        net = prism_network((1, 1, 0, 1, 0, 1, 1, 1, 0))
        assert eval_planar(net) == oracle_evaluate(net, budget=1_000_000)

    @pytest.mark.parametrize("name,net", planar_corpus(1), ids=lambda x: x if isinstance(x, str) else None)
    def test_planar_values_are_bar_invariant(self, name, net):
        assert eval_planar(net).is_bar_invariant(), name

    def test_rejects_crossings(self):
        with pytest.raises(InvalidDiagramError):
            eval_planar(hopf_network(1, 1))


class TestFusion:
    def test_twisted_theta(self):
        value = eval_single(twisted_theta_network(1, 1, 2))
        assert value == lambda_pos(1, 1, 2) * theta(1, 1, 2)

    @pytest.mark.parametrize("a,b", [(1, 1), (1, 2)])
    def test_hopf_matches_oracle(self, a, b):
        net = hopf_network(a, b)
        assert eval_single(net) == oracle_evaluate(net, budget=1_000_000)

    def test_threads_do_not_change_the_value(self):
        net = hopf_network(2, 2)
        assert eval_single(net, threads=4) == eval_single(net)

    def test_curl_is_twist(self, corpus_path):
        net = ColoredNetwork(load_diagram(corpus_path("curl-1.json")))
        assert eval_single(net) == twist(1) * delta(1)

    def test_inverse_orientation_is_bar(self):
        net = hopf_network(1, 1)
        assert eval_single(net, "A_inverse") == eval_single(net).bar()

    @pytest.mark.parametrize("name,net", crossing_corpus(), ids=lambda x: x if isinstance(x, str) else None)
    def test_bar_equivariant_on_crossing_corpus(self, name, net):
        assert eval_single(net, "A_inverse") == eval_single(net).bar(), name

    def test_twisted_theta_mirror_is_bar(self):
        mirrored = eval_single(twisted_theta_network(1, 1, 2, sign=-1))
        assert mirrored == eval_single(twisted_theta_network(1, 1, 2)).bar()
        assert mirrored != eval_single(twisted_theta_network(1, 1, 2))

    def test_balanced_pair_is_norm(self):
        net = hopf_network(1, 2)
        s = eval_single(net)
        assert eval_pair(PairNetwork.balanced(net)) == s * s.bar()

    def test_unbalanced_pair(self):
        d = parse_text("kind network\ncup 0\ncap 0\n")
        net = PairNetwork(d, {"e0": PairLabel(first=1, second=2)})
        assert not net.is_balanced()
        assert eval_pair(net) == RatFunc(delta(1)) * RatFunc(delta(2)).bar()

    def test_pair_labels_required(self):
        d = parse_text("kind network\ncup 0\ncap 0\n")
        with pytest.raises(InvalidDiagramError):
            PairNetwork(d, {})


class TestReidemeisterMoves:
    @pytest.mark.parametrize("name,before,after", move_pairs(), ids=lambda x: x if isinstance(x, str) else None)
    def test_value_survives_the_move(self, name, before, after):
        assert eval_single(before) == eval_single(after), name

    @pytest.mark.parametrize("name,before,after", move_pairs()[:2], ids=lambda x: x if isinstance(x, str) else None)
    def test_oracle_agrees(self, name, before, after):
        assert oracle_evaluate(after, budget=1_000_000) == oracle_evaluate(before, budget=1_000_000)


def test_vertex_ports_run_counter_clockwise():
    v = Vertex(at=0, n_in=2, n_out=3, id="x")
    assert v.ccw_ports() == [0, 1, 4, 3, 2]
