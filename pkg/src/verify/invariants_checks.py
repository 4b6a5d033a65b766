"""
Suite invariants: Reidemeister move pairs, then G_j on the shipped graph corpus.

Values are computed once per (diagram, j) and reused across checks.
"""
from typing import Dict, List, Tuple

from src.diagram.fusion import eval_single
from src.diagram.library import cycle_graph, graph_corpus, move_pairs
from src.invariant import (
    EmbeddedGraphDiagram,
    add_curl,
    bracket,
    disjoint_union,
    forget_vertices,
    g_invariant,
    is_eulerian,
    mirror,
    wedge_at_vertex,
)
from src.qpoly import RatFunc
from src.recoupling import delta
from src.utils.logger import get_logger

logger = get_logger(__name__)

CYCLE_UNIONS = (
    "unknot-1v", "unknot-2v", "unknot-3v", "unknot-left-1v",
    "trefoil-1v", "trefoil-2v", "trefoil-3v", "trefoil-left-1v",
    "figure-eight-1v", "hopf-2v", "hopf-3v",
)
MIRRORED = ("trefoil-1v", "trefoil-2v", "figure-eight-1v")
SEPARATED_PAIRS = (
    ("unknot-1v", "unknot-2v"),
    ("unknot-1v", "trefoil-1v"),
    ("theta", "unknot-1v"),
    ("hopf-2v", "unknot-left-1v"),
)
# (left diagram, its vertex on the right boundary, right diagram, its vertex on the left boundary)
WEDGE_PAIRS = (
    ("unknot-1v", "v0", "unknot-left-1v", "v0"),
    ("trefoil-1v", "v0", "unknot-left-1v", "v0"),
    ("unknot-1v", "v0", "trefoil-left-1v", "v0"),
    ("unknot-2v", "v1", "unknot-left-1v", "v0"),
)
CURLED = (("unknot-1v", 1, 0), ("trefoil-1v", 2, 0), ("theta", 1, 1))


class _Values:
    """G_j memo keyed by a name and j."""

    def __init__(self, threads: int):
        self.threads = threads
        self.computed: Dict[Tuple[str, int], RatFunc] = {}

    def get(self, name: str, d: EmbeddedGraphDiagram, j: int) -> RatFunc:
        key = (name, j)
        if key not in self.computed:
            self.computed[key] = g_invariant(d, j, self.threads)
            logger.debug("G_%d(%s) = %s", j, name, self.computed[key])
        return self.computed[key]


def check_invariants(max_label: int, threads: int = 1) -> List[str]:
    """Return a list of violation strings. Empty list = clean."""
    violations: List[str] = []
    corpus: Dict[str, EmbeddedGraphDiagram] = {name: EmbeddedGraphDiagram(d) for name, d in graph_corpus()}
    values = _Values(threads)
    labels = range(1, min(max_label, 2) + 1)

    def check(condition: bool, message: str) -> None:
        if not condition:
            violations.append(message)

    for name, before, after in move_pairs():
        check(eval_single(before) == eval_single(after), f"eval_single changes across the move {name}")

    # Eulerian vanishing
    for name, d in corpus.items():
        if is_eulerian(d.graph):
            continue
        for j in (1, 3):
            check(values.get(name, d, j).is_zero(), f"G_{j}({name}) ≠ 0 on a graph with an odd vertex")

    # forgetting bivalent vertices recovers |bracket|²
    for name in CYCLE_UNIONS:
        d = corpus[name]
        link = forget_vertices(d.diagram)
        b = RatFunc(bracket(link))
        scaled = values.get(name, d, 1) * RatFunc(delta(1)) ** d.vertex_count
        check(scaled == b * b.bar(), f"G_1({name})·Δ_1^v ≠ ⟨L⟩·bar⟨L⟩")

    for name in MIRRORED:
        d = corpus[name]
        reflected = EmbeddedGraphDiagram(mirror(d.diagram))
        for j in labels:
            check(values.get(name, d, j) == values.get(f"mirror {name}", reflected, j),
                  f"G_{j}({name}) differs from its mirror image")

    for first, second in SEPARATED_PAIRS:
        union = disjoint_union(corpus[first], corpus[second])
        for j in labels:
            product = values.get(first, corpus[first], j) * values.get(second, corpus[second], j)
            check(values.get(f"{first} ⊔ {second}", union, j) == product,
                  f"G_{j} is not multiplicative on {first} ⊔ {second}")

    for first, v1, second, v2 in WEDGE_PAIRS:
        wedge = wedge_at_vertex(corpus[first], corpus[second], v1, v2)
        for j in labels:
            product = values.get(first, corpus[first], j) * values.get(second, corpus[second], j)
            check(values.get(f"{first} ∨ {second}", wedge, j) == product,
                  f"G_{j} is not multiplicative on the wedge of {first} and {second}")

    for name, slice_index, position in CURLED:
        base = corpus[name]
        for sign in (1, -1):
            curled = EmbeddedGraphDiagram(add_curl(base.diagram, slice_index, position, sign))
            for j in labels:
                check(values.get(f"{name} curl {slice_index}/{position}/{sign}", curled, j)
                      == values.get(name, base, j),
                      f"a {'positive' if sign > 0 else 'negative'} curl changes G_{j}({name})")

    for name, d in corpus.items():
        for j in labels:
            check(values.get(name, d, j).is_bar_invariant(), f"G_{j}({name}) is not bar-invariant")

    # a bare 2-cycle: one bivalent vertex on an unknot gives Δ_j
    for j in labels:
        check(values.get("cycle", EmbeddedGraphDiagram(cycle_graph(1)), j) == RatFunc(delta(j)),
              f"G_{j}(one-vertex unknot) ≠ Δ_{j}")
    return violations