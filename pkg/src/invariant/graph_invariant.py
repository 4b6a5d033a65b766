"""
The G_j invariant of embedded graphs.

Every vertex of valence n is replaced by its n-vertex expansion on the
caterpillar tree of its leaf sequence; each choice of internal labels gives a
closed balanced network, evaluated with the pair-label product rule. The value
is the coefficient-weighted sum over all choices.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from itertools import product
from typing import Callable, Dict, List, Optional, Tuple

from src.diagram.fusion import eval_pair
from src.diagram.network import ColoredNetwork, PairNetwork
from src.diagram.slices import Cup, SlicedDiagram, Vertex
from src.diagram.tracing import Tracing, edge_colors, trace, underlying_graph
from src.errors import InvalidDiagramError
from src.models.graph import AbstractGraph
from src.models.types import Engine
from src.qpoly import RAT_ONE, RAT_ZERO, RatFunc
from src.tl import oracle_evaluate
from src.utils.logger import get_logger
from src.vertices import NVertexExpansion, VertexSpec, n_vertex
from src.vertices.realize import term_word

logger = get_logger(__name__)

PairEvaluator = Callable[[PairNetwork], RatFunc]


class EmbeddedGraphDiagram:
    """A graph-kind sliced diagram, its abstract graph and an optional edge coloring."""

    __slots__ = ("diagram", "coloring", "_graph", "_tracing")

    def __init__(self, diagram: SlicedDiagram, coloring: Optional[Dict[str, int]] = None):
        if diagram.kind != "graph":
            raise InvalidDiagramError(f"expected a graph diagram, got kind {diagram.kind!r}")
        self.diagram = diagram
        self._tracing: Tracing = trace(diagram)
        self._graph: AbstractGraph = underlying_graph(diagram)
        self.coloring = dict(coloring) if coloring is not None else None
        if self.coloring is not None:
            unknown = set(self.coloring) - set(self._graph.edges)
            if unknown:
                raise InvalidDiagramError(f"coloring names unknown edges: {', '.join(sorted(unknown))}")

    @property
    def graph(self) -> AbstractGraph:
        return self._graph

    @property
    def tracing(self) -> Tracing:
        return self._tracing

    @property
    def vertex_count(self) -> int:
        return self._graph.vertex_count

    def colors(self, default: Optional[int] = None) -> Dict[str, int]:
        """One label per edge: inline colors, the diagram's map, then ``coloring``, then ``default``."""
        return edge_colors(self.diagram, self._tracing, self.coloring, default)

    def __repr__(self) -> str:
        return f"EmbeddedGraphDiagram({self._graph!r})"


def is_eulerian(g: AbstractGraph) -> bool:
    return all(d % 2 == 0 for d in g.valences.values())


# ── state sum ────────────────────────────────────────────────────────────────

def vertex_expansions(d: EmbeddedGraphDiagram, colors: Dict[str, int]) -> List[Tuple[int, Vertex, NVertexExpansion]]:
    tracing = d.tracing
    out = []
    for idx, s in enumerate(d.diagram.slices):
        if not isinstance(s, Vertex):
            continue
        legs = tuple(colors[tracing.edge_id(tracing.port_edge[(s.id, p)])] for p in range(s.valence))
        spec = VertexSpec(source_labels=legs[:s.n_in], target_labels=legs[s.n_in:])
        out.append((idx, s, n_vertex(spec)))
    return out


def _term_network(d: EmbeddedGraphDiagram, colors: Dict[str, int],
                  substitutions: Dict[int, List]) -> PairNetwork:
    tracing = d.tracing
    word: List = []
    for idx, s in enumerate(d.diagram.slices):
        if isinstance(s, Cup):
            word.append(s.model_copy(update={"color": colors[tracing.edge_id(
                tracing.segment_edge[tracing.cup_segment[idx]])]}))
        elif idx in substitutions:
            word.extend(substitutions[idx])
        else:
            word.append(s)
    net = ColoredNetwork(SlicedDiagram(kind="network", slices=tuple(word)))
    return PairNetwork.balanced(net)


def oracle_pair(net: PairNetwork) -> RatFunc:
    """The pair product with both coordinates expanded by the oracle."""
    first = oracle_evaluate(net.coordinate(0))
    second = first if net.is_balanced() else oracle_evaluate(net.coordinate(1))
    return first * second.bar()


EVALUATORS: Dict[str, PairEvaluator] = {"fast": eval_pair, "oracle": oracle_pair}


def state_sum(d: EmbeddedGraphDiagram, colors: Dict[str, int], threads: int = 1,
              engine: Engine = "fast") -> RatFunc:
    evaluate = EVALUATORS[engine]
    expansions = vertex_expansions(d, colors)
    if any(v.is_zero for _, _, v in expansions):
        logger.debug("a vertex expansion is empty: value 0")
        return RAT_ZERO

    def run(choice) -> RatFunc:
        coefficient = RAT_ONE
        substitutions = {}
        for (idx, s, v), (internal, c) in zip(expansions, choice):
            coefficient = coefficient * c
            substitutions[idx] = [t.shifted(s.at) for t in term_word(v, internal, s.id)]
        return coefficient * evaluate(_term_network(d, colors, substitutions))

    choices = list(product(*(v.terms for _, _, v in expansions)))
    logger.debug("state sum: %d vertices, %d terms", len(expansions), len(choices))
    if threads > 1 and len(choices) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(run, choices))
    else:
        values = [run(c) for c in choices]
    total = RAT_ZERO
    for value in values:
        total = total + value
    return total


def g_invariant(d: EmbeddedGraphDiagram, j: int, threads: int = 1, engine: Engine = "fast") -> RatFunc:
    """G_j: every edge labeled (j, j)."""
    if j < 0:
        raise ValueError(f"labels are non-negative twice-spins, got {j}")
    colors = {eid: j for eid in d.graph.edges}
    return state_sum(d, colors, threads, engine)


def g_invariant_colored(d: EmbeddedGraphDiagram, colors: Optional[Dict[str, int]] = None,
                        threads: int = 1, engine: Engine = "fast") -> RatFunc:
    """The edge-colored invariant; colors come from the diagram, its coloring, or ``colors``."""
    if colors is not None:
        d = EmbeddedGraphDiagram(d.diagram, {**(d.coloring or {}), **colors})
    return state_sum(d, d.colors(), threads, engine)


__all__ = [
    "EmbeddedGraphDiagram",
    "g_invariant",
    "g_invariant_colored",
    "is_eulerian",
    "oracle_pair",
    "state_sum",
    "vertex_expansions",
]
