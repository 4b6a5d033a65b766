from src.invariant.bracket import bracket, jones, writhe
from src.invariant.combinators import add_curl, disjoint_union, forget_vertices, mirror, wedge_at_vertex
from src.invariant.graph_invariant import (
    EmbeddedGraphDiagram,
    g_invariant,
    g_invariant_colored,
    is_eulerian,
    oracle_pair,
    state_sum,
)

__all__ = [
    "EmbeddedGraphDiagram",
    "add_curl",
    "bracket",
    "disjoint_union",
    "forget_vertices",
    "g_invariant",
    "g_invariant_colored",
    "is_eulerian",
    "jones",
    "mirror",
    "oracle_pair",
    "state_sum",
    "writhe",
]
