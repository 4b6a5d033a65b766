"""
Kauffman bracket by skein recursion on the slice word.

    ⟨cross+⟩ = A ⟨identity⟩ + A⁻¹ ⟨cap; cup⟩
    ⟨cross-⟩ = A⁻¹ ⟨identity⟩ + A ⟨cap; cup⟩
    ⟨k loops⟩ = δ^k,  ⟨empty⟩ = 1

This path is kept apart from the recoupling evaluators on purpose: it is the
cross-check for the j = 1 invariant.
"""
from functools import lru_cache
from typing import Dict, List, Tuple

import networkx as nx

from src.diagram.slices import Cap, Cross, Cup, SlicedDiagram, Vertex
from src.errors import InvalidDiagramError
from src.qpoly import A, LOOP_VALUE, ONE, LaurentPoly
from src.utils.logger import get_logger

logger = get_logger(__name__)

Word = Tuple[Tuple[str, int], ...]


def _word(d: SlicedDiagram) -> Word:
    for idx, s in enumerate(d.slices):
        if isinstance(s, Vertex):
            raise InvalidDiagramError("the bracket takes a link diagram without vertices", idx)
    return tuple((s.op, s.at) for s in d.slices)


def _loops(word: Word) -> int:
    """Components of a crossing-free word."""
    g = nx.Graph()
    strands: List[int] = []
    for op, at in word:
        if op == "cup":
            seg = g.number_of_nodes()
            g.add_node(seg)
            strands[at:at] = [seg, seg]
        else:
            g.add_edge(strands[at], strands[at + 1])
            del strands[at:at + 2]
    return nx.number_connected_components(g)


@lru_cache(maxsize=None)
def _bracket(word: Word) -> LaurentPoly:
    for i, (op, at) in enumerate(word):
        if op.startswith("cross"):
            identity = word[:i] + word[i + 1:]
            turned = word[:i] + (("cap", at), ("cup", at)) + word[i + 1:]
            a, b = (A, A ** -1) if op == "cross+" else (A ** -1, A)
            return a * _bracket(identity) + b * _bracket(turned)
    return LOOP_VALUE ** _loops(word)


def bracket(d: SlicedDiagram) -> LaurentPoly:
    """Unnormalized Kauffman bracket, unknot = δ."""
    word = _word(d)
    logger.debug("bracket: %d slices, %d crossings", len(word), sum(op.startswith("cross") for op, _ in word))
    return _bracket(word)


# ── orientation ──────────────────────────────────────────────────────────────

def strand_directions(d: SlicedDiagram) -> Dict[Tuple[int, int], int]:
    """
    Direction (+1 up, -1 down) of each cup half, keyed by (cup slice, side).

    Each component is oriented so that the left half of its lowest cup runs
    up; halves joined by a cup or a cap run opposite ways.
    """
    g = nx.Graph()
    strands: List[Tuple[int, int]] = []
    for idx, s in enumerate(d.slices):
        if isinstance(s, Cup):
            left, right = (idx, 0), (idx, 1)
            g.add_edge(left, right)
            strands[s.at:s.at] = [left, right]
        elif isinstance(s, Cap):
            g.add_edge(strands[s.at], strands[s.at + 1])
            del strands[s.at:s.at + 2]
        elif isinstance(s, Cross):
            strands[s.at], strands[s.at + 1] = strands[s.at + 1], strands[s.at]
        else:
            raise InvalidDiagramError("orientation needs a link diagram", idx)
    direction: Dict[Tuple[int, int], int] = {}
    for component in sorted(nx.connected_components(g), key=min):
        root = min(component)
        direction[root] = 1
        for u, v in nx.bfs_edges(g, root):
            direction[v] = -direction[u]
    return direction


def writhe(d: SlicedDiagram) -> int:
    direction = strand_directions(d)
    strands: List[Tuple[int, int]] = []
    total = 0
    for idx, s in enumerate(d.slices):
        if isinstance(s, Cup):
            strands[s.at:s.at] = [(idx, 0), (idx, 1)]
        elif isinstance(s, Cap):
            del strands[s.at:s.at + 2]
        else:
            total += s.sign * direction[strands[s.at]] * direction[strands[s.at + 1]]
            strands[s.at], strands[s.at + 1] = strands[s.at + 1], strands[s.at]
    return total


def jones(d: SlicedDiagram, normalized: bool = False) -> LaurentPoly:
    """The bracket, times (−A³)^(−w) when ``normalized``."""
    value = bracket(d)
    if normalized:
        value = value * (LaurentPoly.monomial(-1, 3) ** -writhe(d))
    return value


__all__ = ["bracket", "jones", "strand_directions", "writhe"]
