"""
Diagram combinators: separated and almost-separated unions, mirror images,
framing curls and forgetting bivalent vertices.

Colorings are carried inline (cup and vertex-output colors) through the
combinators, since edge ids are renumbered by the new slice word.
"""
from typing import List, Optional, Set

from src.diagram.fusion import annotated_slices
from src.diagram.network import ColoredNetwork
from src.diagram.slices import Cap, Cross, Cup, SlicedDiagram, Vertex, cross, strand_widths, vertex
from src.errors import InvalidDiagramError
from src.invariant.graph_invariant import EmbeddedGraphDiagram
from src.utils.logger import get_logger

logger = get_logger(__name__)


def _inline(d: EmbeddedGraphDiagram) -> List:
    try:
        return annotated_slices(ColoredNetwork(d.diagram, d.coloring))
    except InvalidDiagramError:
        # partially colored: keep what is inline already
        return list(d.diagram.slices)


def _renamed(slices: List, taken: Set[str], suffix: str) -> List:
    out = []
    for s in slices:
        if isinstance(s, Vertex) and s.id in taken:
            new_id = s.id + suffix
            while new_id in taken:
                new_id += suffix
            s = s.model_copy(update={"id": new_id})
        out.append(s)
    return out


def disjoint_union(d1: EmbeddedGraphDiagram, d2: EmbeddedGraphDiagram) -> EmbeddedGraphDiagram:
    """d2 drawn above d1; the two never meet."""
    lower = _inline(d1)
    upper = _renamed(_inline(d2), {s.id for s in d1.diagram.vertices}, "'")
    return EmbeddedGraphDiagram(SlicedDiagram(kind="graph", slices=tuple(lower + upper)))


def wedge_at_vertex(d1: EmbeddedGraphDiagram, d2: EmbeddedGraphDiagram,
                    v1: str, v2: str) -> EmbeddedGraphDiagram:
    """
    Merge vertex v1 of d1 with vertex v2 of d2 into one vertex.

    d2 is drawn to the right of d1. v1 must take the rightmost strands of d1
    at its slice and v2 the leftmost strands of d2, so the merged vertex sees
    all of d1's legs on one side of all of d2's.
    """
    s1 = _inline(d1)
    s2 = _renamed(_inline(d2), {s.id for s in d1.diagram.vertices}, "'")
    i1 = d1.diagram.vertex_index(v1)
    i2 = d2.diagram.vertex_index(v2)
    a, b = s1[i1], s2[i2]
    width = strand_widths(s1)[i1]
    if a.at + a.n_in != width:
        raise InvalidDiagramError(f"vertex {v1!r} does not take the rightmost strands of its diagram", i1)
    if b.at != 0:
        raise InvalidDiagramError(f"vertex {v2!r} does not take the leftmost strands of its diagram", i2)
    out_colors: Optional[tuple] = None
    if a.out_colors is not None and b.out_colors is not None:
        out_colors = a.out_colors + b.out_colors
    merged = vertex(a.at, a.n_in + b.n_in, a.n_out + b.n_out, a.id, out_colors)
    word = s1[:i1] + [s.shifted(width) for s in s2[:i2]] + [merged] + s1[i1 + 1:] + s2[i2 + 1:]
    logger.debug("wedge %s and %s: merged valence %d", v1, v2, merged.valence)
    return EmbeddedGraphDiagram(SlicedDiagram(kind="graph", slices=tuple(word)))


def mirror(d: SlicedDiagram) -> SlicedDiagram:
    """Every crossing sign flipped."""
    return d.with_slices([s.flipped() if isinstance(s, Cross) else s for s in d.slices], colors=d.colors)


def add_curl(d: SlicedDiagram, slice_index: int, position: int, sign: int = 1) -> SlicedDiagram:
    """Insert a curl on strand ``position`` just below slice ``slice_index``."""
    widths = strand_widths(d.slices)
    if not 0 <= slice_index <= len(d.slices):
        raise InvalidDiagramError(f"no slice {slice_index}")
    if not 0 <= position < widths[slice_index]:
        raise InvalidDiagramError(f"no strand {position} below slice {slice_index}", slice_index)
    curl = [Cup(at=position + 1), cross(sign, position), Cap(at=position + 1)]
    slices = list(d.slices)
    return d.with_slices(slices[:slice_index] + curl + slices[slice_index:], colors=d.colors)


def forget_vertices(d: SlicedDiagram) -> SlicedDiagram:
    """The link underlying a diagram whose vertices are all bivalent."""
    word = []
    for idx, s in enumerate(d.slices):
        if isinstance(s, Vertex):
            if s.valence != 2:
                raise InvalidDiagramError(f"vertex {s.id!r} has valence {s.valence}, not 2", idx)
            if s.n_in == 0:
                word.append(Cup(at=s.at))
            elif s.n_out == 0:
                word.append(Cap(at=s.at))
        elif isinstance(s, Cup):
            word.append(s.model_copy(update={"color": None}))
        else:
            word.append(s)
    return SlicedDiagram(kind="link", slices=tuple(word))


__all__ = ["add_curl", "disjoint_union", "forget_vertices", "mirror", "wedge_at_vertex"]
