"""
Strand tracing: partition a sliced diagram into edges.

Segments are created by cups (one bent segment) and vertex outputs (one per
port), numbered in creation order. Caps glue two segments; crossings carry them
through unchanged. Edges are the glued classes, named ``e0, e1, ...`` by their
first segment.
"""
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from src.diagram.slices import Cap, Cross, Cup, SlicedDiagram, Vertex
from src.errors import InvalidDiagramError
from src.models.graph import AbstractGraph

EdgeEnd = Tuple[str, int]  # (vertex id, port index)


class TracedEdge(BaseModel):
    id: str
    ends: List[EdgeEnd] = Field(default_factory=list)
    segments: List[int] = Field(default_factory=list)

    @property
    def closed(self) -> bool:
        return not self.ends


class Tracing(BaseModel):
    edges: List[TracedEdge]
    segment_edge: Dict[int, int]
    levels: List[List[int]]  # segment ids on the strands before each slice, plus the final level
    port_edge: Dict[EdgeEnd, int]
    cup_segment: Dict[int, int]  # slice index -> created segment
    output_segments: Dict[int, List[int]]  # slice index -> created segments

    def edge_of_strand(self, slice_index: int, position: int) -> int:
        return self.segment_edge[self.levels[slice_index][position]]

    def edge_id(self, index: int) -> str:
        return self.edges[index].id


class _UnionFind:
    def __init__(self) -> None:
        self.parent: List[int] = []

    def add(self) -> int:
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def trace(d: SlicedDiagram) -> Tracing:
    uf = _UnionFind()
    strands: List[int] = []
    levels: List[List[int]] = []
    ends: Dict[int, List[EdgeEnd]] = {}
    cup_segment: Dict[int, int] = {}
    output_segments: Dict[int, List[int]] = {}

    for idx, s in enumerate(d.slices):
        levels.append(list(strands))
        if isinstance(s, Cup):
            seg = uf.add()
            cup_segment[idx] = seg
            strands[s.at:s.at] = [seg, seg]
        elif isinstance(s, Cap):
            uf.union(strands[s.at], strands[s.at + 1])
            del strands[s.at:s.at + 2]
        elif isinstance(s, Cross):
            strands[s.at], strands[s.at + 1] = strands[s.at + 1], strands[s.at]
        else:
            for port, seg in enumerate(strands[s.at:s.at + s.n_in]):
                ends.setdefault(seg, []).append((s.id, port))
            created = [uf.add() for _ in range(s.n_out)]
            for k, seg in enumerate(created):
                ends.setdefault(seg, []).append((s.id, s.n_in + k))
            output_segments[idx] = created
            strands[s.at:s.at + s.n_in] = created
    levels.append(list(strands))

    roots = sorted({uf.find(seg) for seg in range(len(uf.parent))})
    index_of_root = {root: i for i, root in enumerate(roots)}
    edges = [TracedEdge(id=f"e{i}") for i in range(len(roots))]
    segment_edge: Dict[int, int] = {}
    port_edge: Dict[EdgeEnd, int] = {}
    for seg in range(len(uf.parent)):
        e = index_of_root[uf.find(seg)]
        segment_edge[seg] = e
        edges[e].segments.append(seg)
        for end in ends.get(seg, []):
            edges[e].ends.append(end)
            port_edge[end] = e
    return Tracing(
        edges=edges,
        segment_edge=segment_edge,
        levels=levels,
        port_edge=port_edge,
        cup_segment=cup_segment,
        output_segments=output_segments,
    )


def edge_colors(d: SlicedDiagram, tracing: Optional[Tracing] = None,
                colors: Optional[Dict[str, int]] = None, default: Optional[int] = None) -> Dict[str, int]:
    """
    Merge inline colors, the diagram's color map, an explicit map and a
    default into one color per edge id. Disagreements are errors.
    """
    tracing = tracing or trace(d)
    found: Dict[int, int] = {}
    origin: Dict[int, int] = {}

    def assign(e: int, c: int, where: Optional[int]) -> None:
        if e in found and found[e] != c:
            raise InvalidDiagramError(
                f"edge {tracing.edge_id(e)} colored both {found[e]} and {c}", where)
        found[e] = c
        if where is not None:
            origin.setdefault(e, where)

    for idx, s in enumerate(d.slices):
        if isinstance(s, Cup) and s.color is not None:
            assign(tracing.segment_edge[tracing.cup_segment[idx]], s.color, idx)
        elif isinstance(s, Vertex) and s.out_colors is not None:
            for seg, c in zip(tracing.output_segments[idx], s.out_colors):
                assign(tracing.segment_edge[seg], c, idx)
    by_id = {edge.id: i for i, edge in enumerate(tracing.edges)}
    for mapping in (d.colors or {}, colors or {}):
        for eid, c in mapping.items():
            if eid not in by_id:
                raise InvalidDiagramError(f"color given for unknown edge {eid!r}")
            assign(by_id[eid], c, None)
    result: Dict[str, int] = {}
    for i, edge in enumerate(tracing.edges):
        if i in found:
            result[edge.id] = found[i]
        elif default is not None:
            result[edge.id] = default
        else:
            raise InvalidDiagramError(f"edge {edge.id} has no color")
    return result


def underlying_graph(d: SlicedDiagram) -> AbstractGraph:
    """The abstract graph of a graph-kind diagram: Vertex slices and traced edges."""
    if d.kind == "link":
        raise InvalidDiagramError("link diagrams have no underlying graph; use kind 'graph'")
    tracing = trace(d)
    for edge in tracing.edges:
        if edge.closed:
            first = _first_slice_of(d, tracing, edge.segments[0])
            raise InvalidDiagramError(
                f"closed component {edge.id} has no vertex; add a 2-vertex to make it a cycle", first)
    edges = [(edge.id, edge.ends[0][0], edge.ends[1][0]) for edge in tracing.edges]
    return AbstractGraph(vertices=[s.id for s in d.vertices], edges=edges)


def _first_slice_of(d: SlicedDiagram, tracing: Tracing, segment: int) -> Optional[int]:
    for idx, seg in tracing.cup_segment.items():
        if seg == segment:
            return idx
    return None


