"""The combinatorial graph underlying an embedded-graph diagram."""
from typing import Dict, Iterable, List, Set, Tuple

import networkx as nx


class AbstractGraph:
    """
    Vertices, edges and incidences of a graph (loops and multi-edges allowed).

    Backed by a ``networkx.MultiGraph`` keyed by edge id; a loop counts twice
    toward the valence of its vertex.
    """

    def __init__(self, vertices: Iterable[str], edges: Iterable[Tuple[str, str, str]]):
        self._graph = nx.MultiGraph()
        self._graph.add_nodes_from(vertices)
        self._incidence: Dict[str, Tuple[str, str]] = {}
        for eid, u, v in edges:
            self._graph.add_edge(u, v, key=eid)
            self._incidence[eid] = (u, v)

    @property
    def vertices(self) -> List[str]:
        return list(self._graph.nodes)

    @property
    def edges(self) -> List[str]:
        return list(self._incidence)

    @property
    def vertex_count(self) -> int:
        return self._graph.number_of_nodes()

    def incidence(self, eid: str) -> Tuple[str, str]:
        return self._incidence[eid]

    def valence(self, vid: str) -> int:
        return self._graph.degree(vid)

    @property
    def valences(self) -> Dict[str, int]:
        return {v: d for v, d in self._graph.degree()}

    def components(self) -> List[Set[str]]:
        return sorted((set(c) for c in nx.connected_components(self._graph)), key=lambda c: min(c))

    @property
    def component_count(self) -> int:
        return nx.number_connected_components(self._graph) if self.vertex_count else 0

    def __repr__(self) -> str:
        return f"AbstractGraph({self.vertex_count} vertices, {len(self._incidence)} edges)"
