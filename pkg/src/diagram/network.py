"""
Colored networks: a sliced diagram together with one twice-spin per edge.

The slice word fixes the embedding; the rotation system used by the planar
evaluator is read off the Vertex slices (see ``Vertex.ccw_ports``).
"""
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field

from src.diagram.slices import SlicedDiagram
from src.diagram.tracing import Tracing, edge_colors, trace
from src.errors import InvalidDiagramError


class ColoredNetwork:
    __slots__ = ("diagram", "tracing", "colors")

    def __init__(self, diagram: SlicedDiagram, colors: Optional[Dict[str, int]] = None,
                 default: Optional[int] = None, tracing: Optional[Tracing] = None):
        self.diagram = diagram
        self.tracing = tracing or trace(diagram)
        self.colors: Dict[str, int] = edge_colors(diagram, self.tracing, colors, default)

    def edge_color(self, index: int) -> int:
        return self.colors[self.tracing.edges[index].id]

    def strand_colors(self, slice_index: int) -> List[int]:
        """Colors of the strands just below slice ``slice_index``."""
        return [self.edge_color(self.tracing.segment_edge[seg])
                for seg in self.tracing.levels[slice_index]]

    @property
    def crossings(self):
        return self.diagram.crossings

    def is_planar(self) -> bool:
        return self.diagram.is_planar()

    def __repr__(self) -> str:
        return (f"ColoredNetwork({len(self.diagram.slices)} slices, "
                f"{len(self.tracing.edges)} edges, {len(self.crossings)} crossings)")


class PairLabel(BaseModel):
    first: int = Field(ge=0)
    second: int = Field(ge=0)

    @classmethod
    def balanced(cls, j: int) -> "PairLabel":
        return cls(first=j, second=j)

    @property
    def is_balanced(self) -> bool:
        return self.first == self.second


class PairNetwork:
    """A closed network whose edges carry pair labels (first, second)."""

    __slots__ = ("diagram", "tracing", "labels")

    def __init__(self, diagram: SlicedDiagram, labels: Dict[str, PairLabel]):
        self.diagram = diagram
        self.tracing = trace(diagram)
        missing = [e.id for e in self.tracing.edges if e.id not in labels]
        if missing:
            raise InvalidDiagramError(f"edges without pair labels: {', '.join(missing)}")
        self.labels = dict(labels)

    @classmethod
    def balanced(cls, net: ColoredNetwork) -> "PairNetwork":
        return cls(net.diagram, {eid: PairLabel.balanced(c) for eid, c in net.colors.items()})

    def is_balanced(self) -> bool:
        return all(label.is_balanced for label in self.labels.values())

    def coordinate(self, which: Literal[0, 1]) -> ColoredNetwork:
        picked = {eid: (lab.first if which == 0 else lab.second) for eid, lab in self.labels.items()}
        return ColoredNetwork(self.diagram.with_slices(_uncolored(self.diagram.slices)), picked,
                              tracing=self.tracing)


def _uncolored(slices) -> List:
    out = []
    for s in slices:
        if getattr(s, "color", None) is not None:
            s = s.model_copy(update={"color": None})
        elif getattr(s, "out_colors", None) is not None:
            s = s.model_copy(update={"out_colors": None})
        out.append(s)
    return out


def require_crossing_free(net: ColoredNetwork) -> None:
    for idx, s in net.diagram.crossings:
        raise InvalidDiagramError("planar evaluation needs a crossing-free network", idx)


__all__ = ["ColoredNetwork", "PairLabel", "PairNetwork", "require_crossing_free"]
