"""
The sliced ("Morse word") diagram IR.

A diagram is a word of generators acting on a running list of strands, read
bottom to top: Cup(at) opens two strands at ``at``, Cap(at) closes strands
``at`` and ``at+1``, a crossing swaps strands ``at`` and ``at+1``, and a Vertex
consumes ``n_in`` adjacent strands and emits ``n_out`` in their place.

``cross+`` is the crossing whose A-smoothing is the vertical one: both strands
running up, the strand from bottom-left to top-right passes over.
"""
from typing import Annotated, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.errors import InvalidDiagramError
from src.models.types import DiagramKind

FORMAT_TAG = "spinnet-diagram/1"


class Cup(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    op: Literal["cup"] = "cup"
    at: int = Field(ge=0)
    color: Optional[int] = Field(default=None, ge=0)

    def shifted(self, offset: int) -> "Cup":
        return self.model_copy(update={"at": self.at + offset})


class Cap(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    op: Literal["cap"] = "cap"
    at: int = Field(ge=0)

    def shifted(self, offset: int) -> "Cap":
        return self.model_copy(update={"at": self.at + offset})


class Cross(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    op: Literal["cross+", "cross-"]
    at: int = Field(ge=0)

    @property
    def sign(self) -> int:
        return 1 if self.op == "cross+" else -1

    def flipped(self) -> "Cross":
        return Cross(op="cross-" if self.op == "cross+" else "cross+", at=self.at)

    def shifted(self, offset: int) -> "Cross":
        return self.model_copy(update={"at": self.at + offset})


class Vertex(BaseModel):
    model_config = ConfigDict(frozen=True, populate_by_name=True, extra="forbid")

    op: Literal["vertex"] = "vertex"
    at: int = Field(ge=0)
    n_in: int = Field(alias="in", ge=0)
    n_out: int = Field(alias="out", ge=0)
    id: str = Field(min_length=1)
    out_colors: Optional[Tuple[int, ...]] = None

    @field_validator("out_colors")
    @classmethod
    def _non_negative(cls, value: Optional[Tuple[int, ...]]) -> Optional[Tuple[int, ...]]:
        if value is not None and any(c < 0 for c in value):
            raise ValueError("colors are non-negative twice-spins")
        return value

    @property
    def valence(self) -> int:
        return self.n_in + self.n_out

    def ccw_ports(self) -> List[int]:
        """Port indices counter-clockwise: inputs left to right, then outputs right to left."""
        return list(range(self.n_in)) + list(range(self.n_in + self.n_out - 1, self.n_in - 1, -1))

    def shifted(self, offset: int) -> "Vertex":
        return self.model_copy(update={"at": self.at + offset})


Slice = Annotated[Union[Cup, Cap, Cross, Vertex], Field(discriminator="op")]


def cross(sign: int, at: int) -> Cross:
    return Cross(op="cross+" if sign > 0 else "cross-", at=at)


def vertex(at: int, n_in: int, n_out: int, vid: str, out_colors=None) -> Vertex:
    return Vertex(at=at, n_in=n_in, n_out=n_out, id=vid,
                  out_colors=tuple(out_colors) if out_colors is not None else None)


class SlicedDiagram(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: DiagramKind = "graph"
    slices: Tuple[Slice, ...] = ()
    colors: Optional[Dict[str, int]] = None

    @model_validator(mode="after")
    def _check_strands(self) -> "SlicedDiagram":
        widths = strand_widths(self.slices)
        if widths[-1] != 0:
            raise InvalidDiagramError(
                f"diagram is not closed: {widths[-1]} strands left open", max(len(self.slices) - 1, 0))
        seen = set()
        for idx, s in enumerate(self.slices):
            if isinstance(s, Vertex):
                if s.id in seen:
                    raise InvalidDiagramError(f"duplicate vertex id {s.id!r}", idx)
                seen.add(s.id)
                if self.kind == "link":
                    raise InvalidDiagramError("link diagrams have no vertices", idx)
        if self.colors is not None and any(c < 0 for c in self.colors.values()):
            raise InvalidDiagramError("colors are non-negative twice-spins")
        return self

    @property
    def crossings(self) -> List[Tuple[int, Cross]]:
        return [(i, s) for i, s in enumerate(self.slices) if isinstance(s, Cross)]

    @property
    def vertices(self) -> List[Vertex]:
        return [s for s in self.slices if isinstance(s, Vertex)]

    def vertex_index(self, vid: str) -> int:
        for i, s in enumerate(self.slices):
            if isinstance(s, Vertex) and s.id == vid:
                return i
        raise InvalidDiagramError(f"no vertex with id {vid!r}")

    def is_planar(self) -> bool:
        return not any(isinstance(s, Cross) for s in self.slices)

    def with_slices(self, slices, kind: Optional[DiagramKind] = None, colors=None) -> "SlicedDiagram":
        return SlicedDiagram(kind=kind or self.kind, slices=tuple(slices), colors=colors)


def strand_widths(slices) -> List[int]:
    """Strand count before the first slice and after each slice."""
    width = 0
    widths = [0]
    for idx, s in enumerate(slices):
        if isinstance(s, Cup):
            if s.at > width:
                raise InvalidDiagramError(f"cup at {s.at} outside {width} strands", idx)
            width += 2
        elif isinstance(s, Cap):
            if s.at + 1 >= width:
                raise InvalidDiagramError(f"cap at {s.at} needs strands {s.at},{s.at + 1} of {width}", idx)
            width -= 2
        elif isinstance(s, Cross):
            if s.at + 1 >= width:
                raise InvalidDiagramError(f"crossing at {s.at} needs strands {s.at},{s.at + 1} of {width}", idx)
        else:
            if s.at + s.n_in > width or s.at > width:
                raise InvalidDiagramError(
                    f"vertex {s.id!r} consumes strands {s.at}..{s.at + s.n_in - 1} of {width}", idx)
            if s.out_colors is not None and len(s.out_colors) != s.n_out:
                raise InvalidDiagramError(f"vertex {s.id!r} lists {len(s.out_colors)} colors for {s.n_out} outputs", idx)
            width += s.n_out - s.n_in
        widths.append(width)
    return widths


def shift_slices(slices, offset: int) -> List:
    return [s.shifted(offset) for s in slices]
