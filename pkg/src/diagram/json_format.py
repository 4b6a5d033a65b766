"""The ``spinnet-diagram/1`` JSON document: schema, parser and serializer."""
import json
from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, ValidationError

from src.diagram.slices import FORMAT_TAG, Cap, Cross, Cup, Slice, SlicedDiagram, Vertex
from src.errors import DiagramSchemaError
from src.models.types import DiagramKind


class DiagramDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    format: Literal["spinnet-diagram/1"]
    kind: DiagramKind
    slices: List[Slice]
    colors: Optional[Dict[str, int]] = None


def _json_path(loc: Tuple) -> str:
    path = "$"
    for part in loc:
        if isinstance(part, int):
            path += f"[{part}]"
        elif part in ("cup", "cap", "cross+", "cross-", "vertex"):
            # discriminated-union branch tag, not a document key
            continue
        else:
            path += f".{part}"
    return path


def parse_json(source) -> SlicedDiagram:
    """Parse a JSON document given as text, bytes or an open stream."""
    text = source if isinstance(source, (str, bytes)) else source.read()
    try:
        doc = DiagramDocument.model_validate_json(text)
    except ValidationError as exc:
        problems = [(_json_path(err["loc"]), err["msg"]) for err in exc.errors()]
        raise DiagramSchemaError(problems) from exc
    return SlicedDiagram(kind=doc.kind, slices=tuple(doc.slices), colors=doc.colors)


def _slice_record(s) -> Dict[str, object]:
    if isinstance(s, Cup):
        record: Dict[str, object] = {"op": "cup", "at": s.at}
        if s.color is not None:
            record["color"] = s.color
        return record
    if isinstance(s, (Cap, Cross)):
        return {"op": s.op, "at": s.at}
    assert isinstance(s, Vertex)
    record = {"op": "vertex", "at": s.at, "in": s.n_in, "out": s.n_out, "id": s.id}
    if s.out_colors is not None:
        record["out_colors"] = list(s.out_colors)
    return record


def diagram_to_dict(d: SlicedDiagram) -> Dict[str, object]:
    doc: Dict[str, object] = {
        "format": FORMAT_TAG,
        "kind": d.kind,
        "slices": [_slice_record(s) for s in d.slices],
    }
    if d.colors:
        doc["colors"] = {k: d.colors[k] for k in sorted(d.colors)}
    return doc


def serialize_json(d: SlicedDiagram) -> str:
    return json.dumps(diagram_to_dict(d), indent=2) + "\n"


def load_diagram(path: str) -> SlicedDiagram:
    """Read a diagram file; ``.json`` uses the JSON schema, anything else the text format."""
    from src.diagram.text_format import parse_text

    with open(path, encoding="utf-8") as f:
        if path.endswith(".json"):
            return parse_json(f)
        return parse_text(f.read())
