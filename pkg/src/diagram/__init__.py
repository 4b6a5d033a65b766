from src.diagram.fusion import eval_pair, eval_single
from src.diagram.json_format import load_diagram, parse_json, serialize_json
from src.diagram.network import ColoredNetwork, PairLabel, PairNetwork
from src.diagram.planar import eval_planar
from src.diagram.slices import FORMAT_TAG, Cap, Cross, Cup, SlicedDiagram, Vertex
from src.diagram.text_format import parse_text, serialize_text
from src.diagram.tracing import edge_colors, trace, underlying_graph

__all__ = [
    "FORMAT_TAG",
    "Cap",
    "ColoredNetwork",
    "Cross",
    "Cup",
    "PairLabel",
    "PairNetwork",
    "SlicedDiagram",
    "Vertex",
    "edge_colors",
    "eval_pair",
    "eval_planar",
    "eval_single",
    "load_diagram",
    "parse_json",
    "parse_text",
    "serialize_json",
    "serialize_text",
    "trace",
    "underlying_graph",
]
