"""
Line-oriented text format for sliced diagrams.

    kind graph                      optional; default link without vertices, graph with
    cup 0 color=2                   color= is optional
    cap 0
    cross+ 1
    cross- 1
    vertex 0 in=2 out=1 id=v colors=2
    color e3 1                      entry of the edge color map
    # comment

One slice per line, bottom to top. Tokens are separated by blanks; columns in
error messages are 1-based.
"""
import re
from typing import Dict, Iterator, List, Optional, Tuple

from src.diagram.slices import Cap, Cross, Cup, SlicedDiagram, Vertex
from src.errors import DiagramSyntaxError

TOKEN_RE = re.compile(r"\S+")
NAME_RE = re.compile(r"^[A-Za-z0-9_.\-]+$")
KINDS = ("graph", "link", "network")

Token = Tuple[str, int]  # (text, column)


def _tokens(line: str) -> List[Token]:
    line = line.split("#", 1)[0]
    return [(m.group(0), m.start() + 1) for m in TOKEN_RE.finditer(line)]


def _int(token: Token, lineno: int, what: str) -> int:
    text, col = token
    if not text.isdigit():
        raise DiagramSyntaxError(f"{what} must be a non-negative integer, got {text!r}", lineno, col)
    return int(text)


def _options(tokens: List[Token], lineno: int, allowed: Tuple[str, ...]) -> Dict[str, Token]:
    found: Dict[str, Token] = {}
    for text, col in tokens:
        key, sep, value = text.partition("=")
        if not sep or not value:
            raise DiagramSyntaxError(f"expected key=value, got {text!r}", lineno, col)
        if key not in allowed:
            raise DiagramSyntaxError(f"unknown option {key!r}", lineno, col)
        if key in found:
            raise DiagramSyntaxError(f"option {key!r} given twice", lineno, col)
        found[key] = (value, col + len(key) + 1)
    return found


def _colors(token: Token, lineno: int) -> Tuple[int, ...]:
    text, col = token
    parts = text.split(",")
    result = []
    for part in parts:
        if not part.isdigit():
            raise DiagramSyntaxError(f"bad color list {text!r}", lineno, col)
        result.append(int(part))
    return tuple(result)


def _parse_line(tokens: List[Token], lineno: int):
    (word, col), rest = tokens[0], tokens[1:]
    if word in ("cup", "cap", "cross+", "cross-"):
        if not rest:
            raise DiagramSyntaxError(f"{word} needs a position", lineno, col + len(word))
        at = _int(rest[0], lineno, "position")
        if word == "cup":
            opts = _options(rest[1:], lineno, ("color",))
            color = _int(opts["color"], lineno, "color") if "color" in opts else None
            return Cup(at=at, color=color)
        if len(rest) > 1:
            raise DiagramSyntaxError(f"unexpected {rest[1][0]!r}", lineno, rest[1][1])
        if word == "cap":
            return Cap(at=at)
        return Cross(op=word, at=at)
    if word == "vertex":
        if not rest:
            raise DiagramSyntaxError("vertex needs a position", lineno, col + len(word))
        at = _int(rest[0], lineno, "position")
        opts = _options(rest[1:], lineno, ("in", "out", "id", "colors"))
        for required in ("in", "out", "id"):
            if required not in opts:
                raise DiagramSyntaxError(f"vertex needs {required}=", lineno, col)
        vid, vid_col = opts["id"]
        if not NAME_RE.match(vid):
            raise DiagramSyntaxError(f"bad vertex id {vid!r}", lineno, vid_col)
        out_colors = _colors(opts["colors"], lineno) if "colors" in opts else None
        return Vertex(at=at, n_in=_int(opts["in"], lineno, "in"), n_out=_int(opts["out"], lineno, "out"),
                      id=vid, out_colors=out_colors)
    raise DiagramSyntaxError(f"unknown slice {word!r}", lineno, col)


def parse_text(source) -> SlicedDiagram:
    """Parse the text format from a string or an iterable of lines."""
    lines: Iterator[str] = iter(source.splitlines() if isinstance(source, str) else source)
    slices = []
    kind: Optional[str] = None
    colors: Dict[str, int] = {}
    for lineno, line in enumerate(lines, start=1):
        tokens = _tokens(line)
        if not tokens:
            continue
        word, col = tokens[0]
        if word == "kind":
            if len(tokens) != 2 or tokens[1][0] not in KINDS:
                raise DiagramSyntaxError("kind must be one of graph, link, network", lineno, col)
            kind = tokens[1][0]
        elif word == "color":
            if len(tokens) != 3:
                raise DiagramSyntaxError("expected: color <edge-id> <n>", lineno, col)
            edge, edge_col = tokens[1]
            if edge in colors:
                raise DiagramSyntaxError(f"edge {edge} colored twice", lineno, edge_col)
            colors[edge] = _int(tokens[2], lineno, "color")
        else:
            slices.append(_parse_line(tokens, lineno))
    if kind is None:
        kind = "graph" if any(isinstance(s, Vertex) for s in slices) else "link"
    return SlicedDiagram(kind=kind, slices=tuple(slices), colors=colors or None)


def _slice_line(s) -> str:
    if isinstance(s, Cup):
        return f"cup {s.at}" + (f" color={s.color}" if s.color is not None else "")
    if isinstance(s, Cap):
        return f"cap {s.at}"
    if isinstance(s, Cross):
        return f"{s.op} {s.at}"
    line = f"vertex {s.at} in={s.n_in} out={s.n_out} id={s.id}"
    if s.out_colors is not None and s.out_colors:
        line += " colors=" + ",".join(str(c) for c in s.out_colors)
    return line


def serialize_text(d: SlicedDiagram) -> str:
    lines = [f"kind {d.kind}"]
    lines.extend(_slice_line(s) for s in d.slices)
    for edge, c in sorted((d.colors or {}).items(), key=lambda kv: _edge_sort_key(kv[0])):
        lines.append(f"color {edge} {c}")
    return "\n".join(lines) + "\n"


def _edge_sort_key(edge: str):
    return (0, int(edge[1:]), edge) if edge[:1] == "e" and edge[1:].isdigit() else (1, 0, edge)
