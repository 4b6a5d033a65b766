"""
Fast evaluation of crossing-free colored networks by local rewrites.

The network is held as a rotation system: darts ``2k`` and ``2k+1`` are the two
ends of edge ``k``, and each vertex lists its darts counter-clockwise. Rules,
in order of preference:

    R0  delete color-0 edges; clean up vertices of degree 0, 1 and 2
    R1  a free loop of color c contributes Δ_c
        disconnected pieces evaluate separately
        a bridge gives 0
    R2  a bigon (a, b) on a c-strand becomes the strand times θ(a,b,c)/Δ_c
    R3  flip an edge of a smallest face, summing over the new label with 6j weights

Connected pieces are memoized under a canonical code of the rotation system.
"""
from __future__ import annotations

import threading
from typing import Dict, List, Optional, Tuple

import networkx as nx

from src.diagram.network import ColoredNetwork, require_crossing_free
from src.errors import InvalidDiagramError
from src.qpoly import RAT_ONE, RAT_ZERO, RatFunc
from src.recoupling import admissible_thirds, delta, is_admissible, six_j, theta
from src.utils.logger import get_logger

logger = get_logger(__name__)


class _Net:
    __slots__ = ("rot", "dart_vertex", "color")

    def __init__(self) -> None:
        self.rot: Dict[int, List[int]] = {}
        self.dart_vertex: Dict[int, int] = {}
        self.color: Dict[int, int] = {}

    def copy(self) -> "_Net":
        other = _Net()
        other.rot = {v: list(ds) for v, ds in self.rot.items()}
        other.dart_vertex = dict(self.dart_vertex)
        other.color = dict(self.color)
        return other

    def far(self, dart: int) -> int:
        return self.dart_vertex[dart ^ 1]

    def colors_at(self, v: int) -> List[int]:
        return [self.color[d >> 1] for d in self.rot[v]]

    def remove_edge(self, e: int) -> None:
        for d in (2 * e, 2 * e + 1):
            self.rot[self.dart_vertex.pop(d)].remove(d)
        del self.color[e]

    def move_dart(self, dart: int, onto: int) -> None:
        """Put ``dart`` in the rotation slot currently held by ``onto``; ``onto`` disappears."""
        v = self.dart_vertex.pop(onto)
        ds = self.rot[v]
        ds[ds.index(onto)] = dart
        self.dart_vertex[dart] = v


def _from_network(net: ColoredNetwork) -> Tuple[_Net, RatFunc]:
    g = _Net()
    loops = RAT_ONE
    vertex_number = {s.id: i for i, s in enumerate(net.diagram.vertices)}
    port_dart: Dict[Tuple[str, int], int] = {}
    for k, edge in enumerate(net.tracing.edges):
        c = net.colors[edge.id]
        if edge.closed:
            loops = loops * delta(c)
            continue
        if len(edge.ends) != 2:
            raise InvalidDiagramError(f"edge {edge.id} has {len(edge.ends)} ends")
        g.color[k] = c
        for j, end in enumerate(edge.ends):
            port_dart[end] = 2 * k + j
            g.dart_vertex[2 * k + j] = vertex_number[end[0]]
    for s in net.diagram.vertices:
        v = vertex_number[s.id]
        g.rot[v] = [port_dart[(s.id, port)] for port in s.ccw_ports()]
    return g, loops


# ── R0 / R1 ──────────────────────────────────────────────────────────────────

def _reduce(g: _Net) -> Optional[RatFunc]:
    """Apply R0 and R1 until stable. Returns the scalar factor, or None for zero."""
    factor = RAT_ONE
    for e in [e for e, c in g.color.items() if c == 0]:
        g.remove_edge(e)
    changed = True
    while changed:
        changed = False
        for v in list(g.rot):
            ds = g.rot.get(v)
            if ds is None or len(ds) > 2:
                continue
            changed = True
            if not ds:
                del g.rot[v]
            elif len(ds) == 1:
                return None
            else:
                d1, d2 = ds
                a, b = g.color[d1 >> 1], g.color[d2 >> 1]
                if a != b:
                    return None
                del g.rot[v]
                if d1 ^ 1 == d2:
                    del g.dart_vertex[d1], g.dart_vertex[d2], g.color[d1 >> 1]
                    factor = factor * delta(a)
                    logger.debug("R1: loop of color %d", a)
                else:
                    del g.dart_vertex[d1], g.dart_vertex[d2]
                    # edge of d1 now reaches the far end of d2
                    g.move_dart(d1, d2 ^ 1)
                    del g.color[d2 >> 1]
    return factor


def _check_vertices(g: _Net) -> bool:
    for v, ds in g.rot.items():
        if len(ds) > 3:
            raise InvalidDiagramError(f"planar evaluation takes valence <= 3, found {len(ds)}")
        if len(ds) == 3 and not is_admissible(*g.colors_at(v)):
            return False
    return True


def _components(g: _Net) -> List[_Net]:
    seen = set()
    pieces = []
    for root in sorted(g.rot):
        if root in seen:
            continue
        stack, members = [root], []
        seen.add(root)
        while stack:
            v = stack.pop()
            members.append(v)
            for d in g.rot[v]:
                w = g.far(d)
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        piece = _Net()
        for v in members:
            piece.rot[v] = list(g.rot[v])
            for d in g.rot[v]:
                piece.dart_vertex[d] = v
                piece.color[d >> 1] = g.color[d >> 1]
        pieces.append(piece)
    return pieces


# ── canonical code ───────────────────────────────────────────────────────────

def _code_from(g: _Net, root_dart: int) -> Tuple:
    root = g.dart_vertex[root_dart]
    label = {root: 0}
    start = {root: root_dart}
    order = [root]
    code: List[Tuple[int, int, int]] = []
    i = 0
    while i < len(order):
        w = order[i]
        ds = g.rot[w]
        k = ds.index(start[w])
        for d in ds[k:] + ds[:k]:
            t = d ^ 1
            x = g.dart_vertex[t]
            if x not in label:
                label[x] = len(order)
                order.append(x)
                start[x] = t
            xs = g.rot[x]
            pos = (xs.index(t) - xs.index(start[x])) % len(xs)
            code.append((label[x], pos, g.color[d >> 1]))
        code.append((-1, -1, -1))
        i += 1
    return tuple(code)


def canonical_code(g: _Net) -> Tuple:
    return min(_code_from(g, d) for d in g.dart_vertex)


# ── memo ────────────────────────────────────────────────────────────────────

_MEMO: Dict[Tuple, RatFunc] = {}
_MEMO_LOCK = threading.Lock()


def clear_memo() -> None:
    with _MEMO_LOCK:
        _MEMO.clear()


def _evaluate(g: _Net) -> RatFunc:
    factor = _reduce(g)
    if factor is None:
        return RAT_ZERO
    if not g.rot:
        return factor
    for piece in _components(g):
        factor = factor * _connected_value(piece)
        if factor.is_zero():
            return RAT_ZERO
    return factor


def _connected_value(g: _Net) -> RatFunc:
    code = canonical_code(g)
    cached = _MEMO.get(code)
    if cached is not None:
        return cached
    value = _rewrite(g)
    with _MEMO_LOCK:
        return _MEMO.setdefault(code, value)


def _has_bridge(g: _Net) -> bool:
    simple = nx.Graph()
    simple.add_nodes_from(g.rot)
    multiplicity: Dict[Tuple[int, int], int] = {}
    for e in g.color:
        u, v = g.dart_vertex[2 * e], g.dart_vertex[2 * e + 1]
        if u == v:
            continue
        key = (min(u, v), max(u, v))
        multiplicity[key] = multiplicity.get(key, 0) + 1
        simple.add_edge(*key)
    return any(multiplicity[(min(u, v), max(u, v))] == 1 for u, v in nx.bridges(simple))


def _find_bigon(g: _Net) -> Optional[Tuple[int, int, int, int]]:
    """Lowest-numbered pair of parallel edges: (u, v, dart of first at u, dart of second at u)."""
    for u in sorted(g.rot):
        by_far: Dict[int, int] = {}
        for d in sorted(g.rot[u]):
            w = g.far(d)
            if w == u:
                continue
            if w in by_far:
                return u, w, by_far[w], d
            by_far[w] = d
    return None


def _bigon(g: _Net, u: int, v: int, du1: int, du2: int) -> RatFunc:
    a, b = g.color[du1 >> 1], g.color[du2 >> 1]
    xu = next(d for d in g.rot[u] if d not in (du1, du2))
    xv = next(d for d in g.rot[v] if d not in (du1 ^ 1, du2 ^ 1))
    c, c2 = g.color[xu >> 1], g.color[xv >> 1]
    if c != c2:
        return RAT_ZERO
    if xu ^ 1 == xv:
        logger.debug("R2: theta (%d,%d,%d)", a, b, c)
        return theta(a, b, c)
    logger.debug("R2: bigon (%d,%d) on %d", a, b, c)
    del g.color[du1 >> 1], g.color[du2 >> 1], g.color[xv >> 1]
    for d in (du1, du1 ^ 1, du2, du2 ^ 1, xu, xv):
        del g.dart_vertex[d]
    del g.rot[u], g.rot[v]
    g.move_dart(xu, xv ^ 1)
    return theta(a, b, c) / delta(c) * _evaluate(g)


def _faces(g: _Net) -> List[List[int]]:
    def rot_next(d: int) -> int:
        ds = g.rot[g.dart_vertex[d]]
        return ds[(ds.index(d) + 1) % len(ds)]

    seen = set()
    faces = []
    for d0 in sorted(g.dart_vertex):
        if d0 in seen:
            continue
        face, d = [], d0
        while d not in seen:
            seen.add(d)
            face.append(d)
            d = rot_next(d ^ 1)
        faces.append(face)
    return faces


def _flip_edge(g: _Net) -> int:
    """Lowest edge of a smallest face, faces ordered by (size, lowest edge)."""
    best = min(_faces(g), key=lambda f: (len(f), min(d >> 1 for d in f)))
    return min(d >> 1 for d in best)


def _rotated(ds: List[int], first: int) -> List[int]:
    k = ds.index(first)
    return ds[k:] + ds[:k]


def _flip(g: _Net, e: int) -> RatFunc:
    eu, ev = 2 * e, 2 * e + 1
    u, v = g.dart_vertex[eu], g.dart_vertex[ev]
    _, x1, x2 = _rotated(g.rot[u], eu)
    _, y1, y2 = _rotated(g.rot[v], ev)
    cx1, cx2, cy1, cy2 = (g.color[d >> 1] for d in (x1, x2, y1, y2))
    old = g.color[e]
    logger.debug("R3: flip edge %d (%d; %d %d %d %d)", e, old, cx1, cx2, cy1, cy2)
    total = RAT_ZERO
    for f in admissible_thirds(cx1, cy2):
        if not is_admissible(cx2, cy1, f):
            continue
        weight = six_j(cx1, cx2, old, cy1, cy2, f)
        if weight.is_zero():
            continue
        branch = g.copy()
        branch.rot[u] = [eu, x2, y1]
        branch.rot[v] = [ev, y2, x1]
        branch.dart_vertex[y1] = u
        branch.dart_vertex[x1] = v
        branch.color[e] = f
        total = total + weight * _evaluate(branch)
    return total


def _rewrite(g: _Net) -> RatFunc:
    if _has_bridge(g):
        logger.debug("bridge: zero")
        return RAT_ZERO
    found = _find_bigon(g)
    if found is not None:
        return _bigon(g, *found)
    return _flip(g, _flip_edge(g))


def eval_planar(net: ColoredNetwork) -> RatFunc:
    """Exact value of a closed crossing-free colored network."""
    require_crossing_free(net)
    g, loops = _from_network(net)
    if not _check_vertices(g):
        return RAT_ZERO
    return loops * _evaluate(g)


__all__ = ["canonical_code", "clear_memo", "eval_planar"]
