"""
Standard networks and diagrams as slice words, plus the generated corpora used
by the evaluator-equivalence checks.

Knots and links are 4-plats: cups on (0,1) and (2,3), a braid word on the four
strands, caps on (0,1) and (2,3).
"""
from itertools import product
from typing import Iterable, List, Optional, Sequence, Tuple

from src.diagram.network import ColoredNetwork
from src.diagram.slices import Cap, Cup, SlicedDiagram, cross, vertex
from src.models.types import DiagramKind
from src.recoupling import admissible_thirds, is_admissible

Named = Tuple[str, ColoredNetwork]


def _diagram(slices: Iterable, kind: DiagramKind = "network") -> SlicedDiagram:
    return SlicedDiagram(kind=kind, slices=tuple(slices))


# ── colored networks ─────────────────────────────────────────────────────────

def loop_network(c: int) -> ColoredNetwork:
    return ColoredNetwork(_diagram([Cup(at=0, color=c), Cap(at=0)]))


def theta_network(a: int, b: int, c: int) -> ColoredNetwork:
    return ColoredNetwork(_diagram([
        vertex(0, 0, 3, "u", [a, b, c]),
        vertex(0, 3, 0, "v"),
    ]))


def tet_network(a: int, b: int, e: int, c: int, d: int, f: int) -> ColoredNetwork:
    """Tetrahedron with vertex triples (a,b,e), (c,d,e), (a,d,f), (b,c,f)."""
    return ColoredNetwork(_diagram([
        vertex(0, 0, 3, "p", [a, e, b]),
        vertex(1, 1, 2, "q", [d, c]),
        vertex(0, 2, 1, "r", [f]),
        vertex(0, 3, 0, "s"),
    ]))


def bubble_theta_network(a: int, b: int, c: int, d: int, e: int) -> ColoredNetwork:
    """Theta (a,b,c) whose c edge carries a (d,e) bigon."""
    return ColoredNetwork(_diagram([
        vertex(0, 0, 3, "u", [a, b, c]),
        vertex(2, 1, 2, "w", [d, e]),
        vertex(2, 2, 1, "x", [c]),
        vertex(0, 3, 0, "v"),
    ]))


def prism_network(labels: Sequence[int]) -> ColoredNetwork:
    """
    Triangular prism: two triangles joined by three rungs.

    ``labels`` = (t0, t1, t2, r0, r1, r2, s0, s1, s2): lower triangle sides,
    rungs, upper triangle sides.
    """
    t0, t1, t2, r0, r1, r2, s0, s1, s2 = labels
    # lower triangle a-b-c, upper triangle d-e-f, rungs a-d, b-e, c-f
    return ColoredNetwork(_diagram([
        vertex(0, 0, 3, "a", [r0, t0, t2]),   # strands: r0 | t0 | t2
        vertex(1, 1, 2, "b", [r1, t1]),       # r0 | r1 | t1 | t2
        vertex(2, 2, 1, "c", [r2]),           # r0 | r1 | r2
        vertex(0, 1, 2, "d", [s2, s0]),       # s2 | s0 | r1 | r2
        vertex(1, 2, 1, "e", [s1]),           # s2 | s1 | r2
        vertex(0, 3, 0, "f"),
    ]))


def curl_network(c: int, sign: int = 1) -> ColoredNetwork:
    return ColoredNetwork(_diagram([Cup(at=0, color=c), Cup(at=1), cross(sign, 0), Cap(at=1), Cap(at=0)]))


def plat_diagram(word: Sequence[Tuple[int, int]], kind: DiagramKind = "link",
                 colors: Optional[Tuple[int, int]] = None) -> SlicedDiagram:
    """4-plat closure of a braid word given as (sign, position) pairs."""
    left, right = colors or (None, None)
    slices = [Cup(at=0, color=right), Cup(at=0, color=left)]
    slices.extend(cross(sign, at) for sign, at in word)
    slices.extend([Cap(at=0), Cap(at=0)])
    return _diagram(slices, kind)


TREFOIL_WORD = ((1, 1), (1, 1), (1, 1))
FIGURE_EIGHT_WORD = ((1, 1), (1, 1), (-1, 0), (1, 1))
HOPF_WORD = ((1, 1), (1, 1))


def hopf_network(a: int, b: int) -> ColoredNetwork:
    return ColoredNetwork(plat_diagram(HOPF_WORD, "network", (a, b)))


def knot_network(word: Sequence[Tuple[int, int]], c: int) -> ColoredNetwork:
    return ColoredNetwork(plat_diagram(word, "network"), default=c)


def twisted_theta_network(a: int, b: int, c: int, sign: int = 1) -> ColoredNetwork:
    return ColoredNetwork(_diagram([
        vertex(0, 0, 3, "u", [a, b, c]),
        cross(sign, 0),
        vertex(0, 3, 0, "v"),
    ]))


def twisted_tet_network(a: int, b: int, e: int, c: int, d: int, f: int, sign: int = 1) -> ColoredNetwork:
    return ColoredNetwork(_diagram([
        vertex(0, 0, 3, "p", [a, e, b]),
        vertex(1, 1, 2, "q", [d, c]),
        cross(sign, 2),
        vertex(0, 2, 1, "r", [f]),
        vertex(0, 3, 0, "s"),
    ]))


# ── generated corpora ────────────────────────────────────────────────────────

def tet_labels(max_label: int) -> List[Tuple[int, ...]]:
    found = []
    for a, b, c, d in product(range(max_label + 1), repeat=4):
        for e in admissible_thirds(a, b):
            if e > max_label or not is_admissible(c, d, e):
                continue
            for f in admissible_thirds(a, d):
                if f <= max_label and is_admissible(b, c, f):
                    found.append((a, b, e, c, d, f))
    return found


def planar_corpus(max_color: int = 2) -> List[Named]:
    """Crossing-free closed networks; all but the nine-edge prisms have at most eight edges."""
    corpus: List[Named] = [(f"loop-{c}", loop_network(c)) for c in range(max_color + 1)]
    for a, b in product(range(max_color + 1), repeat=2):
        for c in admissible_thirds(a, b):
            if c <= max_color:
                corpus.append((f"theta-{a}{b}{c}", theta_network(a, b, c)))
    for labels in tet_labels(max_color):
        corpus.append(("tet-" + "".join(map(str, labels)), tet_network(*labels)))
    for a, b, c in ((1, 1, 2), (2, 2, 2), (1, 2, 1)):
        for d in range(max_color + 1):
            for e in admissible_thirds(c, d):
                if e <= max_color:
                    corpus.append((f"bubble-{a}{b}{c}-{d}{e}", bubble_theta_network(a, b, c, d, e)))
    for labels in ((1, 1, 0, 1, 0, 1, 1, 1, 0), (1, 1, 2, 1, 2, 1, 1, 1, 2), (2, 2, 2, 2, 2, 2, 2, 2, 2)):
        if _prism_admissible(labels):
            corpus.append(("prism-" + "".join(map(str, labels)), prism_network(labels)))
    return corpus


def _prism_admissible(labels: Sequence[int]) -> bool:
    t0, t1, t2, r0, r1, r2, s0, s1, s2 = labels
    triples = [(r0, t0, t2), (t0, r1, t1), (t1, t2, r2), (s2, s0, r0), (s0, r1, s1), (s2, s1, r2)]
    return all(is_admissible(*t) for t in triples)


def crossing_corpus() -> List[Named]:
    """Closed networks with one to four crossings and colors at most 2."""
    corpus: List[Named] = []
    for c in (1, 2):
        for sign in (1, -1):
            corpus.append((f"curl-{c}{'+' if sign > 0 else '-'}", curl_network(c, sign)))
    for a, b in ((1, 1), (1, 2), (2, 2)):
        corpus.append((f"hopf-{a}{b}", hopf_network(a, b)))
    corpus.append(("trefoil-1", knot_network(TREFOIL_WORD, 1)))
    corpus.append(("figure-eight-1", knot_network(FIGURE_EIGHT_WORD, 1)))
    for a, b, c in ((1, 1, 2), (1, 1, 0), (2, 1, 1), (2, 2, 2)):
        corpus.append((f"twisted-theta-{a}{b}{c}", twisted_theta_network(a, b, c)))
    corpus.append(("twisted-tet-111111", twisted_tet_network(1, 1, 2, 1, 1, 2)))
    return corpus


def move_pairs() -> List[Tuple[str, ColoredNetwork, ColoredNetwork]]:
    """Networks related by one second or third Reidemeister move; colors at most 2."""
    unlinked = [Cup(at=0, color=2), Cup(at=0, color=1)]
    return [
        ("rii-loops-12",
         ColoredNetwork(_diagram(unlinked + [Cap(at=0), Cap(at=0)])),
         ColoredNetwork(_diagram(unlinked + [cross(1, 1), cross(-1, 1), Cap(at=0), Cap(at=0)]))),
        ("rii-theta-112",
         theta_network(1, 1, 2),
         ColoredNetwork(_diagram([vertex(0, 0, 3, "u", [1, 1, 2]), cross(-1, 1), cross(1, 1), vertex(0, 3, 0, "v")]))),
        ("rii-hopf-12",
         hopf_network(1, 2),
         ColoredNetwork(plat_diagram(HOPF_WORD + ((-1, 1), (1, 1)), "network", (1, 2)))),
        ("riii-positive-1",
         knot_network(((1, 0), (1, 1), (1, 0)), 1),
         knot_network(((1, 1), (1, 0), (1, 1)), 1)),
        ("riii-mixed-2",
         knot_network(((1, 0), (1, 1), (-1, 0)), 2),
         knot_network(((-1, 1), (1, 0), (1, 1)), 2)),
    ]


# ── embedded graphs ──────────────────────────────────────────────────────────

def cycle_graph(count: int, at: int = 1) -> SlicedDiagram:
    """An unknotted cycle with ``count`` bivalent vertices on strand ``at`` (0 left, 1 right)."""
    slices = [Cup(at=0)]
    slices.extend(vertex(at, 1, 1, f"v{i}") for i in range(count))
    slices.append(Cap(at=0))
    return _diagram(slices, "graph")


def decorated_plat(word: Sequence[Tuple[int, int]], positions: Sequence[int]) -> SlicedDiagram:
    """4-plat closure of ``word`` with one bivalent vertex on each listed strand, below the braid."""
    slices = [Cup(at=0), Cup(at=0)]
    slices.extend(vertex(p, 1, 1, f"v{i}") for i, p in enumerate(positions))
    slices.extend(cross(sign, at) for sign, at in word)
    slices.extend([Cap(at=0), Cap(at=0)])
    return _diagram(slices, "graph")


def theta_graph() -> SlicedDiagram:
    return _diagram([vertex(0, 0, 3, "u"), vertex(0, 3, 0, "v")], "graph")


def tet_graph() -> SlicedDiagram:
    return _diagram([
        vertex(0, 0, 3, "p"),
        vertex(1, 1, 2, "q"),
        vertex(0, 2, 1, "r"),
        vertex(0, 3, 0, "s"),
    ], "graph")


def arc_graph() -> SlicedDiagram:
    """One edge between two univalent vertices."""
    return _diagram([vertex(0, 0, 1, "a"), vertex(0, 1, 0, "b")], "graph")


def bouquet_graph() -> SlicedDiagram:
    """Two unknotted loops at one 4-valent vertex."""
    return _diagram([Cup(at=0), Cup(at=2), vertex(1, 2, 2, "v"), Cap(at=2), Cap(at=0)], "graph")


def handcuff_graph() -> SlicedDiagram:
    """Two loops joined by an edge: two trivalent vertices."""
    return _diagram([
        Cup(at=0),
        vertex(1, 1, 2, "u"),
        Cup(at=3),
        vertex(2, 2, 1, "w"),
        Cap(at=2),
        Cap(at=0),
    ], "graph")


def twisted_theta_graph(sign: int = 1) -> SlicedDiagram:
    return _diagram([vertex(0, 0, 3, "u"), cross(sign, 0), vertex(0, 3, 0, "v")], "graph")


def graph_corpus() -> List[Tuple[str, SlicedDiagram]]:
    """Embedded graphs shipped with the engine."""
    return [
        ("unknot-1v", cycle_graph(1)),
        ("unknot-2v", cycle_graph(2)),
        ("unknot-3v", cycle_graph(3)),
        ("unknot-left-1v", cycle_graph(1, at=0)),
        ("trefoil-1v", decorated_plat(TREFOIL_WORD, [3])),
        ("trefoil-2v", decorated_plat(TREFOIL_WORD, [0, 3])),
        ("trefoil-3v", decorated_plat(TREFOIL_WORD, [0, 1, 3])),
        ("trefoil-left-1v", decorated_plat(TREFOIL_WORD, [0])),
        ("figure-eight-1v", decorated_plat(FIGURE_EIGHT_WORD, [3])),
        ("figure-eight-2v", decorated_plat(FIGURE_EIGHT_WORD, [0, 3])),
        ("hopf-2v", decorated_plat(HOPF_WORD, [0, 3])),
        ("hopf-3v", decorated_plat(HOPF_WORD, [0, 1, 3])),
        ("theta", theta_graph()),
        ("twisted-theta", twisted_theta_graph()),
        ("tetrahedron", tet_graph()),
        ("arc", arc_graph()),
        ("bouquet", bouquet_graph()),
        ("handcuff", handcuff_graph()),
    ]


__all__ = [
    "FIGURE_EIGHT_WORD",
    "HOPF_WORD",
    "TREFOIL_WORD",
    "arc_graph",
    "bouquet_graph",
    "bubble_theta_network",
    "crossing_corpus",
    "curl_network",
    "cycle_graph",
    "decorated_plat",
    "graph_corpus",
    "handcuff_graph",
    "hopf_network",
    "knot_network",
    "loop_network",
    "move_pairs",
    "planar_corpus",
    "plat_diagram",
    "prism_network",
    "tet_graph",
    "tet_labels",
    "tet_network",
    "theta_graph",
    "theta_network",
    "twisted_tet_network",
    "twisted_theta_graph",
    "twisted_theta_network",
]
