"""
n-vertex expansions: a labeled tree sum standing in for one vertex of the
graph.

For n >= 3 the expansion on a tree T is

    Σ over admissible internal labels  Π Δ(internal) / Π θ(node triple)  · T(labels)

The low valences follow fixed conventions: the 0-vertex is the scalar 1, the
1-vertex is a univalent end that only survives on label 0, and the 2-vertex on
a j-strand is 1/Δ_j times the identity (zero when the labels differ).
"""
from __future__ import annotations

from itertools import product
from typing import Dict, Iterator, List, Optional, Tuple

from src.diagram.slices import Cap, Cup, cross
from src.errors import BoundaryMismatchError
from src.qpoly import RAT_ONE, RatFunc
from src.recoupling import admissible_thirds, delta, is_admissible, theta
from src.utils.logger import get_logger
from src.vertices.spec import TreeShape, VertexSpec

logger = get_logger(__name__)

Term = Tuple[Tuple[int, ...], RatFunc]  # (internal labels in preorder, coefficient)


class NVertexExpansion:
    """
    A vertex expansion together with the cup/cap and crossing decorations that
    turn its legs.

    ``base`` is the boundary the tree is built on; ``spec`` is the boundary the
    decorated expansion presents. ``turns`` counts left rotations of the leaf
    sequence, ``below`` lists crossings and curls applied to the sources
    before they reach the vertex.
    """

    __slots__ = ("base", "tree", "terms", "turns", "below", "spec")

    def __init__(self, base: VertexSpec, tree: TreeShape, terms: List[Term],
                 turns: int = 0, below: Tuple = (), spec: Optional[VertexSpec] = None):
        self.base = base
        self.tree = tree
        self.terms: Tuple[Term, ...] = tuple(terms)
        self.turns = turns
        self.below = tuple(below)
        self.spec = spec or base.turned(turns)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_plain(self) -> bool:
        return self.turns == 0 and not self.below

    def coefficients(self) -> Dict[Tuple[int, ...], RatFunc]:
        return dict(self.terms)

    def __repr__(self) -> str:
        return (f"NVertexExpansion({self.spec}, tree={self.tree}, {len(self.terms)} terms"
                f"{', turns=%d' % self.turns if self.turns else ''})")


# ── labelings ────────────────────────────────────────────────────────────────

def tree_labelings(spec: VertexSpec, tree: TreeShape, max_label: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Every admissible assignment of internal labels, in lexicographic order of the preorder tuple."""
    leaves = spec.leaves()
    if tree.n != spec.n:
        raise BoundaryMismatchError(f"tree on {tree.n} leaves for a {spec.n}-vertex")
    if tree.n < 3:
        yield ()
        return
    # an internal edge is bounded by, and has the parity of, the leaves below it
    def reach(s) -> int:
        return leaves[s] if not isinstance(s, tuple) else reach(s[0]) + reach(s[1])

    ranges = []
    for p in tree.pairs()[1:]:
        top = reach(p)
        if max_label is not None:
            top = min(top, max_label)
        ranges.append(range(reach(p) % 2, top + 1, 2))
    for internal in product(*ranges):
        if all(is_admissible(*t) for t in tree.iter_nodes(leaves, internal)):
            yield internal


def term_coefficient(spec: VertexSpec, tree: TreeShape, internal: Tuple[int, ...]) -> RatFunc:
    value = RAT_ONE
    for label in internal:
        value = value * delta(label)
    for triple in tree.iter_nodes(spec.leaves(), internal):
        value = value / theta(*triple)
    return value


# ── expansions ───────────────────────────────────────────────────────────────

def low_vertex(spec: VertexSpec) -> NVertexExpansion:
    """Conventions for n <= 2."""
    tree = TreeShape.caterpillar(spec.n)
    leaves = spec.leaves()
    if spec.n == 0:
        terms = [((), RAT_ONE)]
    elif spec.n == 1:
        terms = [((), RAT_ONE)] if leaves[0] == 0 else []
    elif spec.n == 2:
        a, b = leaves
        terms = [((), RAT_ONE / delta(a))] if a == b else []
    else:
        raise BoundaryMismatchError(f"low_vertex takes n <= 2, got {spec.n}")
    return NVertexExpansion(spec, tree, terms)


def n_vertex(spec: VertexSpec, tree: Optional[TreeShape] = None) -> NVertexExpansion:
    """The n-vertex on ``tree`` (caterpillar by default)."""
    if spec.n <= 2:
        return low_vertex(spec)
    tree = tree or TreeShape.caterpillar(spec.n)
    terms = [(internal, term_coefficient(spec, tree, internal)) for internal in tree_labelings(spec, tree)]
    logger.debug("n_vertex %s on %s: %d terms", spec, tree, len(terms))
    return NVertexExpansion(spec, tree, terms)


def bc_four_vertex(i: int, j: int, k: int, l: int) -> NVertexExpansion:
    """The 4-vertex with sources (i, j) and targets (k, l) on the H tree splitting {i,j} from {k,l}."""
    spec = VertexSpec(source_labels=(i, j), target_labels=(k, l))
    return n_vertex(spec, TreeShape(n=4, structure=((0, 1), 2)))


def extend(v: NVertexExpansion, i: int, j: int) -> NVertexExpansion:
    """
    Split the last target of ``v`` into (i, j):

        Σ_r Δ_r · (v with last target r) ∘ (3-vertex r → i, j)

    The 0-vertex is read as a 1-vertex whose target is 0.
    """
    if not v.is_plain:
        raise BoundaryMismatchError("extend takes an undecorated expansion")
    base, tree = v.base, v.tree
    if base.n == 0:
        base, tree = VertexSpec(target_labels=(0,)), TreeShape.caterpillar(1)
    if base.m == 0:
        raise BoundaryMismatchError(f"{base} has no target leg to extend")
    new_spec = VertexSpec(source_labels=base.source_labels, target_labels=base.target_labels[:-1] + (i, j))
    new_tree = tree.grafted()
    acc: Dict[Tuple[int, ...], RatFunc] = {}
    for r in admissible_thirds(i, j):
        with_r = VertexSpec(source_labels=base.source_labels, target_labels=base.target_labels[:-1] + (r,))
        inner = n_vertex(with_r, tree) if with_r.n >= 3 else low_vertex(with_r)
        weight = RatFunc(delta(r)) / theta(r, i, j)
        for internal, coefficient in inner.terms:
            labels = (r,) + internal if with_r.n >= 3 else internal
            acc[labels] = acc.get(labels, RatFunc(0)) + coefficient * weight
    terms = [(labels, c) for labels, c in sorted(acc.items()) if not c.is_zero()]
    return NVertexExpansion(new_spec, new_tree, terms)


def rotate(spec: VertexSpec, tree: Optional[TreeShape], r: int) -> NVertexExpansion:
    """
    The vertex whose leaf sequence is ``spec``'s turned left by r, realized by
    bending legs of the expansion of ``spec`` with cups and caps.
    """
    inner = n_vertex(spec, tree)
    turns = r % spec.n if spec.n else 0
    return NVertexExpansion(inner.base, inner.tree, list(inner.terms), turns=turns)


def braid_legs(v: NVertexExpansion, position: int, sign: int = 1) -> NVertexExpansion:
    """Precompose with a crossing of sources ``position`` and ``position+1``."""
    spec = v.spec
    if not 0 <= position < spec.k - 1:
        raise BoundaryMismatchError(f"no adjacent sources at {position} in {spec}")
    sources = list(spec.source_labels)
    sources[position], sources[position + 1] = sources[position + 1], sources[position]
    new_spec = VertexSpec(source_labels=tuple(sources), target_labels=spec.target_labels)
    # slices are read bottom up, so the new crossing goes first
    below = (cross(sign, position),) + v.below
    return NVertexExpansion(v.base, v.tree, list(v.terms), v.turns, below, new_spec)


def curl_leg(v: NVertexExpansion, position: int, sign: int = 1) -> NVertexExpansion:
    """Precompose source ``position`` with a curl."""
    if not 0 <= position < v.spec.k:
        raise BoundaryMismatchError(f"no source at {position} in {v.spec}")
    curl = (Cup(at=position + 1), cross(sign, position), Cap(at=position + 1))
    return NVertexExpansion(v.base, v.tree, list(v.terms), v.turns, curl + v.below, v.spec)


__all__ = [
    "NVertexExpansion",
    "Term",
    "bc_four_vertex",
    "braid_legs",
    "curl_leg",
    "extend",
    "low_vertex",
    "n_vertex",
    "rotate",
    "term_coefficient",
    "tree_labelings",
]
