"""
Slice words for expansion terms.

A k -> m vertex is realized on strands 0..k-1 (its sources) and leaves m
strands in their place. For a term with internal labels the word is

    cup at k, colored with the last leaf
    split the left cup strand along the tree (1 -> 2 vertices)
    caps at k-1, ..., 0

so the tree's leaves l0..l(k-1) meet the sources xk..x1 and the rest remain as
the targets. A turn wraps a word as ``cup k; word shifted by 1; cap 0``.
"""
from typing import List, Sequence, Tuple

from src.diagram.slices import Cap, Cup, vertex
from src.vertices.expansion import NVertexExpansion
from src.vertices.spec import TreeShape, VertexSpec


def tree_word(spec: VertexSpec, tree: TreeShape, internal: Tuple[int, ...], prefix: str) -> List:
    """Slices of one labeled tree standing in a k -> m vertex placed at 0."""
    k, leaves = spec.k, spec.leaves()
    if spec.n == 0:
        return []
    if spec.n == 1:
        if k == 1:
            return [vertex(0, 1, 0, f"{prefix}.end")]
        return [vertex(0, 0, 1, f"{prefix}.end", [leaves[0]])]

    word: List = [Cup(at=k, color=leaves[-1])]
    index = tree.child_pair_index()
    counter = iter(range(len(leaves)))

    def color(s) -> int:
        return leaves[s] if not isinstance(s, tuple) else internal[index[s]]

    def width(s) -> int:
        return 1 if not isinstance(s, tuple) else width(s[0]) + width(s[1])

    def split(s, at: int) -> None:
        if not isinstance(s, tuple):
            return
        word.append(vertex(at, 1, 2, f"{prefix}.n{next(counter)}", [color(s[0]), color(s[1])]))
        split(s[0], at)
        split(s[1], at + width(s[0]))

    split(tree.structure, k)
    word.extend(Cap(at=p) for p in range(k - 1, -1, -1))
    return word


def turned_word(word: Sequence, k: int, turns: int) -> List:
    for _ in range(turns):
        word = [Cup(at=k)] + [s.shifted(1) for s in word] + [Cap(at=0)]
    return list(word)


def term_word(v: NVertexExpansion, internal: Tuple[int, ...], prefix: str = "v") -> List:
    """The decorated word of one term of ``v``, placed at strand 0."""
    word = turned_word(tree_word(v.base, v.tree, internal, prefix), v.base.k, v.turns)
    return list(v.below) + word


__all__ = ["term_word", "tree_word", "turned_word"]
