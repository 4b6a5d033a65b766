"""
Pairing a vertex expansion against labeled dual trees.

The closure of an expansion v (k -> m) against a dual tree w (m -> k) is

    k nested cups, v, w, caps k-1..0

so every source of v meets the matching output of w. Each term contributes its
coefficient times the pair value of the closed balanced network. Two
expansions with the same boundary are equal exactly when they pair equally
against every labeled caterpillar on the dual boundary.
"""
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from src.diagram.fusion import eval_pair
from src.diagram.network import ColoredNetwork, PairNetwork
from src.diagram.slices import Cap, Cup, SlicedDiagram
from src.errors import BoundaryMismatchError
from src.qpoly import RAT_ZERO, RatFunc
from src.utils.logger import get_logger
from src.vertices.expansion import NVertexExpansion, tree_labelings
from src.vertices.realize import term_word, tree_word
from src.vertices.spec import TreeShape, VertexSpec

logger = get_logger(__name__)


class LabeledTree(BaseModel):
    """A trivalent tree with fixed internal labels, paired against an expansion."""

    model_config = ConfigDict(frozen=True)

    spec: VertexSpec
    tree: TreeShape
    internal: Tuple[int, ...] = ()

    def word(self, prefix: str = "w") -> List:
        return tree_word(self.spec, self.tree, self.internal, prefix)

    def __str__(self) -> str:
        return f"{self.spec} on {self.tree} with {list(self.internal)}"


def dual_trees(spec: VertexSpec, max_label: Optional[int] = None) -> List[LabeledTree]:
    """Every admissibly labeled caterpillar on the boundary dual to ``spec``."""
    dual = spec.dual()
    tree = TreeShape.caterpillar(dual.n)
    if dual.n == 1 and dual.leaves()[0] != 0:
        return []
    if dual.n == 2 and len(set(dual.leaves())) != 1:
        return []
    return [LabeledTree(spec=dual, tree=tree, internal=internal)
            for internal in tree_labelings(dual, tree, max_label)]


def closure(v: NVertexExpansion, internal: Tuple[int, ...], dual: LabeledTree) -> ColoredNetwork:
    k = v.spec.k
    word: List = [Cup(at=i, color=v.spec.source_labels[i]) for i in range(k)]
    word += term_word(v, internal, "v")
    word += dual.word("w")
    word += [Cap(at=p) for p in range(k - 1, -1, -1)]
    return ColoredNetwork(SlicedDiagram(kind="network", slices=tuple(word)))


def pair_against(v: NVertexExpansion, dual: LabeledTree, threads: int = 1) -> RatFunc:
    if dual.spec != v.spec.dual():
        raise BoundaryMismatchError(f"dual {dual.spec} does not close {v.spec}")

    def run(term) -> RatFunc:
        internal, coefficient = term
        return coefficient * eval_pair(PairNetwork.balanced(closure(v, internal, dual)))

    if threads > 1 and len(v.terms) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(run, v.terms))
    else:
        values = [run(t) for t in v.terms]
    total = RAT_ZERO
    for value in values:
        total = total + value
    return total


def expansions_agree(v: NVertexExpansion, w: NVertexExpansion,
                     max_label: Optional[int] = None, threads: int = 1) -> bool:
    if v.spec != w.spec:
        raise BoundaryMismatchError(f"boundaries differ: {v.spec} vs {w.spec}")
    for dual in dual_trees(v.spec, max_label):
        left, right = pair_against(v, dual, threads), pair_against(w, dual, threads)
        if left != right:
            logger.info("expansions differ against %s: %s vs %s", dual, left, right)
            return False
    return True


__all__ = ["LabeledTree", "closure", "dual_trees", "expansions_agree", "pair_against"]
