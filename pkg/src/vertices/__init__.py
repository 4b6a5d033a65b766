from src.vertices.expansion import (
    NVertexExpansion,
    bc_four_vertex,
    braid_legs,
    curl_leg,
    extend,
    low_vertex,
    n_vertex,
    rotate,
    tree_labelings,
)
from src.vertices.pairing import LabeledTree, dual_trees, expansions_agree, pair_against
from src.vertices.realize import term_word, tree_word
from src.vertices.spec import TreeShape, VertexSpec

__all__ = [
    "LabeledTree",
    "NVertexExpansion",
    "TreeShape",
    "VertexSpec",
    "bc_four_vertex",
    "braid_legs",
    "curl_leg",
    "dual_trees",
    "expansions_agree",
    "extend",
    "low_vertex",
    "n_vertex",
    "pair_against",
    "rotate",
    "term_word",
    "tree_labelings",
]
