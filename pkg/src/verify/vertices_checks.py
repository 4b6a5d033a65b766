"""
Suite vertices: low-valence conventions, turning, tree independence, leg
braiding and curls, extension, and parity. Expansions on different trees are
compared through their pairings against labeled dual trees.
"""
from itertools import product
from typing import List

from src.qpoly import RatFunc
from src.recoupling import delta, theta
from src.utils.logger import get_logger
from src.vertices import (
    TreeShape,
    VertexSpec,
    bc_four_vertex,
    braid_legs,
    curl_leg,
    expansions_agree,
    extend,
    low_vertex,
    n_vertex,
    rotate,
)

logger = get_logger(__name__)

H_TREE = TreeShape(n=4, structure=((0, 1), 2))
FIVE_LEG_TREES = (TreeShape.caterpillar(5), TreeShape(n=5, structure=((0, 1), (2, 3))))
FIVE_LEG_SPECS = ("1,1/1,1,2", "2,1/1,2,2", "1,2/1,2,0", "2,2/2,2,2")


def _labels(top: int, count: int):
    for legs in product(range(top + 1), repeat=count):
        if sum(legs) % 2 == 0:
            yield legs


def check_low_vertices(max_label: int) -> List[str]:
    violations: List[str] = []

    def check(condition: bool, message: str) -> None:
        if not condition:
            violations.append(message)

    check(low_vertex(VertexSpec()).coefficients() == {(): RatFunc(1)}, "the 0-vertex is not 1")
    for j in range(max_label + 1):
        one = low_vertex(VertexSpec(target_labels=(j,)))
        check(one.is_zero == (j != 0), f"the 1-vertex on {j} has the wrong support")
        two = low_vertex(VertexSpec(source_labels=(j,), target_labels=(j,)))
        check(two.coefficients() == {(): RatFunc(1) / delta(j)}, f"the 2-vertex on {j} is not 1/Δ_{j}")
        check(low_vertex(VertexSpec(source_labels=(j,), target_labels=(j + 1,))).is_zero,
              f"the 2-vertex {j}→{j + 1} is not zero")
    for a, b, c in _labels(max_label, 3):
        v = n_vertex(VertexSpec(source_labels=(a, b), target_labels=(c,)))
        expected = {(): RatFunc(1) / theta(b, a, c)} if not theta(a, b, c).is_zero() else {}
        check(v.coefficients() == expected, f"3-vertex {a},{b}/{c} is not 1/θ")
    return violations


def check_turning(max_label: int) -> List[str]:
    """The BC vertex turned by a quarter equals the BC vertex on the turned boundary."""
    violations: List[str] = []
    top = min(max_label, 2)
    for i, j, k, l in _labels(top, 4):
        spec = VertexSpec(source_labels=(i, j), target_labels=(k, l))
        turned = spec.turned(1)
        direct = bc_four_vertex(*turned.source_labels, *turned.target_labels)
        if not expansions_agree(rotate(spec, H_TREE, 1), direct, max_label=2 * top):
            violations.append(f"turning fails on BC vertex {spec}")
    return violations


def check_tree_independence(max_label: int) -> List[str]:
    violations: List[str] = []
    top = min(max_label, 2)
    for text in FIVE_LEG_SPECS:
        spec = VertexSpec.parse(text)
        if max(spec.leaves()) > top:
            continue
        first, second = (n_vertex(spec, tree) for tree in FIVE_LEG_TREES)
        if not expansions_agree(first, second, max_label=2 * top):
            violations.append(f"{spec} depends on the tree: {FIVE_LEG_TREES[0]} vs {FIVE_LEG_TREES[1]}")
    return violations


def check_absorption(max_label: int) -> List[str]:
    """Braided legs give the leg-transposed vertex; curls on legs change nothing."""
    violations: List[str] = []
    top = min(max_label, 2)
    for count in (3, 4):
        for legs in _labels(top, count):
            spec = VertexSpec(source_labels=legs[:2], target_labels=legs[2:])
            v = n_vertex(spec)
            if v.is_zero:
                continue
            swapped = VertexSpec(source_labels=(legs[1], legs[0]), target_labels=legs[2:])
            for sign in (1, -1):
                if not expansions_agree(braid_legs(v, 0, sign), n_vertex(swapped), max_label=2 * top):
                    violations.append(f"braiding legs of {spec} (sign {sign}) is not absorbed")
                if not expansions_agree(curl_leg(v, 1, sign), v, max_label=2 * top):
                    violations.append(f"curl on a leg of {spec} (sign {sign}) is not absorbed")
    return violations


def check_composites(max_label: int) -> List[str]:
    """Turns and braids stacked on a 4-vertex still give the direct vertex."""
    violations: List[str] = []
    top = min(max_label, 2)
    for legs in ((1, 1, 1, 1), (1, 2, 1, 2), (2, 2, 2, 2), (1, 1, 2, 2)):
        if max(legs) > top:
            continue
        spec = VertexSpec(source_labels=legs[:2], target_labels=legs[2:])
        half = rotate(spec, H_TREE, 2)
        if not expansions_agree(half, n_vertex(spec.turned(2)), max_label=2 * top):
            violations.append(f"half turn of {spec} differs from the direct vertex")
        quarter = rotate(spec, H_TREE, 1)
        braided = braid_legs(quarter, 0)
        if not expansions_agree(braided, n_vertex(braided.spec), max_label=2 * top):
            violations.append(f"braided quarter turn of {spec} differs from the direct vertex")
        full = rotate(spec, H_TREE, 3)
        if not expansions_agree(full, n_vertex(spec.turned(3)), max_label=2 * top):
            violations.append(f"three-quarter turn of {spec} differs from the direct vertex")
    return violations


def check_extension(max_label: int) -> List[str]:
    violations: List[str] = []

    def check(condition: bool, message: str) -> None:
        if not condition:
            violations.append(message)

    top = min(max_label, 2)
    for j in range(top + 1):
        for i in range(top + 1):
            extended = extend(low_vertex(VertexSpec()), i, j)
            direct = low_vertex(VertexSpec(target_labels=(i, j)))
            check(extended.coefficients() == direct.coefficients(), f"extending the 0-vertex by {i},{j}")
            for k in _third_legs(i, j, top):
                extended = extend(low_vertex(VertexSpec(source_labels=(k,), target_labels=(k,))), i, j)
                direct = n_vertex(VertexSpec(source_labels=(k,), target_labels=(i, j)))
                check(extended.coefficients() == direct.coefficients(),
                      f"extending the 2-vertex on {k} by {i},{j} is not the 3-vertex")
    for legs in ((1, 1, 1, 1, 1, 1), (1, 1, 2, 2, 1, 1), (2, 2, 2, 2, 2, 2)):
        if max(legs) > top:
            continue
        v = bc_four_vertex(*legs[:4])
        extended = extend(v, legs[4], legs[5])
        check(extended.tree == H_TREE.grafted(), f"extension of {v.spec} is not on the grafted tree")
        direct = n_vertex(extended.spec, extended.tree)
        check(extended.coefficients() == direct.coefficients(), f"extension of {v.spec} differs from the 5-vertex")
        check(expansions_agree(extended, n_vertex(extended.spec, FIVE_LEG_TREES[1]), max_label=2 * top),
              f"extension of {v.spec} does not pair like the 5-vertex on {FIVE_LEG_TREES[1]}")
    return violations


def _third_legs(i: int, j: int, top: int):
    return [k for k in range(top + 1) if (i + j + k) % 2 == 0]


def check_parity(max_label: int) -> List[str]:
    violations: List[str] = []
    for j in range(1, max(max_label, 1) + 1, 2):
        for n in (3, 5):
            spec = VertexSpec(source_labels=(j,) * 2, target_labels=(j,) * (n - 2))
            if not n_vertex(spec).is_zero:
                violations.append(f"{spec} has odd valence and odd labels but a nonempty expansion")
    return violations


def check_vertices(max_label: int) -> List[str]:
    """Return a list of violation strings. Empty list = clean."""
    violations: List[str] = []
    for step in (check_low_vertices, check_parity, check_extension, check_turning,
                 check_composites, check_absorption, check_tree_independence):
        found = step(max_label)
        logger.debug("%s: %d violations", step.__name__, len(found))
        violations.extend(found)
    return violations
