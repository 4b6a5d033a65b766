"""
Suite recoupling: closed forms against the oracle, then the algebraic
identities (θ and Tet symmetry, orthogonality, pentagon, twist) and the
agreement of the fast evaluators with the oracle.

Each check has a fixed label floor that every run covers; max_label only
raises the bound of the checks that scale (θ oracle and θ symmetry).
"""
from itertools import permutations, product
from typing import List

from src.diagram.fusion import eval_single
from src.diagram.library import crossing_corpus, planar_corpus, tet_labels, tet_network, theta_network
from src.diagram.planar import eval_planar
from src.qpoly import RAT_ZERO, RatFunc
from src.recoupling import admissible_thirds, admissible_triples, delta, is_admissible, six_j, tet, theta, twist
from src.tl import oracle_evaluate, projector_closure
from src.utils.logger import get_logger

logger = get_logger(__name__)

# label bounds every run covers; --max-label only raises the scalable ones
DELTA_TOP = 6
THETA_ORACLE_TOP = 4
TET_ORACLE_TOP = 3
SIX_J_ORACLE_TOP = 2
THETA_SYMMETRY_TOP = 6
TET_SYMMETRY_TOP = 3
ORTHOGONALITY_TOP = 4
PENTAGON_TOP = 3
TWIST_TOP = 8
EVALUATOR_COLOR_TOP = 2
FAMILY_COLOR_TOP = 3


def check_oracle_ladder(max_label: int) -> List[str]:
    violations: List[str] = []

    def check(condition: bool, message: str) -> None:
        if not condition:
            violations.append(message)

    for n in range(DELTA_TOP + 1):
        check(projector_closure(n) == RatFunc(delta(n)), f"Δ_{n} disagrees with tr P_{n}")
    for a, b, c in admissible_triples(max(THETA_ORACLE_TOP, max_label)):
        check(oracle_evaluate(theta_network(a, b, c)) == theta(a, b, c), f"θ{(a, b, c)} disagrees with the oracle")
    oracle_theta = {}
    for labels in tet_labels(TET_ORACLE_TOP):
        value = oracle_evaluate(tet_network(*labels))
        check(value == tet(*labels), f"Tet{labels} disagrees with the oracle")
        if max(labels) > SIX_J_ORACLE_TOP:
            continue
        a, b, e, c, d, f = labels
        for pair in ((a, d, f), (b, c, f)):
            if pair not in oracle_theta:
                oracle_theta[pair] = oracle_evaluate(theta_network(*pair))
        # the e-tree closed against the f-tree is Tet; the f-tree against itself is θθ/Δ_f
        recoupled = six_j(a, b, e, c, d, f) * oracle_theta[(a, d, f)] * oracle_theta[(b, c, f)] / delta(f)
        check(recoupled == value, f"6j{labels} does not recouple the oracle Tet")
    return violations


def check_identities(max_label: int) -> List[str]:
    violations: List[str] = []

    def check(condition: bool, message: str) -> None:
        if not condition:
            violations.append(message)

    theta_top = max(THETA_SYMMETRY_TOP, max_label)
    for triple in admissible_triples(theta_top):
        value = theta(*triple)
        for perm in set(permutations(triple)):
            check(theta(*perm) == value, f"θ{perm} ≠ θ{triple}")
        check(value.is_bar_invariant(), f"θ{triple} is not bar-invariant")
    for n in range(theta_top + 1):
        check(delta(n).is_bar_invariant(), f"Δ_{n} is not bar-invariant")

    for a, b, e, c, d, f in tet_labels(TET_SYMMETRY_TOP):
        value = tet(a, b, e, c, d, f)
        check(value.is_bar_invariant(), f"Tet{(a, b, e, c, d, f)} is not bar-invariant")
        for other in ((c, d, e, a, b, f), (b, a, e, d, c, f), (a, d, f, c, b, e)):
            check(tet(*other) == value, f"Tet{(a, b, e, c, d, f)} ≠ Tet{other}")

    violations.extend(_orthogonality(ORTHOGONALITY_TOP))
    violations.extend(_pentagon(PENTAGON_TOP))
    for n in range(TWIST_TOP + 1):
        check(twist(n) * twist(n).bar() == RatFunc(1), f"twist({n}) is not unimodular")
    return violations


def _orthogonality(top: int) -> List[str]:
    """Σ_n Δ_n/(θ(a,b,n)θ(c,d,n)) Tet(a,b,n,c,d,m) Tet(a,b,n,c,d,m') = δ_mm' θ(a,d,m)θ(b,c,m)/Δ_m."""
    out = []
    for a, b, c, d in product(range(top + 1), repeat=4):
        channels = [n for n in admissible_thirds(a, b) if n <= 2 * top and is_admissible(c, d, n)]
        targets = [m for m in admissible_thirds(a, d) if is_admissible(b, c, m)]
        if not channels or not targets:
            continue
        for m, m2 in product(targets, repeat=2):
            total = RAT_ZERO
            for n in channels:
                total = total + (RatFunc(delta(n)) / (theta(a, b, n) * theta(c, d, n))
                                 * tet(a, b, n, c, d, m) * tet(a, b, n, c, d, m2))
            expected = theta(a, d, m) * theta(b, c, m) / delta(m) if m == m2 else RAT_ZERO
            if total != expected:
                out.append(f"orthogonality fails at a,b,c,d={a},{b},{c},{d} m={m} m'={m2}")
    return out


def _pentagon(top: int) -> List[str]:
    """
    Five legs l1..l5 in cyclic order; trees are pairs of disjoint diagonals.
    The two flip paths from {12:x, 34:y} to {23:u, 45:z} agree.
    """
    out = []
    checked = 0
    for l1, l2, l3, l4, l5 in product(range(top + 1), repeat=5):
        if (l1 + l2 + l3 + l4 + l5) % 2:
            continue
        for x in admissible_thirds(l1, l2):
            for y in admissible_thirds(l3, l4):
                if not is_admissible(x, y, l5):
                    continue
                for z in admissible_thirds(l4, l5):
                    for u in admissible_thirds(l2, l3):
                        if not is_admissible(u, z, l1):
                            continue
                        left = six_j(l3, l4, y, l5, x, z) * six_j(l1, l2, x, l3, z, u)
                        right = RAT_ZERO
                        for w in admissible_thirds(l5, l1):
                            right = right + (six_j(l1, l2, x, y, l5, w)
                                             * six_j(l3, l4, y, w, l2, u)
                                             * six_j(l5, l1, w, u, l4, z))
                        checked += 1
                        if left != right:
                            out.append(f"pentagon fails at legs {(l1, l2, l3, l4, l5)} x={x} y={y} z={z} u={u}")
    logger.debug("pentagon: %d instances", checked)
    return out


def check_evaluators(max_label: int) -> List[str]:
    violations: List[str] = []
    for name, net in planar_corpus(EVALUATOR_COLOR_TOP):
        value = eval_planar(net)
        if value != oracle_evaluate(net):
            violations.append(f"eval_planar disagrees with the oracle on {name}")
        if eval_single(net, "A_inverse") != value.bar():
            violations.append(f"eval_single is not bar-equivariant on {name}")
    for a, b, c in admissible_triples(FAMILY_COLOR_TOP):
        if eval_planar(theta_network(a, b, c)) != theta(a, b, c):
            violations.append(f"eval_planar disagrees with θ{(a, b, c)}")
    for labels in tet_labels(FAMILY_COLOR_TOP):
        if eval_planar(tet_network(*labels)) != tet(*labels):
            violations.append(f"eval_planar disagrees with Tet{labels}")
    for name, net in crossing_corpus():
        value = eval_single(net)
        if value != oracle_evaluate(net):
            violations.append(f"eval_single disagrees with the oracle on {name}")
        if eval_single(net, "A_inverse") != value.bar():
            violations.append(f"eval_single is not bar-equivariant on {name}")
    return violations


def check_recoupling(max_label: int) -> List[str]:
    """Return a list of violation strings. Empty list = clean."""
    return check_oracle_ladder(max_label) + check_identities(max_label) + check_evaluators(max_label)
