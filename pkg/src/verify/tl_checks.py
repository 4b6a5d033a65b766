"""
Suite tl: Temperley-Lieb relations, Jones-Wenzl projectors and the oracle on
the networks whose values are known by hand, plus bar symmetry of the oracle
on planar networks and on mirrored crossings.
"""
from typing import List

from src.diagram.library import curl_network, loop_network, prism_network, tet_network, twisted_theta_network
from src.diagram.network import ColoredNetwork
from src.diagram.slices import SlicedDiagram
from src.qpoly import LOOP_VALUE, RatFunc
from src.recoupling import delta, twist
from src.tl import PlanarMatching, TLMorphism, jones_wenzl, oracle_evaluate, projector_closure


def check_tl(max_label: int) -> List[str]:
    """Return a list of violation strings. Empty list = clean."""
    violations: List[str] = []
    top = min(6, max_label + 2)

    def check(condition: bool, message: str) -> None:
        if not condition:
            violations.append(message)

    for n in range(2, top + 1):
        e = TLMorphism.from_matching(PlanarMatching.e(n, 0))
        check(e.then(e) == e.scale(LOOP_VALUE), f"e₁² ≠ δe₁ in TL_{n}")

    for n in range(top + 1):
        p = jones_wenzl(n)
        check(p.then(p) == p, f"P_{n} is not idempotent")
        check(p.coefficient(PlanarMatching.identity(n)) == RatFunc(1), f"P_{n} has identity coefficient ≠ 1")
        for i in range(n - 1):
            e = TLMorphism.from_matching(PlanarMatching.e(n, i))
            check(e.then(p).is_zero(), f"P_{n}·e_{i + 1} ≠ 0")
            check(p.then(e).is_zero(), f"e_{i + 1}·P_{n} ≠ 0")
        check(projector_closure(n) == RatFunc(delta(n)), f"tr P_{n} ≠ Δ_{n}")

    check(oracle_evaluate(ColoredNetwork(SlicedDiagram(kind="network"))) == RatFunc(1),
          "empty network does not evaluate to 1")
    for c in range(min(max_label, 3) + 1):
        plain = oracle_evaluate(loop_network(c))
        check(plain == RatFunc(delta(c)), f"oracle loop {c} ≠ Δ_{c}")
        check(plain.is_bar_invariant(), f"oracle loop {c} is not bar-invariant")
        check(oracle_evaluate(curl_network(c)) == twist(c) * plain, f"oracle curl on {c} ≠ twist·Δ")

    planar = [
        ("tet-112112", tet_network(1, 1, 2, 1, 1, 2)),
        ("tet-222222", tet_network(2, 2, 2, 2, 2, 2)),
        ("prism-110101110", prism_network((1, 1, 0, 1, 0, 1, 1, 1, 0))),
    ]
    for name, net in planar:
        check(oracle_evaluate(net).is_bar_invariant(), f"oracle value of {name} is not bar-invariant")
    for a, b, c in ((1, 1, 2), (2, 1, 1)):
        positive = oracle_evaluate(twisted_theta_network(a, b, c, 1))
        negative = oracle_evaluate(twisted_theta_network(a, b, c, -1))
        check(negative == positive.bar(), f"oracle twisted θ{(a, b, c)} is not bar-equivariant in the crossing sign")
    return violations
