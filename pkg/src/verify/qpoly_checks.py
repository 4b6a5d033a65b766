"""
Suite qpoly: ring laws, bar involution and the quantum-integer identities the
recoupling formulas lean on.
"""
from typing import List

from src.qpoly import A, LOOP_VALUE, ONE, LaurentPoly, RatFunc, quantum_factorial, quantum_integer


def check_qpoly(max_label: int) -> List[str]:
    """Return a list of violation strings. Empty list = clean."""
    violations: List[str] = []
    top = max(2 * max_label, 4)

    def check(condition: bool, message: str) -> None:
        if not condition:
            violations.append(message)

    check(LOOP_VALUE == -(A ** 2) - A ** -2, "δ is not −A²−A⁻²")
    check(A * A ** -1 == ONE, "A·A⁻¹ ≠ 1")
    for n in range(1, top + 1):
        q = quantum_integer(n)
        check(q.is_bar_invariant(), f"[{n}] is not bar-invariant")
        check(q.span == 4 * (n - 1), f"[{n}] has span {q.span}, expected {4 * (n - 1)}")
        if n >= 2:
            # [2][n] = [n+1] + [n-1]
            check(quantum_integer(2) * q == quantum_integer(n + 1) + quantum_integer(n - 1),
                  f"[2][{n}] ≠ [{n + 1}] + [{n - 1}]")
        check(quantum_factorial(n) == quantum_factorial(n - 1) * q, f"[{n}]! recursion fails")

    samples = [LaurentPoly({-3: 2, 1: -1}), quantum_integer(3), LOOP_VALUE + 1, A ** 5]
    for p in samples:
        for q in samples:
            check(p * q == q * p, f"multiplication does not commute on {p}, {q}")
            check((p * q).bar() == p.bar() * q.bar(), f"bar is not multiplicative on {p}, {q}")
            r = RatFunc(p, q) * RatFunc(q, p)
            check(r == RatFunc(1), f"({p})/({q}) · ({q})/({p}) ≠ 1")
    x = RatFunc(quantum_integer(4), quantum_integer(2))
    check(x == RatFunc(A ** 4 + A ** -4), "[4]/[2] does not reduce to A⁴+A⁻⁴")
    check(x.is_laurent(), "[4]/[2] keeps a denominator")
    return violations
