"""Quantum integers and factorials in the bracket variable."""
from functools import lru_cache

from src.qpoly.laurent import ONE, ZERO, LaurentPoly


@lru_cache(maxsize=None)
def quantum_integer(n: int) -> LaurentPoly:
    """[n] = A^{2(n-1)} + A^{2(n-3)} + ... + A^{-2(n-1)}; [0] = 0."""
    if n < 0:
        raise ValueError(f"quantum integer of negative n={n}")
    if n == 0:
        return ZERO
    return LaurentPoly({2 * (n - 1 - 2 * k): 1 for k in range(n)})


@lru_cache(maxsize=None)
def quantum_factorial(n: int) -> LaurentPoly:
    if n < 0:
        raise ValueError(f"quantum factorial of negative n={n}")
    result = ONE
    for k in range(2, n + 1):
        result = result * quantum_integer(k)
    return result


#: loop value of the bracket, δ = −A² − A⁻²
LOOP_VALUE = LaurentPoly({2: -1, -2: -1})
