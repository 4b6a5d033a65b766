from src.qpoly.laurent import A, ONE, ZERO, LaurentPoly, bar
from src.qpoly.quantum import LOOP_VALUE, quantum_factorial, quantum_integer
from src.qpoly.ratfunc import RAT_ONE, RAT_ZERO, RatFunc, exact_quotient, poly_gcd, ratfunc_normalize

__all__ = [
    "A",
    "LOOP_VALUE",
    "LaurentPoly",
    "ONE",
    "RAT_ONE",
    "RAT_ZERO",
    "RatFunc",
    "ZERO",
    "bar",
    "exact_quotient",
    "poly_gcd",
    "quantum_factorial",
    "quantum_integer",
    "ratfunc_normalize",
]
