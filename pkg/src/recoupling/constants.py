"""
Closed-form recoupling constants of one quantized SU(2) factor.

Conventions: δ = −A²−A⁻², Δ_n = (−1)^n [n+1]. The tetrahedron
tet(a, b, e, c, d, f) has vertex triples (a,b,e), (c,d,e), (a,d,f), (b,c,f),
so e and f are opposite edges, as are a,c and b,d. six_j(a,b,e,c,d,f) is the
coefficient of the tree whose internal edge f joins (a,d)|(b,c) when the tree
whose internal edge e joins (a,b)|(c,d) is recoupled.

Every closed form here is checked against the Temperley-Lieb oracle by the
``recoupling`` verify suite and by the unit tests.
"""
from itertools import permutations
from typing import Optional, Tuple

from src.errors import InadmissibleLabelsError
from src.qpoly import ONE, LaurentPoly, RatFunc, RAT_ZERO, quantum_factorial, quantum_integer
from src.recoupling.admissible import is_admissible
from src.recoupling.cache import DEFAULT_CACHE, RecouplingCache


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def delta(n: int, cache: Optional[RecouplingCache] = None) -> LaurentPoly:
    if n < 0:
        raise ValueError(f"no quantum dimension for label {n}")
    return (cache or DEFAULT_CACHE).get(
        "delta", (n,), lambda: quantum_integer(n + 1).scale(_sign(n)))


def _theta(a: int, b: int, c: int) -> RatFunc:
    if not is_admissible(a, b, c):
        return RAT_ZERO
    m, n, p = (a + b - c) // 2, (b + c - a) // 2, (c + a - b) // 2
    num = (quantum_factorial(m + n + p + 1) * quantum_factorial(m)
           * quantum_factorial(n) * quantum_factorial(p)).scale(_sign(m + n + p))
    den = quantum_factorial(m + n) * quantum_factorial(n + p) * quantum_factorial(p + m)
    return RatFunc(num, den)


def theta(a: int, b: int, c: int, cache: Optional[RecouplingCache] = None) -> RatFunc:
    """Value of the theta network with edges a, b, c; 0 when inadmissible."""
    key = tuple(sorted((a, b, c)))
    return (cache or DEFAULT_CACHE).get("theta", key, lambda: _theta(*key))


# vertices 0..3 of the tetrahedron; label positions (a, b, e, c, d, f)
_TET_EDGES = {(0, 1): 2, (0, 2): 0, (0, 3): 1, (1, 2): 4, (1, 3): 3, (2, 3): 5}


def _tet_key(labels: Tuple[int, ...]) -> Tuple[int, ...]:
    best = None
    for perm in permutations(range(4)):
        image = [0] * 6
        for (u, v), position in _TET_EDGES.items():
            pu, pv = sorted((perm[u], perm[v]))
            image[position] = labels[_TET_EDGES[(pu, pv)]]
        candidate = tuple(image)
        if best is None or candidate < best:
            best = candidate
    return best


def _tet_faces(a, b, e, c, d, f):
    return (a, b, e), (c, d, e), (a, d, f), (b, c, f)


def _tet(a: int, b: int, e: int, c: int, d: int, f: int) -> RatFunc:
    faces = _tet_faces(a, b, e, c, d, f)
    if not all(is_admissible(*t) for t in faces):
        return RAT_ZERO
    lows = [sum(t) // 2 for t in faces]
    highs = [(b + d + e + f) // 2, (a + c + e + f) // 2, (a + b + c + d) // 2]
    inner = ONE
    for hi in highs:
        for lo in lows:
            inner = inner * quantum_factorial(hi - lo)
    outer = ONE
    for label in (a, b, c, d, e, f):
        outer = outer * quantum_factorial(label)
    total = RAT_ZERO
    for s in range(max(lows), min(highs) + 1):
        den = ONE
        for lo in lows:
            den = den * quantum_factorial(s - lo)
        for hi in highs:
            den = den * quantum_factorial(hi - s)
        total = total + RatFunc(quantum_factorial(s + 1).scale(_sign(s)), den)
    return total * RatFunc(inner, outer)


def tet(a: int, b: int, e: int, c: int, d: int, f: int,
        cache: Optional[RecouplingCache] = None) -> RatFunc:
    labels = (a, b, e, c, d, f)
    key = _tet_key(labels)
    cache = cache or DEFAULT_CACHE
    # the canonical key is itself a valid label order
    return cache.get("tet", key, lambda: _tet(*key))


def six_j(a: int, b: int, e: int, c: int, d: int, f: int,
          cache: Optional[RecouplingCache] = None) -> RatFunc:
    cache = cache or DEFAULT_CACHE

    def compute() -> RatFunc:
        if not (is_admissible(a, d, f) and is_admissible(b, c, f)):
            return RAT_ZERO
        value = tet(a, b, e, c, d, f, cache)
        if value.is_zero():
            return RAT_ZERO
        return value * delta(f, cache) / (theta(a, d, f, cache) * theta(b, c, f, cache))

    return cache.get("sixj", (a, b, e, c, d, f), compute)


def lambda_pos(a: int, b: int, c: int) -> RatFunc:
    """Eigenvalue of the positive crossing of strands a, b on the c channel."""
    if not is_admissible(a, b, c):
        raise InadmissibleLabelsError((a, b, c))
    exponent = (c * (c + 2) - a * (a + 2) - b * (b + 2)) // 2
    return RatFunc(LaurentPoly.monomial(_sign((a + b - c) // 2), exponent))


def lambda_neg(a: int, b: int, c: int) -> RatFunc:
    return lambda_pos(a, b, c).bar()


def twist(n: int) -> RatFunc:
    """Factor of one positive curl on a color-n strand."""
    if n < 0:
        raise ValueError(f"no twist for label {n}")
    return RatFunc(LaurentPoly.monomial(_sign(n), n * (n + 2)))
