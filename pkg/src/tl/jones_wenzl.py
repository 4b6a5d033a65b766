"""
Jones-Wenzl projectors by the Wenzl recursion

    P_1 = id_1,  P_n = P_{n-1}⊗id_1 + ([n-1]/[n]) (P_{n-1}⊗id_1) e_{n-1} (P_{n-1}⊗id_1)

kept over one common denominator and reduced after every step.
"""
import threading
from typing import Dict

from src.qpoly import quantum_integer
from src.tl.matching import PlanarMatching
from src.tl.morphism import TLMorphism
from src.utils.logger import get_logger

logger = get_logger(__name__)

_TABLE: Dict[int, TLMorphism] = {0: TLMorphism.identity(0), 1: TLMorphism.identity(1)}
_LOCK = threading.Lock()


def jones_wenzl(n: int) -> TLMorphism:
    if n < 0:
        raise ValueError(f"no projector on {n} strands")
    with _LOCK:
        cached = _TABLE.get(n)
        if cached is not None:
            return cached
        for k in range(2, n + 1):
            if k not in _TABLE:
                _TABLE[k] = _wenzl_step(_TABLE[k - 1], k)
        return _TABLE[n]


def _wenzl_step(previous: TLMorphism, n: int) -> TLMorphism:
    logger.debug("building Jones-Wenzl projector P_%d", n)
    widened = previous.tensor(TLMorphism.identity(1))
    e_last = TLMorphism.from_matching(PlanarMatching.e(n, n - 2))
    sandwich = widened.then(e_last).then(widened)
    return widened + sandwich.scale(quantum_integer(n - 1), quantum_integer(n))


def projector_closure(n: int):
    """Trace of P_n; equals the quantum dimension Δ_n."""
    return jones_wenzl(n).closure()


__all__ = ["jones_wenzl", "projector_closure"]
