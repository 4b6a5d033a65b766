from src.tl.jones_wenzl import jones_wenzl, projector_closure
from src.tl.matching import PlanarMatching, all_matchings
from src.tl.morphism import TLMorphism, loop_power, tl_compose
from src.tl.oracle import oracle_evaluate

__all__ = [
    "PlanarMatching",
    "TLMorphism",
    "all_matchings",
    "jones_wenzl",
    "loop_power",
    "oracle_evaluate",
    "projector_closure",
    "tl_compose",
]
