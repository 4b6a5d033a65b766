from src.recoupling.admissible import AdmissibleTriple, admissible_thirds, admissible_triples, is_admissible
from src.recoupling.cache import DEFAULT_CACHE, RecouplingCache
from src.recoupling.constants import delta, lambda_neg, lambda_pos, six_j, tet, theta, twist

__all__ = [
    "AdmissibleTriple",
    "DEFAULT_CACHE",
    "RecouplingCache",
    "admissible_thirds",
    "admissible_triples",
    "delta",
    "is_admissible",
    "lambda_neg",
    "lambda_pos",
    "six_j",
    "tet",
    "theta",
    "twist",
]
