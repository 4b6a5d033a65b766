"""
Suite runner shared by ``spinnet verify`` and ``python -m src.verify``.

Suites run in a fixed order and print nothing but their violations, so the
output is the same for every thread count.
"""
from typing import Callable, Dict, List, Sequence

from src.models.schemas import SuiteReport
from src.utils.formatters import format_suite_report
from src.utils.logger import get_logger

logger = get_logger(__name__)

SUITE_ORDER = ("qpoly", "tl", "recoupling", "vertices", "invariants")


def _suites(threads: int) -> Dict[str, Callable[[int], List[str]]]:
    from src.verify.invariants_checks import check_invariants
    from src.verify.qpoly_checks import check_qpoly
    from src.verify.recoupling_checks import check_recoupling
    from src.verify.tl_checks import check_tl
    from src.verify.vertices_checks import check_vertices

    return {
        "qpoly": check_qpoly,
        "tl": check_tl,
        "recoupling": check_recoupling,
        "vertices": check_vertices,
        "invariants": lambda max_label: check_invariants(max_label, threads),
    }


def expand_suite_names(name: str) -> List[str]:
    if name == "all":
        return list(SUITE_ORDER)
    if name not in SUITE_ORDER:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_ORDER)} or all")
    return [name]


def run_suites(names: Sequence[str], max_label: int, threads: int = 1) -> List[SuiteReport]:
    if max_label < 0:
        raise ValueError(f"max label must be non-negative, got {max_label}")
    suites = _suites(threads)
    reports = []
    for name in names:
        logger.info("Suite %s: starting (max label %d)", name, max_label)
        violations = suites[name](max_label)
        logger.info("Suite %s: %d violations", name, len(violations))
        reports.append(SuiteReport(suite=name, max_label=max_label, violations=violations))
    return reports


def print_reports(reports: Sequence[SuiteReport], color: bool = False) -> int:
    """Print one block per suite; return 1 when any suite failed."""
    for report in reports:
        print("\n".join(format_suite_report(report, color)))
    return 0 if all(r.passed for r in reports) else 1
