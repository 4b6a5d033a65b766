from typing import List

from src.models.schemas import CommandResult, ExpansionReport, SuiteReport

# ANSI color codes
RED = "\033[91m"
GREEN = "\033[92m"
BOLD = "\033[1m"
RESET = "\033[0m"

SUITE_TITLES = {
    "qpoly": "Laurent polynomials",
    "tl": "Temperley-Lieb and oracle",
    "recoupling": "Recoupling constants",
    "vertices": "Vertex expansions",
    "invariants": "Graph invariants",
}


def _paint(text: str, color: str, enabled: bool) -> str:
    return f"{color}{text}{RESET}" if enabled else text


def format_result(result: CommandResult) -> str:
    """Value on the first line, then one ``note:`` line per note."""
    lines = []
    if result.value is not None:
        lines.append(result.value.text)
    for note in result.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines)


def format_expansion(report: ExpansionReport) -> str:
    lines = [f"vertex {report.spec}  tree {report.tree}  ({report.internal_edges} internal edges)"]
    if not report.terms:
        lines.append("  (empty expansion)")
    for term in report.terms:
        labels = ",".join(map(str, term.labels)) or "-"
        lines.append(f"  [{labels}]  {term.coefficient}")
    return "\n".join(lines)


def format_suite_report(report: SuiteReport, color: bool = False) -> List[str]:
    lines = [f"\n{'='*50}", f"Suite {report.suite} — {SUITE_TITLES[report.suite]}"]
    if report.violations:
        lines.append(_paint("FAILURES:", RED + BOLD, color))
        for v in report.violations:
            lines.append(f"  ✗ {v}")
    else:
        lines.append(_paint("All checks passed.", GREEN, color))
    return lines
