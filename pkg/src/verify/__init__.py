from src.verify.runner import SUITE_ORDER, expand_suite_names, print_reports, run_suites

__all__ = ["SUITE_ORDER", "expand_suite_names", "print_reports", "run_suites"]
