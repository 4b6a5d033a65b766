"""
On-demand verification.

Usage:
  python -m src.verify --suite all [--max-label 2]
  python -m src.verify --suite recoupling --max-label 3
"""
import argparse
import sys

from dotenv import load_dotenv
load_dotenv()

from src.main import _label, _workers
from src.verify.runner import SUITE_ORDER, expand_suite_names, print_reports, run_suites


def main() -> int:
    parser = argparse.ArgumentParser(
        prog="python -m src.verify",
        description="Exact identity and oracle checks for the recoupling engine",
    )
    parser.add_argument("--suite", default="all", choices=[*SUITE_ORDER, "all"], help="Suite to run (default: all)")
    parser.add_argument("--max-label", type=_label, default=2,
                        help="Raise the label bound of the scalable checks; fixed floors always run (default: 2)")
    parser.add_argument("--threads", type=_workers, default=1, help="Workers for state sums (default: 1)")
    args = parser.parse_args()
    return print_reports(run_suites(expand_suite_names(args.suite), args.max_label, args.threads))


if __name__ == "__main__":
    sys.exit(main())
