import argparse
import json
import os
import sys
from typing import Dict, List, Optional

from dotenv import load_dotenv

from src.errors import (
    DiagramSchemaError,
    DiagramSyntaxError,
    InadmissibleLabelsError,
    InvalidDiagramError,
    OracleBudgetExceeded,
    SpinnetError,
)
from src.utils.logger import set_debug

EXIT_CODES = {
    DiagramSyntaxError: 2,
    DiagramSchemaError: 2,
    InadmissibleLabelsError: 3,
    InvalidDiagramError: 4,
    OracleBudgetExceeded: 5,
}

RECOUPLING_ARITY = {"delta": 1, "theta": 3, "tet": 6, "sixj": 6, "lambda": 3, "twist": 1}


def exit_code_for(exc: BaseException) -> int:
    for cls, code in EXIT_CODES.items():
        if isinstance(exc, cls):
            return code
    return 1


class UsageError(Exception):
    """Arguments parsed but do not make sense together."""


def _label(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"labels are non-negative twice-spins, got {value}")
    return value


def _output_path(text: str) -> str:
    from src.utils.exporters import EXPORTERS

    if not any(text.endswith(ext) for ext in EXPORTERS):
        raise argparse.ArgumentTypeError(f"output must end in one of {', '.join(EXPORTERS)}, got {text!r}")
    return text


def _workers(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"need at least one worker, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinnet",
        description="Exact recoupling theory, Barrett-Crane vertices and G_j invariants of embedded graphs",
    )
    parser.add_argument("--json", action="store_true", help="Print a JSON envelope with input echo and engine metadata")
    parser.add_argument("--verbose", action="store_true", help="Debug logging on stderr")
    parser.add_argument("--output", type=_output_path, default=None, metavar="PATH", help="Also write the result to PATH (.json or .txt)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recoupling", help="Δ, θ, Tet, 6j, λ and twist constants")
    p.add_argument("query", choices=list(RECOUPLING_ARITY), help="Which constant")
    p.add_argument("labels", nargs="+", type=_label, help="Twice-spin labels")

    p = sub.add_parser("expand-vertex", help="The n-vertex expansion of a boundary as JSON")
    p.add_argument("--labels", required=True, metavar="a,b/c,d", help="Source labels / target labels")
    p.add_argument("--tree", default="", metavar="SPEC", help="Tree bracketing over the leaves, e.g. ((0,1),2) (default: caterpillar)")

    p = sub.add_parser("eval", help="Evaluate a diagram file")
    p.add_argument("--file", required=True, metavar="PATH", help="Diagram in the JSON or text format")
    colors = p.add_mutually_exclusive_group()
    colors.add_argument("--j", type=_label, help="Color every edge with this label")
    colors.add_argument("--colors", metavar="PATH", help="JSON object mapping edge ids to labels")
    p.add_argument("--engine", default="fast", choices=["fast", "oracle"], help="Evaluation path (default: fast)")
    p.add_argument("--threads", type=_workers, default=None, help="Workers for outer sums (default: SPINNET_THREADS or 1)")

    p = sub.add_parser("jones", help="Kauffman bracket or normalized Jones polynomial of a link diagram")
    p.add_argument("--file", required=True, metavar="PATH", help="Link diagram in the JSON or text format")
    p.add_argument("--normalized", action="store_true", help="Multiply by (-A^3)^-writhe")

    p = sub.add_parser("oracle", help="Brute-force Temperley-Lieb value of a colored network")
    p.add_argument("--file", required=True, metavar="PATH", help="Network in the JSON or text format")
    p.add_argument("--j", type=_label, help="Color for edges the file leaves uncolored")

    p = sub.add_parser("verify", help="Run the identity and oracle suites")
    p.add_argument("--suite", default="all",
                   choices=["qpoly", "tl", "recoupling", "vertices", "invariants", "all"],
                   help="Suite to run (default: all)")
    p.add_argument("--max-label", type=_label, default=2,
                   help="Raise the label bound of the scalable checks; fixed floors always run (default: 2)")
    p.add_argument("--threads", type=_workers, default=None, help="Workers for state sums (default: SPINNET_THREADS or 1)")
    return parser


# ── commands ─────────────────────────────────────────────────────────────────

def _recoupling(args, result) -> None:
    from src.recoupling import delta, is_admissible, lambda_pos, six_j, tet, theta, twist

    labels = args.labels
    if len(labels) != RECOUPLING_ARITY[args.query]:
        raise UsageError(f"{args.query} takes {RECOUPLING_ARITY[args.query]} labels, got {len(labels)}")
    result.input = {"query": args.query, "labels": labels}
    if args.query == "delta":
        value = delta(labels[0])
    elif args.query == "twist":
        value = twist(labels[0])
    elif args.query == "lambda":
        value = lambda_pos(*labels)
    elif args.query == "theta":
        value = theta(*labels)
        if not is_admissible(*labels):
            result.notes.append(f"inadmissible triple {tuple(labels)}")
    else:
        a, b, e, c, d, f = labels
        value = tet(*labels) if args.query == "tet" else six_j(*labels)
        for triple in ((a, b, e), (c, d, e), (a, d, f), (b, c, f)):
            if not is_admissible(*triple):
                result.notes.append(f"inadmissible triple {triple}")
                break
    _set_value(result, value)


def _expand_vertex(args, result) -> None:
    from src.models.schemas import ExpansionReport, ExpansionTerm
    from src.vertices import TreeShape, VertexSpec, n_vertex

    try:
        spec = VertexSpec.parse(args.labels)
        tree = TreeShape.parse(args.tree, spec.n) if args.tree else None
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if tree is not None and spec.n < 3:
        raise UsageError("tree shapes apply to vertices with at least three legs")
    v = n_vertex(spec, tree)
    result.input = {"labels": str(spec), "tree": args.tree or None}
    result.expansion = ExpansionReport(
        spec=str(spec),
        sources=list(spec.source_labels),
        targets=list(spec.target_labels),
        tree=str(v.tree),
        internal_edges=v.tree.internal_edge_count,
        terms=[ExpansionTerm(labels=list(labels), coefficient=str(c)) for labels, c in v.terms],
    )


def _read_colors(path: str) -> Dict[str, int]:
    with open(path, encoding="utf-8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as exc:
            raise UsageError(f"{path}: not JSON: {exc}") from exc
    if not isinstance(data, dict) or not all(isinstance(v, int) and v >= 0 for v in data.values()):
        raise UsageError(f"{path}: expected a JSON object of edge id -> non-negative label")
    return {str(k): v for k, v in data.items()}


def _eval(args, result, settings) -> None:
    from src.diagram import ColoredNetwork, eval_single, load_diagram
    from src.invariant import EmbeddedGraphDiagram, g_invariant, g_invariant_colored
    from src.models.schemas import EngineInfo
    from src.tl import oracle_evaluate

    d = load_diagram(args.file)
    threads = args.threads or settings.threads
    colors = _read_colors(args.colors) if args.colors else None
    result.input = {"file": args.file, "kind": d.kind, "j": args.j, "colors": args.colors}
    result.engine = EngineInfo(name=args.engine, threads=threads,
                               oracle_budget=settings.oracle_budget if args.engine == "oracle" else None)
    if d.kind == "graph":
        g = EmbeddedGraphDiagram(d)
        if args.j is not None:
            value = g_invariant(g, args.j, threads, args.engine)
        else:
            value = g_invariant_colored(g, colors, threads, args.engine)
    else:
        net = ColoredNetwork(d, colors, default=args.j)
        value = oracle_evaluate(net) if args.engine == "oracle" else eval_single(net, threads=threads)
    _set_value(result, value)


def _jones(args, result) -> None:
    from src.diagram import load_diagram
    from src.invariant import jones, writhe

    d = load_diagram(args.file)
    result.input = {"file": args.file, "normalized": args.normalized}
    if args.normalized:
        result.notes.append(f"writhe {writhe(d)}")
    _set_value(result, jones(d, normalized=args.normalized))


def _oracle(args, result, settings) -> None:
    from src.diagram import ColoredNetwork, load_diagram
    from src.models.schemas import EngineInfo
    from src.tl import oracle_evaluate

    d = load_diagram(args.file)
    if d.kind == "graph":
        raise UsageError("the oracle evaluates networks and links; use `eval --engine oracle` for graphs")
    result.input = {"file": args.file, "j": args.j}
    result.engine = EngineInfo(name="oracle", oracle_budget=settings.oracle_budget)
    _set_value(result, oracle_evaluate(ColoredNetwork(d, default=args.j), settings.oracle_budget))


def _set_value(result, value) -> None:
    from src.models.schemas import PolyValue

    result.value = PolyValue.of(value)


def dispatch(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        os.environ["SPINNET_DEBUG"] = "1"
        set_debug(True)

    from src.config import Settings
    from src.models.schemas import CommandResult
    from src.utils.exporters import export_json, export_to_file
    from src.utils.formatters import format_result

    try:
        settings = Settings.from_env()
    except ValueError as exc:
        print(f"spinnet {args.command}: error: bad SPINNET_* setting: {exc}", file=sys.stderr)
        return 2
    result = CommandResult(command=args.command)
    try:
        if args.command == "verify":
            return _verify(args, result, settings)
        if args.command == "recoupling":
            _recoupling(args, result)
        elif args.command == "expand-vertex":
            _expand_vertex(args, result)
        elif args.command == "eval":
            _eval(args, result, settings)
        elif args.command == "jones":
            _jones(args, result)
        elif args.command == "oracle":
            _oracle(args, result, settings)
    except (UsageError, OSError) as exc:
        print(f"spinnet {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except SpinnetError as exc:
        print(f"spinnet {args.command}: error: {exc}", file=sys.stderr)
        return exit_code_for(exc)
    except Exception as exc:  # noqa: BLE001
        print(f"spinnet {args.command}: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1

    if args.json:
        text = export_json(result)
    elif result.expansion is not None:
        text = export_json(result.expansion)
    else:
        text = format_result(result)
    print(text)
    if args.output:
        export_to_file(result, text, args.output)
    return 0


def _verify(args, result, settings) -> int:
    from src.utils.exporters import export_json, export_to_file
    from src.verify import expand_suite_names, print_reports, run_suites

    threads = args.threads or settings.threads
    reports = run_suites(expand_suite_names(args.suite), args.max_label, threads)
    result.input = {"suite": args.suite, "max_label": args.max_label}
    result.suites = reports
    if args.json:
        print(export_json(result))
        code = 0 if all(r.passed for r in reports) else 1
    else:
        code = print_reports(reports, color=sys.stdout.isatty())
    if args.output:
        export_to_file(result, "\n".join(f"{r.suite}: {'ok' if r.passed else 'FAILED'}" for r in reports), args.output)
    return code


def main() -> None:
    load_dotenv()
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
