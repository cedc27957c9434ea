"""Command-line interface.

Subcommands: classify | divide | color | verify | conjecture. Input graphs
come from --in (graph6 lines, or DIMACS for .col files), --exhaustive N
(all isomorphism classes on N vertices), or --random N,P,COUNT; --filter
keeps only graphs whose class flags all hold. Reports are versioned JSON
(--format csv is available for the color audit table).

Exit codes: 0 ok; 1 verification failure; 2 usage error; 3 input parse
failure; 4 class violation; 5 theorem violation; 6 budget exceeded.
"""

import argparse
import json
import sys

from .coloring import POWER_OF_TWO, QUADRATIC, audit_bounds, audit_to_csv
from .errors import GraphDivError, ParseError
from .harness import (
    CorpusSpec,
    conjecture_search,
    generate,
    graphs_with_ids,
    run_classify,
    run_color,
    run_divide,
    run_verify,
)
from .report import (
    STATUS_BUDGET_EXCEEDED,
    STATUS_CLASS_VIOLATION,
    STATUS_OK,
    STATUS_THEOREM_VIOLATION,
    STATUS_VERIFY_FAILED,
    build_report,
    report_to_json,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_CLASS_VIOLATION = 4
EXIT_THEOREM_VIOLATION = 5
EXIT_BUDGET_EXCEEDED = 6

_MODE_KIND = {"two": POWER_OF_TWO, "perfect": QUADRATIC}


def _add_input_flags(parser):
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--in", dest="in_path", metavar="FILE", help="graph6 lines, or DIMACS if FILE ends in .col")
    source.add_argument("--exhaustive", type=int, metavar="N", help="all isomorphism classes on N vertices")
    source.add_argument("--random", metavar="N,P,COUNT", help="COUNT seeded draws of G(N, P)")
    parser.add_argument("--seed", type=int, default=0, help="seed for random corpora (default 0)")
    parser.add_argument("--filter", default="", metavar="FLAGS", help="comma-separated class flags: p5free, c5free, bullfree, oddholefree, perfect")
    parser.add_argument("--budget-ms", type=float, default=None, metavar="M", help="flag records slower than M milliseconds as budget-exceeded")


def _add_output_flags(parser, formats=("json",)):
    parser.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")
    parser.add_argument("--format", choices=formats, default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphdiv", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="class membership flags with witnesses")
    _add_input_flags(p_classify)
    _add_output_flags(p_classify)

    p_divide = sub.add_parser("divide", help="run and verify a division")
    _add_input_flags(p_divide)
    _add_output_flags(p_divide)
    p_divide.add_argument("--mode", choices=("two", "perfect"), default="two")
    p_divide.add_argument("--weights", default="unit", metavar="FILE|unit", help="JSON weight list (flat, or one list per graph); default unit")

    p_color = sub.add_parser("color", help="division coloring with bound certificates")
    _add_input_flags(p_color)
    _add_output_flags(p_color, formats=("json", "csv"))
    p_color.add_argument("--mode", choices=("two", "perfect"), default="two")

    p_verify = sub.add_parser("verify", help="re-check the divisions/colorings in a stored report")
    p_verify.add_argument("--division", required=True, metavar="FILE", help="report produced by divide or color")
    p_verify.add_argument("--graph", metavar="FILE", help="restrict to graphs appearing in this file")
    _add_output_flags(p_verify)

    p_conj = sub.add_parser("conjecture", help="sweep small graphs for 2-divisibility vs odd-hole-freeness")
    p_conj.add_argument("--max-n", type=int, required=True, metavar="N")
    p_conj.add_argument("--seed", type=int, default=0)
    _add_output_flags(p_conj)

    return parser


def _parse_filters(text: str):
    return tuple(token.strip() for token in text.split(",") if token.strip())


def _corpus_spec(args) -> CorpusSpec:
    filters = _parse_filters(args.filter)
    if args.in_path is not None:
        return CorpusSpec(kind="file", path=args.in_path, filters=filters, seed=args.seed)
    if args.exhaustive is not None:
        return CorpusSpec(kind="exhaustive", n=args.exhaustive, filters=filters, seed=args.seed)
    parts = args.random.split(",")
    if len(parts) != 3:
        raise ValueError("--random expects N,P,COUNT")
    return CorpusSpec(
        kind="random",
        n=int(parts[0]),
        edge_prob=float(parts[1]),
        count=int(parts[2]),
        filters=filters,
        seed=args.seed,
    )


def _load_graphs(args) -> list:
    return graphs_with_ids(generate(_corpus_spec(args)))


def _apply_time_budget(records, budget_ms):
    if budget_ms is None:
        return
    for record in records:
        if record.get("status") == STATUS_OK and record.get("elapsed_ms", 0.0) > budget_ms:
            record["status"] = STATUS_BUDGET_EXCEEDED
            record["error"] = f"record took {record['elapsed_ms']}ms, budget is {budget_ms}ms"


def _exit_code(records) -> int:
    statuses = {record.get("status") for record in records}
    if STATUS_THEOREM_VIOLATION in statuses:
        return EXIT_THEOREM_VIOLATION
    if STATUS_CLASS_VIOLATION in statuses:
        return EXIT_CLASS_VIOLATION
    if STATUS_BUDGET_EXCEEDED in statuses:
        return EXIT_BUDGET_EXCEEDED
    if STATUS_VERIFY_FAILED in statuses:
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def _write(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _options_of(args, *names) -> dict:
    return {name: getattr(args, name) for name in names if getattr(args, name, None) is not None}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "classify":
            graphs = _load_graphs(args)
            records = run_classify(graphs)
            _apply_time_budget(records, args.budget_ms)
            report = build_report("classify", records, seed=args.seed, options=_options_of(args, "filter"))
            _write(report_to_json(report), args.out)
            return _exit_code(records)

        if args.command == "divide":
            graphs = _load_graphs(args)
            weights_spec = None
            if args.weights != "unit":
                with open(args.weights, encoding="utf-8") as handle:
                    weights_spec = json.load(handle)
            records = run_divide(graphs, mode=args.mode, weights_spec=weights_spec)
            _apply_time_budget(records, args.budget_ms)
            report = build_report("divide", records, seed=args.seed, options=_options_of(args, "mode", "filter", "weights"))
            _write(report_to_json(report), args.out)
            return _exit_code(records)

        if args.command == "color":
            graphs = _load_graphs(args)
            if args.format == "csv":
                rows = audit_bounds(graphs, kind=_MODE_KIND[args.mode])
                _write(audit_to_csv(rows), args.out)
                return EXIT_BUDGET_EXCEEDED if any(r.error for r in rows) else EXIT_OK
            records = run_color(graphs, mode=args.mode)
            _apply_time_budget(records, args.budget_ms)
            report = build_report("color", records, seed=args.seed, options=_options_of(args, "mode", "filter"))
            _write(report_to_json(report), args.out)
            return _exit_code(records)

        if args.command == "verify":
            with open(args.division, encoding="utf-8") as handle:
                stored = json.load(handle)
            graphs = None
            if args.graph:
                spec = CorpusSpec(kind="file", path=args.graph)
                graphs = graphs_with_ids(generate(spec))
            records = run_verify(stored, graphs)
            report = build_report("verify", records, options=_options_of(args, "division", "graph"))
            _write(report_to_json(report), args.out)
            return _exit_code(records)

        if args.command == "conjecture":
            report = conjecture_search(args.max_n, seed=args.seed)
            _write(report_to_json(report), args.out)
            summary = report["summary"]
            if summary["necessity_violations"]:
                return EXIT_THEOREM_VIOLATION
            if summary["counterexamples"]:
                return EXIT_VERIFY_FAILED
            return _exit_code(report["records"])

        parser.error(f"unknown command {args.command!r}")
    except ParseError as exc:
        print(f"graphdiv: parse error ({exc.kind}): {exc}", file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as exc:
        print(f"graphdiv: cannot read {exc.filename}", file=sys.stderr)
        return EXIT_PARSE
    except (GraphDivError, ValueError, json.JSONDecodeError) as exc:
        print(f"graphdiv: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


def console_main():
    sys.exit(main())


if __name__ == "__main__":
    console_main()
