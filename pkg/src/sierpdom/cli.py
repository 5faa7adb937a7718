"""``sierpdom`` command line.

Exit codes: 0 pass, 1 fail, 2 partial (budget exhausted), 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import harness
from .constructions import build_3k1_set, build_3k2_set, build_claim2_set, check_Hk, f_3k1, f_3k2, f_c18c7, f_constant
from .errors import BudgetExceededError, SierpdomError
from .formats import FORMATS as GRAPH_FORMATS
from .graph import Graph
from .harness import EXIT_FAIL, EXIT_PARTIAL, EXIT_PASS, EXIT_USAGE, RunConfig
from .product import FunctionAssignment, SierpinskiProduct
from .search import STRATEGIES, sierpinski_extrema, sierpinski_gamma
from .solver import DominationInstance, layer_partitions, solve


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _graph(spec: str) -> Graph:
    try:
        return harness.graph_from_spec(spec)
    except (ValueError, OSError) as exc:
        raise UsageError(f"graph {spec!r}: {exc}") from exc


def _function(spec: str, G: Graph, H: Graph) -> FunctionAssignment:
    kind, _, rest = spec.partition(":")
    try:
        if kind == "file":
            f = FunctionAssignment.from_json(Path(rest).read_text())
        elif kind == "constant":
            f = f_constant(G, H, int(rest))
        elif spec == "pattern:3k1":
            f = f_3k1(G.n)
        elif spec == "pattern:3k2":
            f = f_3k2(G.n)
        elif spec == "c18c7":
            f = f_c18c7()
        else:
            raise ValueError("expected file:PATH, constant:H, pattern:3k1, pattern:3k2 or c18c7")
        return f.validate(G, H)
    except (ValueError, OSError) as exc:
        raise UsageError(f"function {spec!r}: {exc}") from exc


def _constraints(text: str | None) -> dict:
    if not text:
        return {}
    try:
        raw = Path(text).read_text() if not text.lstrip().startswith("{") else text
        data = json.loads(raw)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"constraints: {exc}") from exc
    unknown = set(data) - {"forced_in", "pre_dominated", "deleted"}
    if unknown:
        raise UsageError(f"constraints: unknown keys {sorted(unknown)}")
    return {k: frozenset(v) for k, v in data.items()}


def _config(args) -> RunConfig:
    try:
        return RunConfig(cap=args.cap, budget=args.budget, workers=args.workers, format=args.format or "json", seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _flat_row(d: dict) -> dict:
    return {k: (json.dumps(v, separators=(",", ":")) if isinstance(v, (list, dict)) else v) for k, v in d.items()}


def _records(args, records: list[dict]) -> str:
    """A list of flat records in the requested format."""
    fmt = args.format or "json"
    if fmt == "json":
        return _dump(records[0] if len(records) == 1 else records)
    rows = [_flat_row(r) for r in records]
    cols = list(dict.fromkeys(k for r in rows for k in r))
    if fmt == "csv":
        import csv
        import io

        buf = io.StringIO()
        w = csv.DictWriter(buf, cols, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue()
    lines = ["| " + " | ".join(cols) + " |", "|" + "---|" * len(cols)]
    lines += ["| " + " | ".join(str(r.get(c, "")) for c in cols) + " |" for r in rows]
    return "\n".join(lines)


# subcommands ----------------------------------------------------------------


def cmd_gamma(args) -> int:
    G = _graph(args.g)
    cons = _constraints(args.constraints)
    if args.h:
        H = _graph(args.h)
        P = SierpinskiProduct(G, H, _function(args.f or "constant:1", G, H))
        inst = DominationInstance(P.graph, partitions=layer_partitions(P), **cons)
    else:
        inst = DominationInstance(G, **cons)
    cert = solve(inst, cap=args.cap, backend=args.backend)
    _emit(args, _records(args, [json.loads(cert.to_json())]))
    return EXIT_PASS


def cmd_product(args) -> int:
    G, H = _graph(args.g), _graph(args.h)
    P = SierpinskiProduct(G, H, _function(args.f, G, H))
    _emit(args, P.export(args.graph_format))
    return EXIT_PASS


def cmd_search(args) -> int:
    G, H = _graph(args.g), _graph(args.h)
    config = _config(args)
    try:
        if args.mode == "both":
            outs = list(sierpinski_extrema(G, H, args.strategy, config.budget, workers=config.workers))
        else:
            outs = [sierpinski_gamma(G, H, args.mode, args.strategy, config.budget, workers=config.workers)]
        code = EXIT_PASS
    except BudgetExceededError as exc:
        print(f"sierpdom: {exc}", file=sys.stderr)
        modes = ("min", "max") if args.mode == "both" else (args.mode,)
        outs = [exc.partial[m] for m in modes]
        code = EXIT_PARTIAL
    _emit(args, _records(args, [o.to_dict() for o in outs]))
    return code


def cmd_construct(args) -> int:
    if args.family == "3k1":
        plan = build_3k1_set(args.n, args.k)
    elif args.family == "3k2":
        plan = build_3k2_set(args.n, args.k)
    else:
        from .graph import build_cycle

        if not args.h:
            raise UsageError("--family claim2 needs --h")
        G, H = build_cycle(args.n), _graph(args.h)
        plan = build_claim2_set(G, H, _function(args.f or "constant:1", G, H), args.k)
    text = plan.to_json()
    if args.emit:
        Path(args.emit).write_text(text + "\n")
        print(f"{plan.family} set: {plan.size} vertices, dominating; plan written to {args.emit}")
    else:
        _emit(args, text)
    return EXIT_PASS


def cmd_check_hk(args) -> int:
    H = _graph(args.h)
    rep = check_Hk(H, args.k)
    _emit(args, _dump(rep.to_dict()))
    return EXIT_PASS


def _verify_params(args) -> dict:
    params = {}
    for key in ("n", "k", "p", "pairs", "fs", "max_order", "circulant_kp", "non_member"):
        value = getattr(args, key, None)
        if value is not None:
            params[key] = value
    for key in ("g", "h"):
        value = getattr(args, key, None)
        if value is not None:
            params[key] = [s for s in value.split(";") if s]
    return params


def cmd_verify(args) -> int:
    config = _config(args)
    check = harness.verify(args.id, _verify_params(args), config)
    _emit(args, harness.render([check], config.format, {"config": config.to_dict(), "seed": config.seed}))
    if check.verdict == "fail":
        print(f"reproduce: {check.repro}", file=sys.stderr)
    return harness.exit_code([check.verdict])


def cmd_table(args) -> int:
    config = _config(args)
    check = harness.table(args.id, args.n or "3..8", args.k or "1", args.p or "0,1,2", config)
    fmt = args.format or "markdown"
    text = harness.render_markdown_table(check) if fmt == "markdown" else harness.render([check], fmt)
    _emit(args, text)
    return harness.exit_code([check.verdict])


def cmd_run_all(args) -> int:
    config = _config(args)
    summary = harness.run_all(config)
    results = summary["_results"]
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "report.json").write_text(harness.summary_json(summary))
    head = [
        "# sierpdom verification report",
        "",
        f"overall: {summary['overall']}, seed {config.seed}, backend {summary['versions']['backend']}",
        "",
        "| check | verdict | rows | seconds |",
        "|---|---|---|---|",
    ]
    head += [f"| {c.id} | {c.verdict} | {len(c.rows)} | {c.seconds:.2f} |" for c in results]
    (out_dir / "report.md").write_text("\n".join(head) + "\n\n" + harness.render_markdown(results))
    if args.format in ("csv", "markdown") or args.out:
        _emit(args, harness.render(results, args.format or "json"))
    for c in results:
        print(f"{c.id:16s} {c.verdict:8s} {len(c.rows):4d} rows {c.seconds:8.2f}s", file=sys.stderr)
    print(f"overall: {summary['overall']}; reports in {out_dir}", file=sys.stderr)
    return harness.exit_code(summary["verdicts"].values())


# parser ---------------------------------------------------------------------


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--cap", type=int, default=d(512), help="solver vertex cap (default 512)")
    parser.add_argument("--budget", type=int, default=d(None), help="search budget in solver calls")
    parser.add_argument("--workers", type=int, default=d(1), help="worker processes for searches")
    parser.add_argument("--seed", type=int, default=d(0), help="seed for random suites")
    parser.add_argument("--format", choices=harness.FORMATS, default=d(None), help="output format")
    parser.add_argument("--out", default=d(None), help="output file (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sierpdom", description="Sierpinski product domination toolkit.")
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help):
        p = sub.add_parser(name, help=help, description=help)
        _global_flags(p, suppress=True)
        p.set_defaults(func=func)
        return p

    graph_help = "cycle:N | path:N | complete:N | star:N | circulant:N:j1,j2 | file:PATH"
    f_help = "file:PATH | constant:H | pattern:3k1 | pattern:3k2 | c18c7"

    p = add("gamma", cmd_gamma, "domination number with optional constraints")
    p.add_argument("--g", required=True, help=graph_help)
    p.add_argument("--h", help="second factor; solves the Sierpinski product G (x)_f H")
    p.add_argument("--f", help=f_help + " (default constant:1)")
    p.add_argument("--constraints", help='JSON text or file: {"forced_in":[],"pre_dominated":[],"deleted":[]}')
    p.add_argument("--backend", choices=("python", "cython"), help="solver kernel")

    p = add("product", cmd_product, "build G (x)_f H and write it as a graph file")
    p.add_argument("--g", required=True, help=graph_help)
    p.add_argument("--h", required=True, help=graph_help)
    p.add_argument("--f", required=True, help=f_help)
    p.add_argument("--graph-format", choices=GRAPH_FORMATS, default="json")

    p = add("search", cmd_search, "lower/upper Sierpinski domination number by search over f")
    p.add_argument("--g", required=True, help=graph_help)
    p.add_argument("--h", required=True, help=graph_help)
    p.add_argument("--mode", choices=("min", "max", "both"), default="min")
    p.add_argument("--strategy", choices=("auto",) + STRATEGIES, default="auto")

    p = add("construct", cmd_construct, "explicit dominating set from a proof construction")
    p.add_argument("--family", choices=("claim2", "3k1", "3k2"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--h", help="layer graph for claim2 (must lie in H_k)")
    p.add_argument("--f", help=f_help + " for claim2 (default constant:1)")
    p.add_argument("--emit", help="write the plan JSON here")

    p = add("check-hk", cmd_check_hk, "test membership in the class H_k")
    p.add_argument("--h", required=True, help=graph_help)
    p.add_argument("--k", type=int, required=True)

    p = add("verify", cmd_verify, "run one theorem check")
    p.add_argument("id", choices=harness.CHECK_IDS)
    for flag in ("--n", "--k", "--p", "--circulant-kp"):
        p.add_argument(flag, help="range like 3..7 or list like 1,2")
    p.add_argument("--non-member", help="graph spec expected outside H_k (prop1-Hk)")
    p.add_argument("--g", help="';'-separated graph specs")
    p.add_argument("--h", help="';'-separated graph specs")
    p.add_argument("--pairs", type=int)
    p.add_argument("--fs", type=int)
    p.add_argument("--max-order", type=int)

    p = add("table", cmd_table, "main-1 / main-2 value table (rows n, columns p)")
    p.add_argument("id", choices=("main-1", "main-2"))
    p.add_argument("--n", help="default 3..8")
    p.add_argument("--k", help="default 1")
    p.add_argument("--p", help="default 0,1,2")

    p = add("run-all", cmd_run_all, "the full desk-scale verification suite")
    p.add_argument("--out-dir", default="sierpdom-report", help="directory for report.json and report.md")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    # `--out json` is accepted as shorthand for `--format json` on stdout
    if args.out in harness.FORMATS and args.format is None:
        args.format, args.out = args.out, None
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"sierpdom: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SierpdomError as exc:
        print(f"sierpdom: {exc}", file=sys.stderr)
        # invalid input (bad vertex, order, file) is a usage error
        return EXIT_USAGE if isinstance(exc, ValueError) else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
