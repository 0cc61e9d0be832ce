"""Command-line interface: ``extraconn gen|analyze|rho|verify``.

Exit codes: 0 success, 2 parse or spec errors, 3 unmet preconditions
(input not super, disconnected input, budget exhausted), 4 theorem-check
failures.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from pathlib import Path

from .budget import BudgetExceeded, time_budget
from .corpus import BUILTIN_TAGS, builtin_corpus, load_corpus_file
from .engine import DisconnectedInput, NotExtraConnected, full_report
from .families import generate, parse_spec
from .graph import Graph, GraphError, eta, girth, is_edge_regular, xi
from .persistence import NotSuper, default_workers, rho_h, rho_h_bruteforce
from .serialize import format_graph, read_graph
from .theorems import BadCheckId, run_corpus, select_checks

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_CHECKS = 0, 2, 3, 4
ANALYSIS_SCHEMA = "extraconn.analysis/1"
RHO_SCHEMA = "extraconn.rho/1"


def load_input(text: str) -> Graph:
    """A graph file path, or else a family spec such as ``petersen``."""
    path = Path(text)
    if path.exists():
        return read_graph(path)
    return generate(parse_spec(text))


def _dump(obj, out: str | None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _fragment_json(frag):
    if frag is None:
        return None
    return {
        "vertices": list(frag.vertices),
        "boundary": [list(e) for e in frag.boundary],
        "boundary_size": frag.boundary_size,
        "complement_components": list(frag.comp_sizes_complement),
    }


def analysis(g: Graph, h_max: int, with_rho: bool = False, workers: int = 1) -> dict:
    g_len = girth(g)
    reports = full_report(g, h_max)
    levels = []
    rho = {}
    for r in reports:
        levels.append({
            "h": r.h,
            "exists": r.exists,
            "lambda_h": r.lambda_h,
            "xi_h": r.xi_h,
            "optimal": r.optimal,
            "super": r.super,
            "min_cut_count": r.all_min_fragments_count,
            "witness": _fragment_json(r.witness),
            "violation": _fragment_json(r.violation),
            "beyond_delta": r.beyond_delta,
        })
        if with_rho and r.super:
            rho[str(r.h)] = rho_h(g, r.h, workers=workers).as_dict()
    out = {
        "schema": ANALYSIS_SCHEMA,
        "order": g.n,
        "size": g.m,
        "degrees": {"min": g.min_degree, "max": g.max_degree},
        "girth": None if math.isinf(g_len) else int(g_len),
        "xi": xi(g) if g.m else None,
        "eta": eta(g) if g.m else None,
        "edge_regular": is_edge_regular(g) if g.m else None,
        "levels": levels,
    }
    if with_rho:
        out["rho"] = rho
    return out


# -- subcommands -------------------------------------------------------------------


def cmd_gen(args) -> int:
    g = generate(parse_spec(args.spec))
    text = format_graph(g, args.format)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_analyze(args) -> int:
    g = load_input(args.input)
    start = time.perf_counter()
    with time_budget(args.budget):
        out = analysis(g, args.h, args.rho, args.threads)
    if args.timings:
        out["timings"] = {"seconds": round(time.perf_counter() - start, 4)}
    _dump(out, args.output)
    return EXIT_OK


def cmd_rho(args) -> int:
    g = load_input(args.input)
    start = time.perf_counter()
    with time_budget(args.budget):
        if args.oracle:
            res = rho_h_bruteforce(g, args.h)
        else:
            res = rho_h(g, args.h, prune=not args.no_prune, workers=args.threads)
    out = {"schema": RHO_SCHEMA, "method": "oracle" if args.oracle else ("plain" if args.no_prune else "pruned")}
    out.update(res.as_dict())
    if args.timings:
        out["timings"] = {"seconds": round(time.perf_counter() - start, 4)}
    _dump(out, args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    ids = [c.strip() for c in args.checks.split(",") if c.strip()] if args.checks else None
    checks = select_checks(ids)
    if args.builtin:
        corpus = builtin_corpus(args.builtin)
    elif args.corpus:
        corpus = load_corpus_file(args.corpus)
    else:
        raise GraphError("verify needs a corpus path or --builtin TAG")
    report = run_corpus(corpus, checks, budget=args.budget, seed=args.seed, samples=args.samples)
    _dump(report.to_json(timings=args.timings), args.output)
    counts = report.counts
    print(
        f"pass={counts['pass']} vacuous={counts['vacuous']} fail={counts['fail']} "
        f"budget={counts['budget']} error={counts['error']}",
        file=sys.stderr,
    )
    return EXIT_CHECKS if counts["fail"] or counts["error"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="extraconn", description="Extra edge-connectivity, super status and fault persistence of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, h_default):
        p.add_argument("--h", type=int, default=h_default, help="extra-connectivity level")
        p.add_argument("--threads", type=int, default=default_workers(),
                       help="worker processes (default: $EXTRACONN_THREADS or 1)")
        p.add_argument("--budget", type=float, default=None, help="wall-clock limit in seconds")
        p.add_argument("--timings", action="store_true", help="include timings in the JSON")
        p.add_argument("-o", "--output", help="write JSON here instead of stdout")

    p = sub.add_parser("gen", help="generate a family graph")
    p.add_argument("spec", help="family spec, e.g. hypercube:4 or cartesian:K4,K4")
    p.add_argument("--format", choices=("el", "g6"), default="el")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", help="extra edge-connectivity report")
    p.add_argument("input", help="graph file (.el or graph6) or family spec")
    common(p, 2)
    p.add_argument("--rho", action="store_true", help="also compute persistence where super")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("rho", help="persistence of a super-lambda^(h) graph")
    p.add_argument("input", help="graph file (.el or graph6) or family spec")
    common(p, 1)
    p.add_argument("--oracle", action="store_true", help="brute force straight from the definition")
    p.add_argument("--no-prune", action="store_true", help="disable the lambda'' shortcuts")
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("verify", help="run theorem checks over a corpus")
    p.add_argument("corpus", nargs="?", help=".g6 list, .el graph, or a file of family specs")
    p.add_argument("--builtin", choices=BUILTIN_TAGS)
    p.add_argument("--checks", help="comma-separated check ids (default: all)")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    p.add_argument("--samples", type=int, default=8, help="samples per sampled check")
    p.add_argument("--budget", type=float, default=None, help="seconds per check cell")
    p.add_argument("--timings", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (NotSuper, DisconnectedInput, NotExtraConnected, BudgetExceeded) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (GraphError, BadCheckId, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
