"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 budget exceeded (inconclusive).  Failures print a one-line JSON error
record on stderr.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import __version__
from .errors import BudgetExceededError
from .gadgets import banner, melon, melon_with_pendants, sat_to_graph
from .graph import (
    format_edge_list,
    is_ab_separator,
    is_inclusion_wise_minimal_separator,
    is_minimal_ab_separator,
    is_separator,
    read_edge_list,
)
from .sat import normalize, read_dimacs_cnf
from .separators import (
    DEFAULT_BRUTEFORCE_CAP,
    DEFAULT_MAX_SEPARATORS,
    enumerate_iwm_bruteforce,
    enumerate_iwm_filter,
    enumerate_iwm_search,
    enumerate_minimal_separators,
    enumerate_minimal_separators_bruteforce,
)
from .treedepth import DEFAULT_CAP as TD_CAP
from .treedepth import treedepth_bruteforce
from .verify import gap_report, random_suite, summary_table, verify_many

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def _add_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-separators", type=_positive_int, default=DEFAULT_MAX_SEPARATORS)
    p.add_argument("--time-budget", type=_positive_float, default=None, help="seconds")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="imsep", description="Minimal and inclusion-wise minimal separator toolkit.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="generate a fixture graph")
    p.add_argument("family", choices=["banner", "melon", "melon-pendants"])
    p.add_argument("size", nargs="?", type=_positive_int)
    p.add_argument("-o", "--output", help="edge-list path (default: stdout)")
    p.add_argument("--labels", help="labels JSON path (default: OUTPUT.labels.json)")

    p = sub.add_parser("enum", help="enumerate separators of a graph")
    p.add_argument("graph")
    p.add_argument("--kind", choices=["minimal", "iwm"], default="iwm")
    p.add_argument("--method", choices=["berry", "filter", "search", "brute"])
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--cap", type=_positive_int, default=DEFAULT_BRUTEFORCE_CAP, help="vertex cap for brute force")
    _add_budget(p)

    p = sub.add_parser("check", help="evaluate the separator predicates on one set")
    p.add_argument("graph")
    p.add_argument("--set", required=True, dest="vertices", help='space-separated ids, e.g. "1 3"')
    p.add_argument("--ab", nargs=2, type=int, metavar=("A", "B"))
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("reduce", help="build the 3-SAT gadget graph of a DIMACS formula")
    p.add_argument("cnf")
    p.add_argument("-o", "--output")
    p.add_argument("--labels")

    p = sub.add_parser("verify", help="check the reduction on formulas")
    p.add_argument("cnf", nargs="?")
    p.add_argument("--random", type=_positive_int, metavar="K")
    p.add_argument("--max-vars", type=_positive_int, default=6)
    p.add_argument("--max-clauses", type=_positive_int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--method", choices=["search", "filter", "bruteforce"], default="search")
    p.add_argument("--workers", type=_positive_int, default=1)
    p.add_argument("--reports", help="directory for one JSON report per formula")
    p.add_argument("--timings", action="store_true", help="include wall-clock timings in reports")
    _add_budget(p)

    p = sub.add_parser("gap", help="minimal vs inclusion-wise counts on the pendant melon")
    p.add_argument("n", type=_positive_int)
    p.add_argument("--format", choices=["text", "json"], default="text")
    _add_budget(p)

    p = sub.add_parser("treedepth", help="exact treedepth of a small graph")
    p.add_argument("graph")
    p.add_argument("--cap", type=_positive_int, default=TD_CAP)
    p.add_argument("--format", choices=["text", "json"], default="text")
    return parser


def _write_graph(g, names: dict, output: Optional[str], labels: Optional[str], out) -> None:
    text = format_edge_list(g)
    doc = json.dumps(names, sort_keys=True, indent=1) + "\n"
    if output is None:
        out.write(text)
        if labels:
            with open(labels, "w") as fh:
                fh.write(doc)
        return
    with open(output, "w") as fh:
        fh.write(text)
    with open(labels or output + ".labels.json", "w") as fh:
        fh.write(doc)


def _cmd_gen(args, out) -> int:
    if args.family == "banner":
        if args.size is not None:
            raise UsageError("banner takes no size")
        g, names = banner()
    else:
        if args.size is None:
            raise UsageError(f"{args.family} needs a size N")
        g, names = (melon if args.family == "melon" else melon_with_pendants)(args.size)
    _write_graph(g, names, args.output, args.labels, out)
    return EXIT_OK


def _cmd_enum(args, out) -> int:
    g = read_edge_list(args.graph)
    method = args.method or ("berry" if args.kind == "minimal" else "filter")
    budget = dict(max_separators=args.max_separators, time_budget=args.time_budget)
    if args.kind == "minimal":
        runners = {
            "berry": lambda: enumerate_minimal_separators(g, **budget),
            "brute": lambda: enumerate_minimal_separators_bruteforce(g, args.cap),
        }
    else:
        runners = {
            "filter": lambda: enumerate_iwm_filter(g, **budget),
            "search": lambda: enumerate_iwm_search(g, args.time_budget),
            "brute": lambda: enumerate_iwm_bruteforce(g, args.cap),
        }
    if method not in runners:
        raise UsageError(f"method {method!r} does not produce kind {args.kind!r}")
    fam = runners[method]()
    out.write(fam.to_text() if args.format == "text" else fam.to_json() + "\n")
    return EXIT_OK


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _cmd_check(args, out) -> int:
    g = read_edge_list(args.graph)
    try:
        s = [int(x) for x in args.vertices.split()]
    except ValueError:
        raise UsageError(f"--set expects integers, got {args.vertices!r}") from None
    verdict = {"set": sorted(set(s)), "separator": is_separator(g, s)}
    if args.ab:
        a, b = args.ab
        verdict["ab"] = [a, b]
        verdict["ab_separator"] = is_ab_separator(g, s, a, b)
        verdict["minimal_ab_separator"] = is_minimal_ab_separator(g, s, a, b)
    verdict["inclusion_wise_minimal"] = is_inclusion_wise_minimal_separator(g, s)
    if args.format == "json":
        out.write(json.dumps(verdict, sort_keys=True) + "\n")
        return EXIT_OK
    out.write(f"separator: {_yes(verdict['separator'])}\n")
    if args.ab:
        out.write(f"a-b separator: {_yes(verdict['ab_separator'])}\n")
        out.write(f"minimal a-b separator: {_yes(verdict['minimal_ab_separator'])}\n")
    out.write(f"inclusion-wise minimal: {_yes(verdict['inclusion_wise_minimal'])}\n")
    return EXIT_OK


def _cmd_reduce(args, out) -> int:
    f = normalize(read_dimacs_cnf(args.cnf))
    g, labels = sat_to_graph(f)
    _write_graph(g, labels.names(), args.output, args.labels, out)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    if (args.cnf is None) == (args.random is None):
        raise UsageError("give exactly one of CNF_FILE or --random K")
    if args.cnf is not None:
        formulas = [(os.path.splitext(os.path.basename(args.cnf))[0], read_dimacs_cnf(args.cnf))]
    else:
        formulas = random_suite(args.random, args.max_vars, args.max_clauses, args.seed)
    verdicts = verify_many(formulas, args.method, args.max_separators, args.time_budget, args.workers)
    if args.reports:
        os.makedirs(args.reports, exist_ok=True)
        for v in verdicts:
            path = os.path.join(args.reports, v.equivalence.formula_id + ".json")
            with open(path, "w") as fh:
                json.dump(v.to_dict(args.timings), fh, sort_keys=True, indent=1)
                fh.write("\n")
    for v in verdicts:
        e = v.equivalence
        eq = "inconclusive" if v.inconclusive else str(e.equivalent).lower()
        out.write(f"{e.formula_id}: satisfiable: {str(e.satisfiable).lower()}, equivalent: {eq}\n")
    out.write(summary_table(verdicts) + "\n")
    if any(v.failed for v in verdicts):
        return EXIT_FAIL
    if any(v.inconclusive for v in verdicts):
        return EXIT_BUDGET
    return EXIT_OK


def _cmd_gap(args, out) -> int:
    rep = gap_report(args.n, max_separators=args.max_separators, time_budget=args.time_budget)
    if args.format == "json":
        out.write(json.dumps(rep.to_dict(), sort_keys=True) + "\n")
    else:
        out.write(f"n: {rep.n}\nminimal separators: {rep.minimal_count}\n"
                  f"inclusion-wise minimal separators: {rep.iwm_count}\nok: {str(rep.ok).lower()}\n")
    return EXIT_OK if rep.ok else EXIT_FAIL


def _cmd_treedepth(args, out) -> int:
    g = read_edge_list(args.graph)
    res = treedepth_bruteforce(g, args.cap)
    if args.format == "json":
        doc = {"depth": res.depth, "witness": [[r, list(c)] for r, c in res.witness]}
        out.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        out.write(f"depth: {res.depth}\n")
        for root, comp in res.witness:
            out.write(f"eliminate {root} from {' '.join(map(str, comp))}\n")
    return EXIT_OK


COMMANDS = {
    "gen": _cmd_gen,
    "enum": _cmd_enum,
    "check": _cmd_check,
    "reduce": _cmd_reduce,
    "verify": _cmd_verify,
    "gap": _cmd_gap,
    "treedepth": _cmd_treedepth,
}


def _error(err, kind: str, exc: BaseException, code: int) -> int:
    err.write(json.dumps({"error": kind, "message": str(exc), "exit_code": code}) + "\n")
    return code


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        return _error(err, "usage", exc, EXIT_USAGE)
    except BudgetExceededError as exc:
        return _error(err, "budget", exc, EXIT_BUDGET)
    except (ValueError, OSError) as exc:
        return _error(err, type(exc).__name__, exc, EXIT_USAGE)


def main() -> None:
    sys.exit(run())
