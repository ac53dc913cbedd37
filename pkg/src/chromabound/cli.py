"""Command-line interface.

Graph inputs are a graph6 literal or a path to a file holding graph6,
DIMACS .col, or the plain edge-list format; files are sniffed by content
unless --format pins one. Exit codes: 0 success (for `check`: member),
1 negative outcome (non-member, infeasible budget, failed suite), 2 errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .exact import SolveTimeout, chromatic_number, clique_number
from .graph import (
    Graph,
    GraphError,
    bits,
    format_graph6,
    parse_dimacs,
    parse_edge_list,
    parse_graph6,
)
from .harness import (
    DEFAULT_TIME_BUDGET_SECS,
    GEN_FAMILIES,
    SuiteReport,
    batch_verify_with_verdicts,
    exhaustive_check,
    generate_family,
    necessity_suite,
    tightness_suite,
    verify_theorem,
)
from .patterns import is_class_member
from .repair import NonMemberError, color_bounded, color_class_graph
from .structure import verify_lemma1

FORMATS = ("graph6", "dimacs", "edgelist")


def _sniff_format(text: str) -> str:
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("p ") or line.startswith("p\t"):
            return "dimacs"
        if line.startswith("c ") or line.startswith("c\t"):
            continue  # DIMACS comment; keep looking for the problem line
        if line.startswith("n="):
            return "edgelist"
        return "graph6"
    return "graph6"


def _load_graph(source: str, fmt: str | None) -> Graph:
    if os.path.exists(source):
        text = open(source).read()
    else:
        text = source
        fmt = fmt or "graph6"
    fmt = fmt or _sniff_format(text)
    if fmt == "graph6":
        first = next((l for l in text.splitlines() if l.strip()), "")
        return parse_graph6(first)
    if fmt == "dimacs":
        return parse_dimacs(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    raise GraphError(f"unknown format {fmt!r}")


def _emit(data: dict, as_json: bool, text_lines: list[str]) -> None:
    if as_json:
        print(json.dumps(data, indent=2))
    else:
        for line in text_lines:
            print(line)


def _print_suite(report: SuiteReport, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report.to_dict(), indent=2))
        return
    print(f"suite {report.suite}: {'PASS' if report.passed else 'FAIL'}")
    for c in report.cases:
        mark = "pass" if c.passed else "FAIL"
        print(f"  [{mark}] {c.case_id}  {c.detail}")
    print("  counts:", " ".join(f"{k}={v}" for k, v in report.counts.items()))
    if report.first_failure:
        print(f"  first failure: {report.first_failure}")


def _write_out(args, report: SuiteReport, verdicts=None) -> None:
    if getattr(args, "out", None):
        from .report import write_report

        paths = write_report(report, args.out, verdicts)
        print(f"wrote {len(paths)} files to {args.out}", file=sys.stderr)


def _cmd_gen(args) -> int:
    g = generate_family(args.family, args.param)
    print(format_graph6(g))
    return 0


def _cmd_check(args) -> int:
    g = _load_graph(args.graph, args.format)
    verdict = is_class_member(g)
    if verdict.is_member:
        _emit({"member": True, "witness": None}, args.json, ["member"])
        return 0
    pattern, emb = verdict.witness
    _emit(
        {"member": False, "witness": {"pattern": pattern.name, "vertices": list(emb.map)}},
        args.json,
        [f"non-member: induced {pattern.name} on vertices {list(emb.map)}"],
    )
    return 1


def _cmd_omega(args) -> int:
    g = _load_graph(args.graph, args.format)
    omega, witness = clique_number(g)
    verts = list(bits(witness))
    _emit(
        {"omega": omega, "witness": verts},
        args.json,
        [f"omega = {omega}", f"clique: {verts}"],
    )
    return 0


def _cmd_chi(args) -> int:
    g = _load_graph(args.graph, args.format)
    chi, coloring = chromatic_number(g, args.time_budget_secs)
    _emit(
        {"chi": chi, "coloring": list(coloring.colors)},
        args.json,
        [f"chi = {chi}", f"coloring: {list(coloring.colors)}"],
    )
    return 0


def _cmd_color(args) -> int:
    g = _load_graph(args.graph, args.format)
    if args.budget is None:
        outcome = color_class_graph(
            g, seed=args.seed, time_budget_secs=args.time_budget_secs
        )
    else:
        outcome = color_bounded(
            g, args.budget, seed=args.seed, time_budget_secs=args.time_budget_secs
        )
        if outcome is None:
            _emit(
                {"colorable": False, "budget": args.budget},
                args.json,
                [f"not colorable with {args.budget} colors"],
            )
            return 1
    data = {
        "colorable": True,
        "colors_used": outcome.coloring.k,
        "coloring": list(outcome.coloring.colors),
        "stage_log": [{"vertex": v, "stage": s} for v, s in outcome.stage_log],
        "stage_counts": outcome.stage_counts(),
        "fallback_used": outcome.fallback_used,
    }
    lines = [
        f"colors used: {outcome.coloring.k}",
        f"coloring: {list(outcome.coloring.colors)}",
        "stages: " + " ".join(f"{k}={v}" for k, v in outcome.stage_counts().items()),
    ]
    _emit(data, args.json, lines)
    return 0


def _cmd_lemma1(args) -> int:
    g = _load_graph(args.graph, args.format)
    mode = "all_max_cliques" if args.all_max_cliques else "single"
    report = verify_lemma1(g, mode)
    data = {
        "mode": mode,
        "ok": report.ok,
        "counts": report.counts,
        "entries": [
            {
                "vertex": e.vertex,
                "clique": list(bits(e.clique)),
                "case": e.case.tag,
                "detail": e.case.__dict__,
            }
            for e in report.entries
        ],
    }
    lines = [f"lemma1 [{mode}]: {'clean' if report.ok else 'VIOLATIONS'}"]
    lines += [f"  counts: {report.counts}"]
    for e in report.violations[:5]:
        lines.append(f"  violation at vertex {e.vertex}: {e.case.reason}")
    _emit(data, args.json, lines)
    return 0 if report.ok else 1


def _cmd_verify(args) -> int:
    g = _load_graph(args.graph, args.format)
    verdict = verify_theorem(g, args.time_budget_secs)
    lines = [
        f"graph {verdict.graph6} (n={verdict.n})",
        f"in class: {verdict.in_class}"
        + (f" (induced {verdict.witness['pattern']})" if verdict.witness else ""),
        f"omega = {verdict.omega}, chi = {verdict.chi}"
        + (" [timeout]" if verdict.timed_out else ""),
        f"bound chi <= omega+1: {verdict.bound_holds}",
        f"lemma1 clean: {verdict.lemma1_clean}",
    ]
    _emit(verdict.to_dict(), args.json, lines)
    return 1 if verdict.bound_holds is False else 0


def _cmd_exhaustive(args) -> int:
    report = exhaustive_check(
        args.max_n,
        sample=args.sample,
        seed=args.seed,
        jobs=args.jobs,
        time_budget_secs=args.time_budget_secs,
    )
    _print_suite(report, args.json)
    _write_out(args, report)
    return 0 if report.passed else 1


def _cmd_batch(args) -> int:
    with open(args.file) as fh:
        lines = fh.readlines()
    report, verdicts = batch_verify_with_verdicts(
        lines, jobs=args.jobs, time_budget_secs=args.time_budget_secs
    )
    _print_suite(report, args.json)
    _write_out(args, report, verdicts)
    return 0 if report.passed else 1


def _cmd_suite(args) -> int:
    if args.name == "tightness":
        report = tightness_suite(args.time_budget_secs)
    else:
        report = necessity_suite(args.time_budget_secs)
    _print_suite(report, args.json)
    _write_out(args, report)
    return 0 if report.passed else 1


def _add_graph_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", help="graph6 string or path to a graph file")
    p.add_argument("--format", choices=FORMATS, help="input format override")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromabound",
        description="Recognition, exact invariants, and bounded colorings "
        "for graphs free of the claw, H1, and H2.",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument(
        "--seed", type=int, default=0, help="seed for randomized stages"
    )
    parser.add_argument(
        "--time-budget-secs",
        type=float,
        default=DEFAULT_TIME_BUDGET_SECS,
        help="per-solve time budget",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a named family graph as graph6")
    p.add_argument("family", choices=GEN_FAMILIES)
    p.add_argument("param", type=int)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("check", help="class membership with witness")
    _add_graph_arg(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("omega", help="clique number with certificate")
    _add_graph_arg(p)
    p.set_defaults(func=_cmd_omega)

    p = sub.add_parser("chi", help="chromatic number with certificate")
    _add_graph_arg(p)
    p.set_defaults(func=_cmd_chi)

    p = sub.add_parser("color", help="repair coloring with stage log")
    _add_graph_arg(p)
    p.add_argument(
        "--budget",
        type=int,
        help="color budget; default omega+1 via the class-member path",
    )
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("lemma1", help="neighborhood-structure report")
    _add_graph_arg(p)
    p.add_argument("--all-max-cliques", action="store_true")
    p.set_defaults(func=_cmd_lemma1)

    p = sub.add_parser("verify", help="full theorem verdict for one graph")
    _add_graph_arg(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("exhaustive", help="check all labeled graphs up to max-n")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--sample", type=int, help="cap per-size level at a seeded sample")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="directory for JSON/CSV/figure report files")
    p.set_defaults(func=_cmd_exhaustive)

    p = sub.add_parser("batch", help="verify a file of graph6 lines")
    p.add_argument("file")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="directory for JSON/CSV/figure report files")
    p.set_defaults(func=_cmd_batch)

    p = sub.add_parser("suite", help="run a named regression suite")
    p.add_argument("name", choices=("tightness", "necessity"))
    p.add_argument("--out", help="directory for JSON/CSV/figure report files")
    p.set_defaults(func=_cmd_suite)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NonMemberError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GraphError, ValueError, SolveTimeout, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
