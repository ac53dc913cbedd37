"""Corpus-scale verification drivers, regression suites, and generators.

The central claim under test: every graph with no induced claw, H1, or H2
satisfies chi <= omega + 1. The drivers here check that bound (plus the
supporting neighborhood-structure lemma and the repair colorer's budget)
over exhaustive small-graph corpora, externally supplied graph6 streams,
and seeded random members, and they package the named example families
into regression suites.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterable, Sequence

from .exact import (
    SolveTimeout,
    chromatic_number,
    clique_number,
    verify_coloring,
)
from .graph import (
    Graph,
    GraphError,
    bits,
    blowup,
    complete,
    cycle,
    format_graph6,
    graph_from_edge_mask,
    join,
    mycielski,
    pair_order,
    parse_graph6,
)
from .patterns import CLAW, FORBIDDEN, H1, H2, Pattern, find_induced, is_class_member, validate_embedding
from .repair import color_bounded
from .structure import verify_lemma1

DEFAULT_TIME_BUDGET_SECS = 10.0


# ---------------------------------------------------------------------------
# Verdicts and reports


@dataclass(frozen=True)
class TheoremVerdict:
    graph6: str
    n: int
    in_class: bool
    witness: dict | None
    omega: int
    chi: int | None
    bound_holds: bool | None
    lemma1_clean: bool
    timed_out: bool
    timings: dict[str, float]

    def to_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "in_class": self.in_class,
            "witness": self.witness,
            "omega": self.omega,
            "chi": self.chi,
            "bound_holds": self.bound_holds,
            "lemma1_clean": self.lemma1_clean,
            "timed_out": self.timed_out,
            "timings": self.timings,
        }


@dataclass(frozen=True)
class SuiteCase:
    case_id: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    cases: tuple[SuiteCase, ...]
    counts: dict[str, int]
    first_failure: str | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "counts": self.counts,
            "first_failure": self.first_failure,
            "cases": [
                {"case_id": c.case_id, "passed": c.passed, "detail": c.detail}
                for c in self.cases
            ],
        }


def graph_id(g: Graph) -> str:
    """graph6 string when it fits, otherwise a size tag."""
    if g.n <= 62:
        return format_graph6(g)
    return f"<n={g.n},m={g.edge_count()}>"


def _is_clique(g: Graph, mask: int) -> bool:
    for v in bits(mask):
        if g.adj[v] & mask != mask ^ (1 << v):
            return False
    return True


# ---------------------------------------------------------------------------
# Single-graph verdict


def verify_theorem(
    g: Graph,
    time_budget_secs: float = DEFAULT_TIME_BUDGET_SECS,
    lemma1_mode: str = "single",
) -> TheoremVerdict:
    """Full verdict for one graph: membership, exact invariants, the bound.

    The bound is only asserted for members. A solver running out of budget
    yields a verdict flagged timed_out with chi absent, never a guess.
    Certificates are re-validated here, independently of the solvers.
    """
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    verdict = is_class_member(g)
    timings["membership"] = time.perf_counter() - t0

    witness = None
    if verdict.witness is not None:
        pattern, emb = verdict.witness
        if not validate_embedding(g, pattern, emb):
            raise RuntimeError("membership witness failed re-validation")
        witness = {"pattern": pattern.name, "vertices": list(emb.map)}

    t0 = time.perf_counter()
    omega, clique_witness = clique_number(g)
    timings["clique"] = time.perf_counter() - t0
    if clique_witness.bit_count() != omega or not _is_clique(g, clique_witness):
        raise RuntimeError("clique witness failed re-validation")

    chi: int | None = None
    timed_out = False
    t0 = time.perf_counter()
    try:
        chi, coloring = chromatic_number(g, time_budget_secs)
        if not verify_coloring(g, coloring):
            raise RuntimeError("chromatic witness failed re-validation")
    except SolveTimeout:
        timed_out = True
    timings["chromatic"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    lemma1_clean = verify_lemma1(g, lemma1_mode).ok
    timings["lemma1"] = time.perf_counter() - t0

    bound_holds = None
    if verdict.is_member and chi is not None:
        bound_holds = chi <= omega + 1
    return TheoremVerdict(
        graph6=graph_id(g),
        n=g.n,
        in_class=verdict.is_member,
        witness=witness,
        omega=omega,
        chi=chi,
        bound_holds=bound_holds,
        lemma1_clean=lemma1_clean,
        timed_out=timed_out,
        timings=timings,
    )


# ---------------------------------------------------------------------------
# Exhaustive driver


def _check_one(g: Graph, time_budget_secs: float) -> tuple[bool, str | None]:
    """(is_member, violation kind). Members are held to the full contract:
    bound, neighborhood structure against every maximum clique, and a
    repair coloring within omega+1."""
    if not is_class_member(g).is_member:
        return False, None
    omega, _ = clique_number(g)
    try:
        chi, _ = chromatic_number(g, time_budget_secs)
    except SolveTimeout:
        return True, "timeout"
    if chi > omega + 1:
        return True, "bound"
    if not verify_lemma1(g, "all_max_cliques").ok:
        return True, "lemma1"
    outcome = color_bounded(g, omega + 1)
    if (
        outcome is None
        or outcome.coloring.k > omega + 1
        or not verify_coloring(g, outcome.coloring)
    ):
        return True, "repair"
    return True, None


def _exhaustive_worker(args: tuple[int, Sequence[int], float]) -> dict:
    n, masks, budget = args
    graphs = 0
    members = 0
    violations: dict[str, int] = {}
    timeouts = 0
    first: tuple[int, str] | None = None
    for mask in masks:
        graphs += 1
        g = graph_from_edge_mask(n, mask)
        member, kind = _check_one(g, budget)
        if member:
            members += 1
        if kind == "timeout":
            timeouts += 1
        elif kind is not None:
            violations[kind] = violations.get(kind, 0) + 1
            if first is None:
                first = (mask, kind)
    return {
        "graphs": graphs,
        "members": members,
        "violations": violations,
        "timeouts": timeouts,
        "first": first,
    }


def _chunk(masks: Sequence[int], pieces: int) -> list[Sequence[int]]:
    size = max(1, (len(masks) + pieces - 1) // pieces)
    return [masks[i : i + size] for i in range(0, len(masks), size)]


def exhaustive_check(
    n_max: int,
    *,
    sample: int | None = None,
    seed: int = 0,
    jobs: int = 1,
    time_budget_secs: float = DEFAULT_TIME_BUDGET_SECS,
) -> SuiteReport:
    """Check every labeled graph on 1..n_max vertices (n_max <= 7).

    With sample set, any level whose labeled-graph count exceeds it is
    checked on a seeded uniform sample of that many distinct graphs instead
    of all of them; smaller levels stay exhaustive. Results are independent
    of the jobs count.
    """
    if not 1 <= n_max <= 7:
        raise ValueError("exhaustive checking is supported for 1 <= n_max <= 7")
    cases: list[SuiteCase] = []
    counts = {"graphs": 0, "members": 0, "violations": 0, "timeouts": 0}
    first_failure: str | None = None
    rng = random.Random(seed)
    for n in range(1, n_max + 1):
        total = 1 << len(pair_order(n))
        masks: Sequence[int]
        if sample is not None and total > sample:
            masks = sorted(rng.sample(range(total), sample))
        else:
            masks = range(total)
        if jobs > 1:
            with Pool(jobs) as pool:
                parts = pool.map(
                    _exhaustive_worker,
                    [(n, c, time_budget_secs) for c in _chunk(masks, jobs * 4)],
                )
        else:
            parts = [_exhaustive_worker((n, masks, time_budget_secs))]
        graphs = sum(p["graphs"] for p in parts)
        members = sum(p["members"] for p in parts)
        timeouts = sum(p["timeouts"] for p in parts)
        violations = sum(sum(p["violations"].values()) for p in parts)
        firsts = [p["first"] for p in parts if p["first"] is not None]
        detail = f"graphs={graphs} members={members} timeouts={timeouts}"
        if firsts:
            mask, kind = min(firsts)
            g6 = format_graph6(graph_from_edge_mask(n, mask))
            detail += f" first_violation={g6} kind={kind}"
            if first_failure is None:
                first_failure = f"n={n}: {g6} ({kind})"
        cases.append(SuiteCase(f"n={n}", violations == 0, detail))
        counts["graphs"] += graphs
        counts["members"] += members
        counts["violations"] += violations
        counts["timeouts"] += timeouts
    return SuiteReport("exhaustive", tuple(cases), counts, first_failure)


# ---------------------------------------------------------------------------
# Batch driver for externally enumerated graph6 streams


def _batch_worker(args: tuple[int, str, float]) -> tuple[int, str, object]:
    idx, line, budget = args
    try:
        g = parse_graph6(line)
    except GraphError as exc:
        return idx, "error", str(exc)
    return idx, "ok", verify_theorem(g, budget)


def batch_verify(
    lines: Iterable[str],
    jobs: int = 1,
    time_budget_secs: float = DEFAULT_TIME_BUDGET_SECS,
) -> SuiteReport:
    """Verdict per graph6 line. Parse failures are reported per line and do
    not stop the batch; a bound violation does, with the offending graph6
    string as the failure id. The report does not depend on jobs."""
    report, _ = batch_verify_with_verdicts(lines, jobs, time_budget_secs)
    return report


def batch_verify_with_verdicts(
    lines: Iterable[str],
    jobs: int = 1,
    time_budget_secs: float = DEFAULT_TIME_BUDGET_SECS,
) -> tuple[SuiteReport, list[TheoremVerdict]]:
    """batch_verify plus the individual verdicts, for file reporting."""
    work = [
        (i, line.strip(), time_budget_secs)
        for i, line in enumerate(lines, start=1)
        if line.strip()
    ]
    if jobs > 1:
        with Pool(jobs) as pool:
            results = pool.map(_batch_worker, work)
    else:
        results = [_batch_worker(w) for w in work]
    results.sort(key=lambda r: r[0])
    cases: list[SuiteCase] = []
    counts = {
        "graphs": 0,
        "parse_errors": 0,
        "members": 0,
        "non_members": 0,
        "bound_violations": 0,
        "timeouts": 0,
    }
    first_failure: str | None = None
    verdicts: list[TheoremVerdict] = []
    for idx, kind, payload in results:
        if kind == "error":
            counts["parse_errors"] += 1
            cases.append(SuiteCase(f"line {idx}", False, str(payload)))
            if first_failure is None:
                first_failure = f"line {idx}: {payload}"
            continue
        verdict: TheoremVerdict = payload  # type: ignore[assignment]
        verdicts.append(verdict)
        counts["graphs"] += 1
        counts["members" if verdict.in_class else "non_members"] += 1
        if verdict.timed_out:
            counts["timeouts"] += 1
        if verdict.bound_holds is False:
            counts["bound_violations"] += 1
            cases.append(
                SuiteCase(
                    verdict.graph6,
                    False,
                    f"bound violated: omega={verdict.omega} chi={verdict.chi}",
                )
            )
            first_failure = first_failure or verdict.graph6
            break  # a bound violation halts the batch
        detail = (
            f"member omega={verdict.omega} chi={verdict.chi}"
            if verdict.in_class
            else f"non-member ({verdict.witness['pattern']})"
        )
        if verdict.timed_out:
            detail += " [timeout]"
        cases.append(SuiteCase(verdict.graph6, True, detail))
    report = SuiteReport("batch", tuple(cases), counts, first_failure)
    return report, verdicts


# ---------------------------------------------------------------------------
# Regression suites for the named example families


def _suite(
    name: str, checks: list[tuple[str, bool, str]]
) -> SuiteReport:
    cases = tuple(SuiteCase(cid, ok, detail) for cid, ok, detail in checks)
    counts = {
        "pass": sum(1 for c in cases if c.passed),
        "fail": sum(1 for c in cases if not c.passed),
    }
    first_failure = next(
        (f"{c.case_id}: {c.detail}" for c in cases if not c.passed), None
    )
    return SuiteReport(name, cases, counts, first_failure)


def tightness_suite(
    time_budget_secs: float = DEFAULT_TIME_BUDGET_SECS,
) -> SuiteReport:
    """Odd cycles C_5..C_21: members with omega=2, chi=3 = omega+1, showing
    the bound is tight."""
    checks = []
    for n in range(2, 11):
        g = cycle(2 * n + 1)
        member = is_class_member(g).is_member
        omega, _ = clique_number(g)
        chi, _ = chromatic_number(g, time_budget_secs)
        ok = member and omega == 2 and chi == 3
        checks.append(
            (
                f"C_{2 * n + 1}",
                ok,
                f"member={member} omega={omega} chi={chi} (want member, 2, 3)",
            )
        )
    return _suite("tightness", checks)


def join_of_c5s(m: int) -> Graph:
    """Join of m disjoint copies of C_5 (iterated pairwise join)."""
    if m < 1:
        raise GraphError("need at least one copy")
    g = cycle(5)
    for _ in range(m - 1):
        g = join(g, cycle(5))
    return g


def mycielski_iterate(t: int) -> Graph:
    """t applications of the Mycielski construction to C_5."""
    if t < 0:
        raise GraphError("iteration count must be >= 0")
    g = cycle(5)
    for _ in range(t):
        g, _ = mycielski(g)
    return g


def _pattern_profile(g: Graph) -> dict[str, bool]:
    return {p.name: find_induced(g, p) is not None for p in FORBIDDEN}


def necessity_suite(
    time_budget_secs: float = DEFAULT_TIME_BUDGET_SECS,
) -> SuiteReport:
    """Three families, each excluding two forbidden patterns but not the
    third, each exceeding the bound: dropping any one pattern from the
    hypothesis kills the theorem.

    (a) Mycielski iterates (chi = 4 and 5): triangle-free, so H1- and
        H2-free, but with claws and chi - 1 > omega.
    (b) C_5 blow-ups, m = 2, 3: claw- and H2-free, H1 present,
        omega = 2m, chi = 2m + ceil(m/2).
    (c) Joins of m copies of C_5, m = 2, 3: claw- and H1-free, H2 present,
        omega = 2m, chi = 3m.
    """
    checks = []
    for t, want_chi in ((1, 4), (2, 5)):
        g = mycielski_iterate(t)
        prof = _pattern_profile(g)
        omega, _ = clique_number(g)
        chi, _ = chromatic_number(g, time_budget_secs)
        ok = (
            prof["CLAW"]
            and not prof["H1"]
            and not prof["H2"]
            and omega == 2
            and chi == want_chi
            and chi >= 4
        )
        checks.append(
            (
                f"mycielski-iter-{t}",
                ok,
                f"patterns={prof} omega={omega} chi={chi} "
                f"(want claw only, 2, {want_chi})",
            )
        )
    for m in (2, 3):
        g, _ = blowup(cycle(5), m)
        prof = _pattern_profile(g)
        omega, _ = clique_number(g)
        chi, _ = chromatic_number(g, time_budget_secs)
        want_chi = 2 * m + (m + 1) // 2
        ok = (
            not prof["CLAW"]
            and prof["H1"]
            and not prof["H2"]
            and omega == 2 * m
            and chi == want_chi
        )
        checks.append(
            (
                f"blowup-c5-{m}",
                ok,
                f"patterns={prof} omega={omega} chi={chi} "
                f"(want H1 only, {2 * m}, {want_chi})",
            )
        )
    for m in (2, 3):
        g = join_of_c5s(m)
        prof = _pattern_profile(g)
        omega, _ = clique_number(g)
        chi, _ = chromatic_number(g, time_budget_secs)
        ok = (
            not prof["CLAW"]
            and not prof["H1"]
            and prof["H2"]
            and omega == 2 * m
            and chi == 3 * m
        )
        checks.append(
            (
                f"join-c5-{m}",
                ok,
                f"patterns={prof} omega={omega} chi={chi} "
                f"(want H2 only, {2 * m}, {3 * m})",
            )
        )
    return _suite("necessity", checks)


# ---------------------------------------------------------------------------
# Random member generation


def _random_repaired(
    seed: int,
    n: int,
    edge_prob: float,
    max_tries: int,
    patterns: tuple[Pattern, ...],
) -> Graph | None:
    if not 0 <= edge_prob <= 1:
        raise ValueError("edge_prob must lie in [0, 1]")
    rng = random.Random(seed)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < edge_prob
    ]
    g = Graph(n, edges)
    for _ in range(max_tries):
        found = None
        for p in patterns:
            emb = find_induced(g, p)
            if emb is not None:
                found = (p, emb)
                break
        if found is None:
            return g
        # delete the host edge carrying the witness's first pattern edge
        p, emb = found
        a, b = next(p.graph.edges())
        u, v = emb.map[a], emb.map[b]
        g = Graph(g.n, [e for e in g.edges() if e != (min(u, v), max(u, v))])
    return None


def random_class_graph(
    seed: int, n: int, edge_prob: float, max_tries: int = 1000
) -> Graph | None:
    """Seeded class member: sample an edge-probability graph, then repair by
    deleting one witness edge at a time until no forbidden pattern remains.
    Deletion strictly shrinks the edge set, and the empty graph is a member,
    so generous try budgets always succeed."""
    return _random_repaired(seed, n, edge_prob, max_tries, FORBIDDEN)


def random_claw_free_graph(
    seed: int, n: int, edge_prob: float, max_tries: int = 1000
) -> Graph | None:
    """Same repair recipe, but only claws are forbidden; H1/H2 may remain."""
    return _random_repaired(seed, n, edge_prob, max_tries, (CLAW,))


# ---------------------------------------------------------------------------
# Generator families (CLI `gen`)


GEN_FAMILIES = ("cycle", "complete", "blowup-c5", "join-c5", "mycielski-iter")


def generate_family(family: str, param: int) -> Graph:
    if family == "cycle":
        return cycle(param)
    if family == "complete":
        return complete(param)
    if family == "blowup-c5":
        g, _ = blowup(cycle(5), param)
        return g
    if family == "join-c5":
        return join_of_c5s(param)
    if family == "mycielski-iter":
        return mycielski_iterate(param)
    raise ValueError(f"unknown family {family!r}; choose from {GEN_FAMILIES}")
