"""Verification drivers, suites, batch ingestion, and generators."""
from __future__ import annotations

import pytest

from chromabound.graph import Graph, complete, cycle, format_graph6, make_graph
from chromabound.harness import (
    GEN_FAMILIES,
    batch_verify,
    batch_verify_with_verdicts,
    exhaustive_check,
    generate_family,
    graph_id,
    join_of_c5s,
    mycielski_iterate,
    necessity_suite,
    random_claw_free_graph,
    random_class_graph,
    tightness_suite,
    verify_theorem,
)
from chromabound.patterns import CLAW, find_induced, is_class_member


def test_verify_theorem_on_member():
    v = verify_theorem(cycle(5))
    assert v.graph6 == "Dhc"
    assert v.n == 5
    assert v.in_class and v.witness is None
    assert (v.omega, v.chi) == (2, 3)
    assert v.bound_holds is True
    assert v.lemma1_clean and not v.timed_out
    assert set(v.timings) == {"membership", "clique", "chromatic", "lemma1"}
    d = v.to_dict()
    assert d["graph6"] == "Dhc" and d["bound_holds"] is True


def test_verify_theorem_on_non_member():
    star = make_graph(4, [(0, 1), (0, 2), (0, 3)])
    v = verify_theorem(star)
    assert not v.in_class
    assert v.witness == {"pattern": "CLAW", "vertices": [0, 1, 2, 3]}
    assert v.bound_holds is None  # the bound is only claimed for members
    assert (v.omega, v.chi) == (2, 2)


def test_graph_id_forms():
    assert graph_id(cycle(5)) == "Dhc"
    assert graph_id(Graph(63)) == "<n=63,m=0>"


def test_exhaustive_check_small_counts():
    report = exhaustive_check(4)
    assert report.passed
    assert [c.case_id for c in report.cases] == ["n=1", "n=2", "n=3", "n=4"]
    assert report.counts == {
        "graphs": 75,
        "members": 71,
        "violations": 0,
        "timeouts": 0,
    }
    assert report.first_failure is None
    d = report.to_dict()
    assert d["passed"] is True and len(d["cases"]) == 4


def test_exhaustive_check_rejects_bad_bounds():
    for bad in (0, 8):
        with pytest.raises(ValueError):
            exhaustive_check(bad)


def test_exhaustive_check_jobs_parity():
    assert exhaustive_check(4).to_dict() == exhaustive_check(4, jobs=2).to_dict()


def test_exhaustive_check_sampled_mode():
    a = exhaustive_check(5, sample=100, seed=3)
    assert a.counts["graphs"] == 1 + 2 + 8 + 64 + 100
    assert a.counts["violations"] == 0
    b = exhaustive_check(5, sample=100, seed=3)
    assert a.to_dict() == b.to_dict()  # same seed, same sample
    c = exhaustive_check(5, sample=100, seed=4)
    assert c.counts["graphs"] == a.counts["graphs"]


def test_batch_verify_mixed_lines():
    lines = [format_graph6(cycle(5)), "", "not graph6!!", format_graph6(complete(4))]
    report = batch_verify(lines)
    assert not report.passed  # the malformed line fails its case
    assert report.counts["graphs"] == 2
    assert report.counts["parse_errors"] == 1
    assert report.counts["members"] == 2
    assert report.counts["bound_violations"] == 0
    assert report.first_failure.startswith("line 3")
    # the bad line does not abort later lines
    assert report.cases[-1].case_id == format_graph6(complete(4))
    assert report.cases[-1].passed


def test_batch_verify_jobs_parity():
    lines = [format_graph6(cycle(5)), format_graph6(complete(4)), "zz!"]
    a = batch_verify(lines).to_dict()
    b = batch_verify(lines, jobs=2).to_dict()
    assert a == b


def test_batch_verify_with_verdicts():
    report, verdicts = batch_verify_with_verdicts([format_graph6(cycle(7))])
    assert report.passed
    assert len(verdicts) == 1
    assert verdicts[0].chi == 3


def test_tightness_suite():
    report = tightness_suite()
    assert report.passed
    assert len(report.cases) == 9
    assert [c.case_id for c in report.cases] == [f"C_{2 * n + 1}" for n in range(2, 11)]


def test_necessity_suite():
    report = necessity_suite()
    assert report.passed
    assert [c.case_id for c in report.cases] == [
        "mycielski-iter-1",
        "mycielski-iter-2",
        "blowup-c5-2",
        "blowup-c5-3",
        "join-c5-2",
        "join-c5-3",
    ]


def test_join_and_mycielski_helpers():
    assert join_of_c5s(1) == cycle(5)
    assert join_of_c5s(2).n == 10
    assert mycielski_iterate(0) == cycle(5)
    assert mycielski_iterate(1).n == 11
    assert mycielski_iterate(2).n == 23


def test_random_class_graph_is_member_and_deterministic():
    for seed in range(20):
        g = random_class_graph(seed, 12, 0.4)
        assert g is not None
        assert is_class_member(g).is_member
    assert random_class_graph(5, 12, 0.4) == random_class_graph(5, 12, 0.4)
    with pytest.raises(ValueError):
        random_class_graph(0, 5, 1.5)


def test_random_claw_free_graph():
    for seed in range(20):
        g = random_claw_free_graph(seed, 12, 0.5)
        assert g is not None
        assert find_induced(g, CLAW) is None


def test_generate_family():
    assert generate_family("cycle", 5) == cycle(5)
    assert generate_family("complete", 4) == complete(4)
    assert generate_family("blowup-c5", 2).n == 10
    assert generate_family("join-c5", 2).n == 10
    assert generate_family("mycielski-iter", 1).n == 11
    assert set(GEN_FAMILIES) == {
        "cycle",
        "complete",
        "blowup-c5",
        "join-c5",
        "mycielski-iter",
    }
    with pytest.raises(ValueError):
        generate_family("moebius", 3)
