"""Staged bounded coloring: insertion order, stage escalation, certification."""
from __future__ import annotations

import pytest
from hypothesis import given, settings

from chromabound.exact import chromatic_number, clique_number, verify_coloring
from chromabound.graph import (
    blowup,
    complete,
    cycle,
    make_graph,
    parse_graph6,
    path,
)
from chromabound.patterns import H1
from chromabound.repair import (
    EXACT_FALLBACK,
    FREE_COLOR,
    NonMemberError,
    RANDOM_WALK,
    SEQUENCE_SHIFT,
    SINGLE_SWAP,
    STAGES,
    color_bounded,
    color_class_graph,
    insertion_order,
)
from oracles import naive_chromatic_number
from strategies import graphs


def test_insertion_order_examples():
    assert insertion_order(complete(4)) == (0, 1, 2, 3)
    assert insertion_order(cycle(5)) == (0, 1, 2, 3, 4)
    assert insertion_order(path(4)) == (0, 1, 2, 3)
    assert insertion_order(make_graph(0)) == ()
    # every prefix bounds the back-degree by the degeneracy (1 for a tree)
    star = make_graph(4, [(0, 1), (0, 2), (0, 3)])
    order = insertion_order(star)
    assert sorted(order) == [0, 1, 2, 3]
    pos = {v: i for i, v in enumerate(order)}
    for v in range(4):
        back = sum(1 for u in (0, 1, 2, 3) if star.has_edge(u, v) and pos[u] < pos[v])
        assert back <= 1


def test_color_bounded_basics():
    out = color_bounded(cycle(5), 3)
    assert out is not None
    assert out.coloring.k <= 3
    assert verify_coloring(cycle(5), out.coloring)
    assert color_bounded(cycle(5), 2) is None  # certified by exact solve
    assert color_bounded(complete(4), 3) is None
    assert color_bounded(complete(4), 4) is not None
    with pytest.raises(ValueError):
        color_bounded(cycle(5), 0)


def test_color_bounded_logs_every_vertex_in_insertion_order():
    g = cycle(7)
    out = color_bounded(g, 3)
    assert tuple(v for v, _ in out.stage_log) == insertion_order(g)
    assert all(s in STAGES for _, s in out.stage_log)
    counts = out.stage_counts()
    assert sum(counts.values()) == g.n
    assert set(counts) == set(STAGES)


def test_color_bounded_deterministic_under_seed():
    g = parse_graph6("LYE@[?GfEdEMcS")
    a = color_bounded(g, 3, seed=7)
    b = color_bounded(g, 3, seed=7)
    assert a.coloring == b.coloring
    assert a.stage_log == b.stage_log


# Regression pins: one graph per escalation stage, found by sweeping random
# graphs at budget = chi and recording which stage first resolved a vertex.
STAGE_PINS = [
    (SINGLE_SWAP, "Ebn_"),
    (SEQUENCE_SHIFT, "Ikgk?BUBG"),
    (RANDOM_WALK, "LYE@[?GfEdEMcS"),
    (EXACT_FALLBACK, "OUWE?__`aa_Hp?K`@B_OC"),
]


@pytest.mark.parametrize("stage,g6", STAGE_PINS)
def test_stage_fires_and_repair_stays_within_chi(stage, g6):
    g = parse_graph6(g6)
    chi, _ = chromatic_number(g)
    out = color_bounded(g, chi)
    assert out is not None
    assert out.coloring.k <= chi
    assert verify_coloring(g, out.coloring)
    assert any(s == stage for _, s in out.stage_log)
    assert out.fallback_used == (stage == EXACT_FALLBACK)


def test_fallback_flag_false_on_easy_graph():
    out = color_bounded(path(5), 2)
    assert not out.fallback_used
    assert all(s == FREE_COLOR for _, s in out.stage_log)


def test_color_class_graph_on_members():
    for g in (cycle(9), complete(6), blowup(make_graph(2, [(0, 1)]), 3)[0]):
        omega, _ = clique_number(g)
        out = color_class_graph(g)
        assert out.coloring.k <= omega + 1
        assert verify_coloring(g, out.coloring)


def test_color_class_graph_tight_example():
    # odd cycles need all omega + 1 colors, so the budget is exact here
    out = color_class_graph(cycle(11))
    assert out.coloring.k == 3


def test_color_class_graph_rejects_non_members():
    star = make_graph(4, [(0, 1), (0, 2), (0, 3)])
    with pytest.raises(NonMemberError) as exc:
        color_class_graph(star)
    assert exc.value.verdict.witness[0].name == "CLAW"
    with pytest.raises(NonMemberError) as exc:
        color_class_graph(H1.graph)
    assert exc.value.verdict.witness[0].name == "H1"


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=7))
def test_color_bounded_matches_feasibility_oracle(g):
    chi = naive_chromatic_number(g)
    out = color_bounded(g, chi)
    assert out is not None and out.coloring.k <= chi
    assert verify_coloring(g, out.coloring)
    if chi > 1:
        assert color_bounded(g, chi - 1) is None
