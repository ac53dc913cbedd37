"""Graph type, constructions, text formats, and exhaustive enumeration."""
from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromabound.graph import (
    DimacsError,
    EdgeListError,
    Graph,
    Graph6Error,
    GraphError,
    MAX_VERTICES,
    bits,
    blowup,
    closed_neighbors,
    complement,
    complete,
    cycle,
    enumerate_labeled,
    format_graph6,
    graph_from_edge_mask,
    induced,
    join,
    make_graph,
    mycielski,
    neighbors,
    pair_order,
    parse_dimacs,
    parse_edge_list,
    parse_graph6,
    path,
    write_dimacs,
    write_edge_list,
)
from strategies import graphs


def test_make_graph_basics():
    g = make_graph(4, [(0, 1), (1, 2), (1, 2)])  # duplicate collapses
    assert g.n == 4
    assert g.edge_count() == 2
    assert g.has_edge(0, 1) and g.has_edge(1, 0)
    assert not g.has_edge(0, 2)
    assert g.degree(1) == 2
    assert list(g.edges()) == [(0, 1), (1, 2)]
    assert g.vertex_mask() == 0b1111


def test_make_graph_rejects_bad_input():
    with pytest.raises(GraphError):
        make_graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        make_graph(3, [(-1, 0)])
    with pytest.raises(GraphError):
        make_graph(3, [(1, 1)])
    with pytest.raises(GraphError):
        make_graph(-1)
    with pytest.raises(GraphError):
        make_graph(MAX_VERTICES + 1)


def test_graph_equality_and_hash():
    assert make_graph(3, [(0, 1)]) == make_graph(3, [(0, 1)])
    assert make_graph(3, [(0, 1)]) != make_graph(3, [(0, 2)])
    assert make_graph(3) != make_graph(4)
    assert hash(make_graph(3, [(0, 1)])) == hash(make_graph(3, [(0, 1)]))


def test_bits_ascending():
    assert list(bits(0)) == []
    assert list(bits(0b101001)) == [0, 3, 5]


def test_neighbors_and_range_check():
    g = cycle(5)
    assert neighbors(g, 0) == 0b10010
    assert closed_neighbors(g, 0) == 0b10011
    for v in (-1, 5):
        with pytest.raises(GraphError):
            neighbors(g, v)


def test_induced_relabels_in_id_order():
    g = cycle(5)
    sub, vmap = induced(g, 0b00111)
    assert vmap == (0, 1, 2)
    assert sub == make_graph(3, [(0, 1), (1, 2)])
    sub, vmap = induced(g, 0b10101)
    assert vmap == (0, 2, 4)
    assert sub == make_graph(3, [(0, 2)])  # only the 4-0 cycle edge survives
    with pytest.raises(GraphError):
        induced(g, 1 << 5)


def test_complement_small():
    assert complement(complete(4)).edge_count() == 0
    assert complement(make_graph(3)) == complete(3)


def test_construction_shapes():
    assert complete(4).edge_count() == 6
    assert cycle(5).edge_count() == 5
    assert path(5).edge_count() == 4
    assert path(1).edge_count() == 0
    for bad in (complete, path):
        with pytest.raises(GraphError):
            bad(0)
    with pytest.raises(GraphError):
        cycle(2)


def test_blowup_of_edge_is_complete():
    g, bags = blowup(make_graph(2, [(0, 1)]), 3)
    assert g == complete(6)
    assert bags == (0b000111, 0b111000)
    with pytest.raises(GraphError):
        blowup(cycle(3), 0)


def test_blowup_c5_shape():
    g, bags = blowup(cycle(5), 2)
    assert g.n == 10
    # within-bag edge, joined-bag edge, non-adjacent bags stay apart
    assert g.has_edge(0, 1)
    assert g.has_edge(1, 2) and g.has_edge(0, 3)
    assert not g.has_edge(0, 4) and not g.has_edge(1, 5)
    assert len(bags) == 5 and sum(b.bit_count() for b in bags) == 10


def test_join_counts():
    g = join(cycle(5), cycle(5))
    assert g.n == 10
    assert g.edge_count() == 5 + 5 + 25
    assert g.has_edge(0, 5) and g.has_edge(4, 9)
    assert g.has_edge(0, 1) and not g.has_edge(0, 2)


def test_mycielski_layout():
    g, aux = mycielski(cycle(5))
    assert g.n == 11
    assert aux["originals"] == list(range(5))
    assert aux["shadows"] == list(range(5, 10))
    assert aux["apex"] == 10
    # shadow keeps the original's neighbors, apex sees only shadows
    assert g.has_edge(5, 1) and g.has_edge(5, 4) and not g.has_edge(5, 0)
    assert g.has_edge(10, 5) and not g.has_edge(10, 0)
    assert g.degree(10) == 5


# ---------------------------------------------------------------------------
# graph6


def test_graph6_known_strings():
    assert format_graph6(cycle(5)) == "Dhc"
    assert format_graph6(complete(4)) == "C~"
    assert format_graph6(make_graph(1)) == "@"
    assert format_graph6(make_graph(5)) == "D??"


def test_graph6_parse_known():
    assert parse_graph6("Dhc") == cycle(5)
    assert parse_graph6("C~") == complete(4)
    assert parse_graph6(">>graph6<<Dhc") == cycle(5)
    assert parse_graph6("  Dhc\n") == cycle(5)


def test_graph6_errors_carry_offset():
    with pytest.raises(Graph6Error) as exc:
        parse_graph6("")
    assert exc.value.offset == 0
    with pytest.raises(Graph6Error):
        parse_graph6("~??")  # long form
    with pytest.raises(Graph6Error):
        parse_graph6("D\x1fc")  # byte below 63
    with pytest.raises(Graph6Error) as exc:
        parse_graph6("Dh")  # truncated body
    assert "truncated" in str(exc.value)
    with pytest.raises(Graph6Error):
        parse_graph6("Dhcc")  # trailing byte
    with pytest.raises(Graph6Error):
        parse_graph6("C~~")  # K4 plus a byte
    assert parse_graph6("A?") == make_graph(2)
    assert parse_graph6("A_") == make_graph(2, [(0, 1)])
    with pytest.raises(Graph6Error):
        parse_graph6("AG")  # nonzero padding bits


def test_graph6_rejects_oversize():
    with pytest.raises(Graph6Error):
        format_graph6(Graph(63))


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=12))
def test_graph6_round_trip(g):
    assert parse_graph6(format_graph6(g)) == g


# ---------------------------------------------------------------------------
# DIMACS .col


def test_dimacs_round_trip_and_comments():
    g = cycle(7)
    text = write_dimacs(g)
    assert text.startswith("p edge 7 7\n")
    assert parse_dimacs(text) == g
    assert parse_dimacs("c hello\n\np edge 2 1\nc mid\ne 1 2\n") == make_graph(
        2, [(0, 1)]
    )


def test_dimacs_errors_carry_line():
    with pytest.raises(DimacsError) as exc:
        parse_dimacs("e 1 2\np edge 2 1\n")
    assert exc.value.line == 1
    with pytest.raises(DimacsError):
        parse_dimacs("p edge 2 1\np edge 2 1\ne 1 2\n")
    with pytest.raises(DimacsError):
        parse_dimacs("p edge 2 2\ne 1 2\n")  # declared count mismatch
    with pytest.raises(DimacsError):
        parse_dimacs("p edge 2 1\ne 1 3\n")  # endpoint out of range
    with pytest.raises(DimacsError):
        parse_dimacs("p edge x 1\ne 1 2\n")
    with pytest.raises(DimacsError):
        parse_dimacs("q edge 2 1\n")
    with pytest.raises(DimacsError):
        parse_dimacs("")


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_dimacs_round_trip(g):
    assert parse_dimacs(write_dimacs(g)) == g


# ---------------------------------------------------------------------------
# Edge list


def test_edge_list_round_trip_and_comments():
    g = cycle(6)
    assert parse_edge_list(write_edge_list(g)) == g
    assert parse_edge_list("# c\nn=3\n\n0 1\n# done\n") == make_graph(3, [(0, 1)])


def test_edge_list_errors_carry_line():
    with pytest.raises(EdgeListError) as exc:
        parse_edge_list("0 1\n")
    assert exc.value.line == 1
    with pytest.raises(EdgeListError):
        parse_edge_list("n=x\n")
    with pytest.raises(EdgeListError):
        parse_edge_list("n=3\n0 1 2\n")
    with pytest.raises(EdgeListError):
        parse_edge_list("n=3\n0 a\n")
    with pytest.raises(EdgeListError):
        parse_edge_list("n=3\n0 3\n")  # endpoint out of range
    with pytest.raises(EdgeListError):
        parse_edge_list("")


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_edge_list_round_trip(g):
    assert parse_edge_list(write_edge_list(g)) == g


# ---------------------------------------------------------------------------
# Enumeration


def test_pair_order():
    assert pair_order(3) == [(0, 1), (0, 2), (1, 2)]
    assert pair_order(1) == []


def test_enumerate_labeled_counts_and_ends():
    gs = list(enumerate_labeled(4))
    assert len(gs) == 64
    assert gs[0].edge_count() == 0
    assert gs[-1] == complete(4)
    assert len(set(gs)) == 64
    with pytest.raises(GraphError):
        next(enumerate_labeled(8))


def test_graph_from_edge_mask_matches_enumeration():
    for mask, g in enumerate(enumerate_labeled(4)):
        assert graph_from_edge_mask(4, mask) == g
    with pytest.raises(GraphError):
        graph_from_edge_mask(3, 1 << 3)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_complement_involution(g):
    assert complement(complement(g)) == g


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_induced_on_full_mask_is_identity(g):
    sub, vmap = induced(g, g.vertex_mask())
    assert sub == g
    assert vmap == tuple(range(g.n))
