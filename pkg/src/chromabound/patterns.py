"""Forbidden-pattern catalog and induced-subgraph detection.

Membership in the graph class under study means: no induced K_{1,3} (claw),
no induced H1, no induced H2. H1 is a diamond plus a pendant on a degree-2
vertex; H2 is a 5-cycle plus two chords (the complement of P_3 plus K_2).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph import Graph, GraphError, bits, complement


@dataclass(frozen=True)
class Pattern:
    """A fixed small graph to search for as an induced subgraph."""

    name: str
    graph: Graph

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def rows(self) -> tuple[int, ...]:
        return self.graph.adj

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.graph.adj)


@dataclass(frozen=True)
class Embedding:
    """Injective map pattern-vertex i -> host vertex map[i], induced both ways."""

    map: tuple[int, ...]

    def image_mask(self) -> int:
        m = 0
        for v in self.map:
            m |= 1 << v
        return m


@dataclass(frozen=True)
class ClassVerdict:
    is_member: bool
    witness: tuple[Pattern, Embedding] | None


def make_pattern(name: str, n: int, edges: list[tuple[int, int]]) -> Pattern:
    if n > 6:
        raise GraphError("patterns are capped at 6 vertices")
    return Pattern(name, Graph(n, edges))


CLAW = make_pattern("CLAW", 4, [(0, 1), (0, 2), (0, 3)])
H1 = make_pattern("H1", 5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4)])
H2 = make_pattern("H2", 5, [(0, 1), (0, 2), (0, 4), (1, 2), (1, 4), (2, 3), (3, 4)])
DIAMOND = make_pattern("DIAMOND", 4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])

FORBIDDEN = (CLAW, H1, H2)


def _catalog_self_check() -> None:
    assert CLAW.degrees == (3, 1, 1, 1)
    assert H1.graph.edge_count() == 6
    assert sorted(H1.degrees, reverse=True) == [3, 3, 3, 2, 1]
    assert H2.graph.edge_count() == 7
    assert sorted(H2.degrees, reverse=True) == [3, 3, 3, 3, 2]
    # complement(H2) must be P_3 plus K_2
    assert sorted(complement(H2.graph).edges()) == [(0, 3), (1, 3), (2, 4)]
    assert DIAMOND.degrees == (3, 3, 2, 2)


_catalog_self_check()


def _degree_masks(adj: tuple[int, ...], top: int) -> list[int]:
    # masks[d] = host vertices of degree >= d, for d in 0..top
    masks = [0] * (top + 1)
    for v, row in enumerate(adj):
        d = row.bit_count()
        if d > top:
            d = top
        bit = 1 << v
        for t in range(d + 1):
            masks[t] |= bit
    return masks


def _find_first(
    adj: tuple[int, ...], pattern: Pattern, deg_masks: list[int]
) -> tuple[int, ...] | None:
    # Backtracking in pattern-vertex order 0..k-1 with ascending host
    # candidates, so the first completed map is the lexicographically
    # smallest one.
    k = pattern.n
    if k > len(adj):
        return None
    if k == 0:
        return ()
    prows = pattern.rows
    pdegs = pattern.degrees
    mapping = [0] * k

    def rec(i: int, used: int) -> bool:
        cand = deg_masks[pdegs[i]] & ~used
        prow_i = prows[i]
        for j in range(i):
            hrow = adj[mapping[j]]
            cand &= hrow if prow_i >> j & 1 else ~hrow
            if not cand:
                return False
        while cand:
            low = cand & -cand
            mapping[i] = low.bit_length() - 1
            if i + 1 == k or rec(i + 1, used | low):
                return True
            cand ^= low
        return False

    return tuple(mapping) if rec(0, 0) else None


def _enumerate_maps(
    adj: tuple[int, ...], pattern: Pattern, deg_masks: list[int]
) -> Iterator[tuple[int, ...]]:
    k = pattern.n
    if k > len(adj):
        return
    if k == 0:
        yield ()
        return
    prows = pattern.rows
    pdegs = pattern.degrees
    mapping = [0] * k

    def rec(i: int, used: int) -> Iterator[tuple[int, ...]]:
        cand = deg_masks[pdegs[i]] & ~used
        prow_i = prows[i]
        for j in range(i):
            hrow = adj[mapping[j]]
            cand &= hrow if prow_i >> j & 1 else ~hrow
            if not cand:
                return
        for v in bits(cand):
            mapping[i] = v
            if i + 1 == k:
                yield tuple(mapping)
            else:
                yield from rec(i + 1, used | (1 << v))

    yield from rec(0, 0)


def validate_embedding(g: Graph, pattern: Pattern, emb: Embedding) -> bool:
    """Re-check an embedding edge-for-edge and non-edge-for-non-edge."""
    m = emb.map
    if len(m) != pattern.n or len(set(m)) != len(m):
        return False
    if any(not 0 <= v < g.n for v in m):
        return False
    for a in range(pattern.n):
        for b in range(a + 1, pattern.n):
            if pattern.graph.has_edge(a, b) != g.has_edge(m[a], m[b]):
                return False
    return True


def find_induced(g: Graph, pattern: Pattern) -> Embedding | None:
    """First induced copy of pattern in g, in lexicographic map order."""
    top = max(pattern.degrees, default=0)
    found = _find_first(g.adj, pattern, _degree_masks(g.adj, top))
    return Embedding(found) if found is not None else None


def all_induced(g: Graph, pattern: Pattern, limit: int | None = None) -> list[Embedding]:
    """Induced copies with pairwise distinct image sets, lexicographic order.

    Automorphic re-maps of the same vertex set collapse to the first map
    found. limit caps the number of returned embeddings.
    """
    top = max(pattern.degrees, default=0)
    deg_masks = _degree_masks(g.adj, top)
    seen: set[int] = set()
    out: list[Embedding] = []
    for mapping in _enumerate_maps(g.adj, pattern, deg_masks):
        img = 0
        for v in mapping:
            img |= 1 << v
        if img in seen:
            continue
        seen.add(img)
        out.append(Embedding(mapping))
        if limit is not None and len(out) >= limit:
            break
    return out


def is_class_member(g: Graph) -> ClassVerdict:
    """Membership verdict with the first forbidden pattern found as witness.

    Patterns are tried in the fixed order CLAW, H1, H2 so witnesses are
    reproducible.
    """
    deg_masks = _degree_masks(g.adj, 3)
    for pattern in FORBIDDEN:
        found = _find_first(g.adj, pattern, deg_masks)
        if found is not None:
            return ClassVerdict(False, (pattern, Embedding(found)))
    return ClassVerdict(True, None)
