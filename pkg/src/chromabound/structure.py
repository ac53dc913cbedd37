"""Neighborhood structure around a maximum clique, and its verification.

For a vertex v with maximum neighborhood clique Q, the remainder N(v) - Q of
a class member is always one of: a complete graph; two nonadjacent vertices
w, z each missing exactly one private vertex of Q; or those two plus a
middle vertex x adjacent to both and missing exactly the two private
vertices. The verifier classifies every vertex and reports violations,
which can only occur on graphs outside the class.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .graph import Graph, VertexSet, bits


class PreconditionError(ValueError):
    """Raised when a supplied clique is not a maximum clique of the scope."""


# ---------------------------------------------------------------------------
# Case types


@dataclass(frozen=True)
class Complete:
    tag = "complete"


@dataclass(frozen=True)
class TwoNonadjacent:
    tag = "two_nonadjacent"
    w: int
    z: int
    w_prime: int
    z_prime: int


@dataclass(frozen=True)
class ThreeWithMiddle:
    tag = "three_with_middle"
    w: int
    z: int
    x: int
    w_prime: int
    z_prime: int


@dataclass(frozen=True)
class Violation:
    tag = "violation"
    reason: str


Lemma1Case = Union[Complete, TwoNonadjacent, ThreeWithMiddle, Violation]


@dataclass(frozen=True)
class VertexClassification:
    vertex: int
    clique: VertexSet
    case: Lemma1Case


@dataclass(frozen=True)
class StructureReport:
    """Per-vertex classification plus tallies; zero violations on members."""

    mode: str
    entries: tuple[VertexClassification, ...]
    counts: dict[str, int]
    violations: tuple[VertexClassification, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


# ---------------------------------------------------------------------------
# Clique search on bitmasks


def _clique_size(adj: tuple[int, ...], scope: VertexSet, stop_at: int | None = None) -> int:
    """Max clique size within scope; may return early once stop_at is hit."""
    best = 0

    def rec(size: int, cand: VertexSet) -> None:
        nonlocal best
        # greedy coloring of cand gives both the branch order and a bound
        order: list[int] = []
        bound: list[int] = []
        rest = cand
        color = 0
        while rest:
            color += 1
            avail = rest
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                order.append(v)
                bound.append(color)
                avail &= ~adj[v]
                avail &= ~low
                rest ^= low
        for i in range(len(order) - 1, -1, -1):
            if size + bound[i] <= best:
                return
            v = order[i]
            nxt = cand & adj[v]
            if nxt:
                rec(size + 1, nxt)
            elif size + 1 > best:
                best = size + 1
            if stop_at is not None and best >= stop_at:
                return
            cand &= ~(1 << v)

    if scope:
        rec(0, scope)
    return best


def _cliques_of_size(adj: tuple[int, ...], scope: VertexSet, k: int) -> Iterator[VertexSet]:
    """All cliques of size exactly k inside scope, in lexicographic set order."""
    if k == 0:
        yield 0
        return

    def rec(mask: VertexSet, cnt: int, cand: VertexSet) -> Iterator[VertexSet]:
        c = cand
        while c:
            low = c & -c
            c ^= low
            if cnt + 1 == k:
                yield mask | low
                continue
            v = low.bit_length() - 1
            rest = cand & adj[v] & ~((low << 1) - 1)
            if cnt + 1 + rest.bit_count() >= k:
                yield from rec(mask | low, cnt + 1, rest)

    yield from rec(0, 0, scope)


def max_clique_in(g: Graph, scope: VertexSet) -> VertexSet:
    """Lexicographically smallest maximum clique of the subgraph on scope."""
    if scope >> g.n:
        raise ValueError("scope references vertices outside the graph")
    adj = g.adj
    need = _clique_size(adj, scope)
    clique = 0
    cand = scope
    while need:
        for v in bits(cand):
            rest = cand & adj[v] & ~((2 << v) - 1)
            if need == 1 or _clique_size(adj, rest, stop_at=need - 1) >= need - 1:
                clique |= 1 << v
                cand = rest
                need -= 1
                break
    return clique


def neighborhood_clique(g: Graph, v: int) -> VertexSet:
    """Q_v: the (lexicographically smallest) maximum clique of N(v)."""
    return max_clique_in(g, g.adj[v])


def _is_complete(adj: tuple[int, ...], mask: VertexSet) -> bool:
    for v in bits(mask):
        if adj[v] & mask != mask ^ (1 << v):
            return False
    return True


# ---------------------------------------------------------------------------
# Classification


def _private_nonneighbor(adj: tuple[int, ...], q: VertexSet, u: int) -> int | None:
    """The unique vertex of q that u misses, or None if not unique."""
    missing = q & ~adj[u]
    if missing and missing == (missing & -missing):
        return missing.bit_length() - 1
    return None


def _classify(adj: tuple[int, ...], v: int, q: VertexSet) -> Lemma1Case:
    rem = adj[v] & ~q
    if _is_complete(adj, rem):
        return Complete()
    count = rem.bit_count()
    if count == 2:
        w, z = bits(rem)
        return _pair_case(adj, q, w, z, x=None)
    if count == 3:
        a, b, c = bits(rem)
        # the remainder must be a path; its middle is adjacent to both ends
        for x, w, z in ((a, b, c), (b, a, c), (c, a, b)):
            row = adj[x]
            if row >> w & 1 and row >> z & 1 and not adj[w] >> z & 1:
                return _pair_case(adj, q, w, z, x=x)
        return Violation("remainder of size 3 is not a two-edge path")
    return Violation(f"remainder has {count} vertices and is not complete")


def _pair_case(
    adj: tuple[int, ...], q: VertexSet, w: int, z: int, x: int | None
) -> Lemma1Case:
    w_prime = _private_nonneighbor(adj, q, w)
    if w_prime is None:
        n_missing = (q & ~adj[w]).bit_count()
        return Violation(
            f"vertex {w} misses {n_missing} clique vertices; expected exactly one"
        )
    z_prime = _private_nonneighbor(adj, q, z)
    if z_prime is None:
        n_missing = (q & ~adj[z]).bit_count()
        return Violation(
            f"vertex {z} misses {n_missing} clique vertices; expected exactly one"
        )
    if w_prime == z_prime:
        return Violation(
            f"vertices {w} and {z} miss the same clique vertex {w_prime}"
        )
    if x is None:
        return TwoNonadjacent(w=w, z=z, w_prime=w_prime, z_prime=z_prime)
    x_missing = q & ~adj[x]
    expected = (1 << w_prime) | (1 << z_prime)
    if x_missing != expected:
        return Violation(
            f"middle vertex {x} misses clique vertices "
            f"{sorted(bits(x_missing))}; expected exactly "
            f"{sorted(bits(expected))}"
        )
    return ThreeWithMiddle(w=w, z=z, x=x, w_prime=w_prime, z_prime=z_prime)


def classify_vertex(g: Graph, v: int, q: VertexSet) -> Lemma1Case:
    """Classify N(v) - q against the three admissible shapes.

    q must be a maximum clique of the subgraph on N(v); anything else is a
    caller error, reported as PreconditionError.
    """
    if not 0 <= v < g.n:
        raise PreconditionError(f"vertex {v} outside 0..{g.n - 1}")
    adj = g.adj
    nb = adj[v]
    if q & ~nb:
        raise PreconditionError("supplied clique is not inside the neighborhood")
    if not _is_complete(adj, q):
        raise PreconditionError("supplied vertex set is not a clique")
    if q.bit_count() != _clique_size(adj, nb):
        raise PreconditionError("supplied clique is not maximum in the neighborhood")
    return _classify(adj, v, q)


def verify_lemma1(g: Graph, mode: str = "single") -> StructureReport:
    """Classify every vertex of g.

    mode "single" uses the deterministic neighborhood clique for each
    vertex; mode "all_max_cliques" classifies against every maximum clique
    of each neighborhood, one entry per (vertex, clique) pair.
    """
    if mode not in ("single", "all_max_cliques"):
        raise ValueError(f"unknown mode {mode!r}")
    adj = g.adj
    entries: list[VertexClassification] = []
    for v in range(g.n):
        nb = adj[v]
        if mode == "single":
            q = max_clique_in(g, nb)
            entries.append(VertexClassification(v, q, _classify(adj, v, q)))
        else:
            omega = _clique_size(adj, nb)
            for q in _cliques_of_size(adj, nb, omega):
                entries.append(VertexClassification(v, q, _classify(adj, v, q)))
    counts: dict[str, int] = {}
    for e in entries:
        counts[e.case.tag] = counts.get(e.case.tag, 0) + 1
    violations = tuple(e for e in entries if isinstance(e.case, Violation))
    return StructureReport(mode=mode, entries=tuple(entries), counts=counts, violations=violations)
