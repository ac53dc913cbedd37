"""Exact certified invariants and Kempe-chain machinery.

Clique and chromatic numbers come with certificates that re-validate
independently of the search that produced them. Every solve accepts a time
budget; running past it raises SolveTimeout rather than ever returning a
wrong or truncated answer.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

from .graph import Graph, VertexSet, bits
from .structure import max_clique_in

PATH = "path"
CYCLE = "cycle"
OTHER = "other"


class SolveTimeout(Exception):
    """A solver exceeded its time budget; no answer is implied."""

    def __init__(self, budget_secs: float) -> None:
        super().__init__(f"solve exceeded time budget of {budget_secs} s")
        self.budget_secs = budget_secs


class StaleComponentError(ValueError):
    """The component no longer matches the coloring it is applied to."""


@dataclass(frozen=True)
class Coloring:
    """Total assignment vertex -> color in 1..k."""

    colors: tuple[int, ...]
    k: int


@dataclass(frozen=True)
class KempeComponent:
    """One connected piece of the subgraph induced by two color classes.

    vertices is a traversal (endpoint to endpoint, or around the cycle
    starting at the smallest id) unless shape is OTHER, in which case it is
    simply sorted.
    """

    vertices: tuple[int, ...]
    shape: str
    colors: tuple[int, int]


def verify_coloring(g: Graph, coloring: Coloring) -> bool:
    """True iff the coloring is total on g and proper."""
    cols = coloring.colors
    if len(cols) != g.n:
        return False
    for c in cols:
        if not isinstance(c, int) or not 1 <= c <= coloring.k:
            return False
    for u in range(g.n):
        row = g.adj[u] >> (u + 1) << (u + 1)
        cu = cols[u]
        for v in bits(row):
            if cols[v] == cu:
                return False
    return True


def clique_number(g: Graph) -> tuple[int, VertexSet]:
    """(omega, witness); the witness is the lexicographically smallest
    maximum clique."""
    witness = max_clique_in(g, g.vertex_mask())
    return witness.bit_count(), witness


# ---------------------------------------------------------------------------
# Coloring search


def _dsatur_greedy(adj: tuple[int, ...], n: int) -> list[int]:
    colors = [0] * n
    near = [0] * n  # bitmask of colors on each vertex's neighbors
    degs = [adj[v].bit_count() for v in range(n)]
    for _ in range(n):
        best = -1
        best_key = (-1, -1, 0)
        for v in range(n):
            if colors[v]:
                continue
            key = (near[v].bit_count(), degs[v], -v)
            if key > best_key:
                best_key = key
                best = v
        v = best
        free = ~near[v]
        c = (free & -free).bit_length()  # lowest clear bit, 1-based
        colors[v] = c
        bit = 1 << (c - 1)
        for u in bits(adj[v]):
            near[u] |= bit
    return colors


def greedy_upper_bound(g: Graph) -> tuple[int, Coloring]:
    """Saturation-degree-first greedy coloring; palette size bounds chi."""
    colors = _dsatur_greedy(g.adj, g.n)
    k = max(colors, default=0)
    return k, Coloring(tuple(colors), k)


def _solve_k(
    adj: tuple[int, ...],
    n: int,
    k: int,
    clique: VertexSet,
    deadline: float | None,
    budget_secs: float,
) -> tuple[int, ...] | None:
    """Backtracking k-coloring over bitmask adjacency.

    The supplied clique is pre-colored 1..|clique| to kill color-permutation
    symmetry; uncolored vertices may only open one fresh color beyond the
    highest color used so far, which is the standard completeness-preserving
    cap. Vertex choice is max saturation, then max degree, then min id.
    """
    if clique.bit_count() > k:
        return None
    colors = [0] * n
    near = [0] * n  # bitmask of colors present on neighbors
    cnt = [[0] * (k + 1) for _ in range(n)]
    degs = [adj[v].bit_count() for v in range(n)]
    nodes = 0

    def place(v: int, c: int) -> None:
        colors[v] = c
        for u in bits(adj[v]):
            cu = cnt[u]
            cu[c] += 1
            if cu[c] == 1:
                near[u] |= 1 << (c - 1)

    def unplace(v: int, c: int) -> None:
        colors[v] = 0
        for u in bits(adj[v]):
            cu = cnt[u]
            cu[c] -= 1
            if cu[c] == 0:
                near[u] &= ~(1 << (c - 1))

    maxc = 0
    placed = 0
    for v in bits(clique):
        maxc += 1
        place(v, maxc)
        placed += 1

    def rec(colored: int, maxc: int) -> bool:
        nonlocal nodes
        if colored == n:
            return True
        nodes += 1
        if deadline is not None and nodes & 255 == 0 and time.monotonic() > deadline:
            raise SolveTimeout(budget_secs)
        best = -1
        best_key = (-1, -1, 0)
        for v in range(n):
            if colors[v]:
                continue
            key = (near[v].bit_count(), degs[v], -v)
            if key > best_key:
                best_key = key
                best = v
        v = best
        lim = maxc + 1 if maxc < k else k
        avail = ~near[v] & ((1 << lim) - 1)
        while avail:
            low = avail & -avail
            avail ^= low
            c = low.bit_length()
            place(v, c)
            if rec(colored + 1, c if c > maxc else maxc):
                return True
            unplace(v, c)
        return False

    if rec(placed, maxc):
        return tuple(colors)
    return None


def is_k_colorable(
    g: Graph, k: int, time_budget_secs: float | None = None
) -> Coloring | None:
    """A proper k-coloring if one exists, else None. Deterministic."""
    if k < 0:
        raise ValueError("k must be >= 0")
    n = g.n
    if n == 0:
        return Coloring((), k)
    if k == 0:
        return None
    greedy = _dsatur_greedy(g.adj, n)
    if max(greedy) <= k:
        return Coloring(tuple(greedy), k)
    clique = max_clique_in(g, g.vertex_mask())
    deadline = time.monotonic() + time_budget_secs if time_budget_secs else None
    sol = _solve_k(g.adj, n, k, clique, deadline, time_budget_secs or 0.0)
    return Coloring(sol, k) if sol is not None else None


def chromatic_number(
    g: Graph, time_budget_secs: float | None = None
) -> tuple[int, Coloring]:
    """(chi, witness). The witness uses exactly chi colors and the
    infeasibility of chi-1 was established by exhaustive search."""
    n = g.n
    if n == 0:
        return 0, Coloring((), 0)
    deadline = time.monotonic() + time_budget_secs if time_budget_secs else None
    ub, witness = greedy_upper_bound(g)
    clique = max_clique_in(g, g.vertex_mask())
    lb = clique.bit_count()
    k = ub
    while k > lb:
        sol = _solve_k(g.adj, n, k - 1, clique, deadline, time_budget_secs or 0.0)
        if sol is None:
            break
        k -= 1
        witness = Coloring(sol, k)
    return k, witness


# ---------------------------------------------------------------------------
# Kempe chains


def _component_mask(
    adj: tuple[int, ...], scope: VertexSet, start: int
) -> VertexSet:
    seen = 1 << start
    frontier = seen
    while frontier:
        grow = 0
        for v in bits(frontier):
            grow |= adj[v] & scope
        frontier = grow & ~seen
        seen |= frontier
    return seen


def _traverse(adj: tuple[int, ...], comp: VertexSet, cyclic: bool) -> tuple[int, ...]:
    if comp == (comp & -comp):
        return (comp.bit_length() - 1,)
    if cyclic:
        start = (comp & -comp).bit_length() - 1
    else:
        ends = [v for v in bits(comp) if (adj[v] & comp).bit_count() <= 1]
        start = min(ends)
    out = [start]
    prev = -1
    cur = start
    size = comp.bit_count()
    while len(out) < size:
        nxt_mask = adj[cur] & comp
        if prev >= 0:
            nxt_mask &= ~(1 << prev)
        if cyclic and len(out) > 1:
            nxt_mask &= ~(1 << start)
        if not nxt_mask:
            break
        nxt = (nxt_mask & -nxt_mask).bit_length() - 1
        out.append(nxt)
        prev, cur = cur, nxt
    return tuple(out)


def kempe_components(
    g: Graph, coloring: Coloring, c1: int, c2: int
) -> list[KempeComponent]:
    """Connected components of the subgraph on the c1- and c2-colored
    vertices, each classified as path, cycle, or other by its degrees."""
    if c1 == c2:
        raise ValueError("the two colors must differ")
    cols = coloring.colors
    scope = 0
    for v, c in enumerate(cols):
        if c == c1 or c == c2:
            scope |= 1 << v
    adj = g.adj
    out: list[KempeComponent] = []
    left = scope
    while left:
        start = (left & -left).bit_length() - 1
        comp = _component_mask(adj, scope, start)
        left &= ~comp
        degs = [(adj[v] & comp).bit_count() for v in bits(comp)]
        if any(d >= 3 for d in degs):
            verts = tuple(bits(comp))
            shape = OTHER
        elif degs and all(d == 2 for d in degs):
            verts = _traverse(adj, comp, cyclic=True)
            shape = CYCLE
        else:
            verts = _traverse(adj, comp, cyclic=False)
            shape = PATH
        out.append(KempeComponent(verts, shape, (c1, c2)))
    return out


def kempe_swap(
    coloring: Coloring, comp: KempeComponent, g: Graph | None = None
) -> Coloring:
    """Exchange the component's two colors on exactly its vertices.

    A component whose vertices no longer carry the two colors is stale and
    rejected. Passing the host graph additionally re-derives the component
    from scratch and rejects any mismatch, catching staleness that color
    membership alone cannot see.
    """
    c1, c2 = comp.colors
    cols = list(coloring.colors)
    member_mask = 0
    for v in comp.vertices:
        if cols[v] != c1 and cols[v] != c2:
            raise StaleComponentError(
                f"vertex {v} is colored {cols[v]}, not {c1} or {c2}"
            )
        member_mask |= 1 << v
    if g is not None:
        scope = 0
        for v, c in enumerate(cols):
            if c == c1 or c == c2:
                scope |= 1 << v
        fresh = _component_mask(g.adj, scope, comp.vertices[0])
        if fresh != member_mask:
            raise StaleComponentError(
                "component does not match the bichromatic component of the "
                "current coloring"
            )
    for v in comp.vertices:
        cols[v] = c2 if cols[v] == c1 else c1
    return Coloring(tuple(cols), coloring.k)
