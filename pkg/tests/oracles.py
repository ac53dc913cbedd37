"""Naive reference implementations.

Everything here trades speed for obviousness: subset enumeration, plain
permutations, first-fit backtracking in vertex order with no heuristics.
The fast solvers in the package are tested against these on small graphs.
Only Graph.n and Graph.has_edge are used, so the oracles stay independent
of the bitmask internals.
"""
from __future__ import annotations

import itertools


def naive_clique_number(g) -> int:
    best = 0
    for r in range(1, g.n + 1):
        for sub in itertools.combinations(range(g.n), r):
            if all(g.has_edge(u, v) for u, v in itertools.combinations(sub, 2)):
                best = r
                break  # one clique of size r is enough, try r+1
    return best


def naive_is_k_colorable(g, k: int) -> bool:
    if g.n == 0:
        return True
    if k <= 0:
        return False
    colors = [0] * g.n

    def rec(v: int) -> bool:
        if v == g.n:
            return True
        for c in range(1, k + 1):
            if all(colors[u] != c for u in range(v) if g.has_edge(u, v)):
                colors[v] = c
                if rec(v + 1):
                    return True
                colors[v] = 0
        return False

    return rec(0)


def naive_chromatic_number(g) -> int:
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        if naive_is_k_colorable(g, k):
            return k
    raise AssertionError("n colors always suffice")


def naive_find_induced(g, pattern) -> tuple[int, ...] | None:
    """First injective map that matches edges and non-edges exactly.

    permutations() yields in lexicographic order, so the first hit is the
    lexicographically smallest map, same contract as find_induced.
    """
    k = pattern.n
    for perm in itertools.permutations(range(g.n), k):
        if all(
            pattern.graph.has_edge(a, b) == g.has_edge(perm[a], perm[b])
            for a in range(k)
            for b in range(a + 1, k)
        ):
            return perm
    return None


def naive_has_induced(g, pattern) -> bool:
    return naive_find_induced(g, pattern) is not None


def naive_is_proper(g, colors) -> bool:
    return len(colors) == g.n and all(
        colors[u] != colors[v]
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if g.has_edge(u, v)
    )
