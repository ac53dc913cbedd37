"""Immutable bitmask graphs, standard constructions, and text formats."""
from __future__ import annotations

from typing import Iterable, Iterator

VertexSet = int
MAX_VERTICES = 512


class GraphError(ValueError):
    """Raised when a graph cannot be built from the given data."""


class Graph6Error(GraphError):
    """Raised on malformed graph6 input; carries the byte offset."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class DimacsError(GraphError):
    """Raised on malformed DIMACS .col input; carries the line number."""

    def __init__(self, message: str, line: int) -> None:
        super().__init__(f"{message} (line {line})")
        self.line = line


class EdgeListError(GraphError):
    """Raised on malformed edge-list input; carries the line number."""

    def __init__(self, message: str, line: int) -> None:
        super().__init__(f"{message} (line {line})")
        self.line = line


def bits(mask: VertexSet) -> Iterator[int]:
    """Yield the set bit indices of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Undirected simple graph on vertices 0..n-1 with bitmask adjacency rows."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if not 0 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self.adj = tuple(rows)

    @classmethod
    def _from_rows(cls, n: int, rows: tuple[int, ...]) -> "Graph":
        # Trusted fast path for enumeration and induced subgraphs.
        g = object.__new__(cls)
        g.n = n
        g.adj = rows
        return g

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in ascending order."""
        for u in range(self.n):
            upper = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(upper):
                yield (u, v)

    def vertex_mask(self) -> VertexSet:
        return (1 << self.n) - 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


def make_graph(n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    """Build a graph, rejecting loops and out-of-range endpoints.

    Parallel mentions of the same pair collapse to one edge.
    """
    return Graph(n, edges)


def neighbors(g: Graph, v: int) -> VertexSet:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
    return g.adj[v]


def closed_neighbors(g: Graph, v: int) -> VertexSet:
    """N(v) together with v itself."""
    return neighbors(g, v) | (1 << v)


def induced(g: Graph, mask: VertexSet) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on the vertices of mask, relabeled 0..k-1 in id
    order. Also returns the map: entry i is the original id of new vertex i."""
    if mask >> g.n:
        raise GraphError("vertex mask references vertices outside the graph")
    keep = list(bits(mask))
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for u in bits(g.adj[v] & mask):
            row |= 1 << index[u]
        rows.append(row)
    return Graph._from_rows(len(keep), tuple(rows)), tuple(keep)


def complement(g: Graph) -> Graph:
    full = g.vertex_mask()
    rows = tuple((full ^ g.adj[v]) & ~(1 << v) for v in range(g.n))
    return Graph._from_rows(g.n, rows)


# ---------------------------------------------------------------------------
# Constructions


def complete(k: int) -> Graph:
    if k < 1:
        raise GraphError("complete graph needs k >= 1")
    full = (1 << k) - 1
    return Graph._from_rows(k, tuple(full ^ (1 << v) for v in range(k)))


def cycle(k: int) -> Graph:
    if k < 3:
        raise GraphError("cycle needs k >= 3")
    return Graph(k, [(v, (v + 1) % k) for v in range(k)])


def path(k: int) -> Graph:
    if k < 1:
        raise GraphError("path needs k >= 1")
    return Graph(k, [(v, v + 1) for v in range(k - 1)])


def blowup(g: Graph, m: int) -> tuple[Graph, tuple[VertexSet, ...]]:
    """Replace each vertex with a clique of size m, fully joining cliques
    whose originals are adjacent.

    Returns the blown-up graph and, per original vertex, the mask of its bag.
    Vertex u's bag occupies ids [u*m, (u+1)*m).
    """
    if m < 1:
        raise GraphError("blowup needs m >= 1")
    n = g.n * m
    if n > MAX_VERTICES:
        raise GraphError(f"blowup of {g.n} vertices by {m} exceeds {MAX_VERTICES}")
    bag = (1 << m) - 1
    bags = tuple(bag << (u * m) for u in range(g.n))
    rows = []
    for u in range(g.n):
        around = bags[u]
        for w in bits(g.adj[u]):
            around |= bags[w]
        for i in range(m):
            rows.append(around & ~(1 << (u * m + i)))
    return Graph._from_rows(n, tuple(rows)), bags


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union of g1 and g2 plus every edge between the two sides.

    g2's vertices are shifted up by g1.n.
    """
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise GraphError(f"join on {n} vertices exceeds {MAX_VERTICES}")
    left = (1 << g1.n) - 1
    right = ((1 << g2.n) - 1) << g1.n
    rows = [g1.adj[v] | right for v in range(g1.n)]
    rows += [(g2.adj[v] << g1.n) | left for v in range(g2.n)]
    return Graph._from_rows(n, tuple(rows))


def mycielski(g: Graph) -> tuple[Graph, dict[str, object]]:
    """Mycielski construction: originals 0..n-1, shadows n..2n-1, apex 2n.

    Shadow n+i sees the original neighbors of i; the apex sees every shadow.
    Returns the new graph and the id layout.
    """
    n = g.n
    if 2 * n + 1 > MAX_VERTICES:
        raise GraphError(f"mycielski of {n} vertices exceeds {MAX_VERTICES}")
    apex = 2 * n
    rows = [0] * (2 * n + 1)
    for v in range(n):
        shadow_of_neighbors = g.adj[v] << n
        rows[v] = g.adj[v] | shadow_of_neighbors
        rows[n + v] = g.adj[v] | (1 << apex)
    rows[apex] = ((1 << n) - 1) << n
    aux = {
        "originals": list(range(n)),
        "shadows": list(range(n, 2 * n)),
        "apex": apex,
    }
    return Graph._from_rows(2 * n + 1, tuple(rows)), aux


# ---------------------------------------------------------------------------
# graph6 (short form, n <= 62)


def format_graph6(g: Graph) -> str:
    """Encode in graph6 short form. Only graphs on at most 62 vertices fit."""
    n = g.n
    if n > 62:
        raise Graph6Error("short-form graph6 holds at most 62 vertices", 0)
    out = [chr(63 + n)]
    acc = 0
    width = 0
    for v in range(1, n):
        col = g.adj[v]
        for u in range(v):
            acc = (acc << 1) | (col >> u & 1)
            width += 1
            if width == 6:
                out.append(chr(63 + acc))
                acc = 0
                width = 0
    if width:
        acc <<= 6 - width
        out.append(chr(63 + acc))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one short-form graph6 line.

    Leading ">>graph6<<" markers and surrounding whitespace are tolerated;
    the long-form '~' header is rejected since ids past 62 are out of scope
    for this reader.
    """
    s = text.strip()
    base = text.find(s) if s else 0
    if s.startswith(">>graph6<<"):
        base += 10
        s = s[10:]
    if not s:
        raise Graph6Error("empty graph6 input", base)
    first = ord(s[0])
    if s[0] == "~":
        raise Graph6Error("long-form graph6 (>= 63 vertices) is not supported", base)
    if not 63 <= first <= 126:
        raise Graph6Error(f"invalid graph6 byte {s[0]!r}", base)
    n = first - 63
    need = (n * (n - 1) // 2 + 5) // 6
    body = s[1:]
    if len(body) < need:
        raise Graph6Error(
            f"truncated graph6 body: need {need} bytes, found {len(body)}",
            base + len(s),
        )
    if len(body) > need:
        raise Graph6Error("trailing bytes after graph6 body", base + 1 + need)
    rows = [0] * n
    bitpos = 0
    for i, ch in enumerate(body):
        code = ord(ch) - 63
        if not 0 <= code <= 63:
            raise Graph6Error(f"invalid graph6 byte {ch!r}", base + 1 + i)
        for k in range(5, -1, -1):
            if bitpos >= n * (n - 1) // 2:
                if code >> k & 1:
                    raise Graph6Error("nonzero padding bits", base + 1 + i)
                continue
            if code >> k & 1:
                u, v = _pair_from_column_index(bitpos)
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            bitpos += 1
    return Graph._from_rows(n, tuple(rows))


def _pair_from_column_index(idx: int) -> tuple[int, int]:
    # graph6 orders the upper triangle column by column: (0,1), (0,2), (1,2), ...
    v = 1
    while v * (v - 1) // 2 <= idx:
        v += 1
    v -= 1
    return idx - v * (v - 1) // 2, v


# ---------------------------------------------------------------------------
# DIMACS .col


def write_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.edge_count()}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS .col: one 'p edge N M' header, then M 'e u v' lines (1-based)."""
    n = None
    declared = 0
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise DimacsError("second problem line", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise DimacsError(f"malformed problem line {line!r}", lineno)
            try:
                n, declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError(f"non-numeric problem line {line!r}", lineno) from None
        elif parts[0] == "e":
            if n is None:
                raise DimacsError("edge before problem line", lineno)
            if len(parts) != 3:
                raise DimacsError(f"malformed edge line {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise DimacsError(f"non-numeric edge line {line!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsError(f"edge ({u}, {v}) outside 1..{n}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise DimacsError(f"unrecognized line {line!r}", lineno)
    if n is None:
        raise DimacsError("missing problem line", 0)
    if len(edges) != declared:
        raise DimacsError(
            f"problem line declares {declared} edges, found {len(edges)}", 0
        )
    try:
        return make_graph(n, edges)
    except GraphError as exc:
        raise DimacsError(str(exc), 0) from None


# ---------------------------------------------------------------------------
# Plain edge list


def write_edge_list(g: Graph) -> str:
    lines = [f"n={g.n}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the plain format: first line 'n=<count>', then 'u v' lines (0-based).

    Blank lines and '#' comments are skipped.
    """
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            if not line.startswith("n="):
                raise EdgeListError(f"expected 'n=<count>', found {line!r}", lineno)
            try:
                n = int(line[2:])
            except ValueError:
                raise EdgeListError(f"non-numeric vertex count {line!r}", lineno) from None
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(f"expected 'u v', found {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"non-numeric edge line {line!r}", lineno) from None
        edges.append((u, v))
    if n is None:
        raise EdgeListError("missing 'n=<count>' line", 0)
    try:
        return make_graph(n, edges)
    except GraphError as exc:
        raise EdgeListError(str(exc), 0) from None


# ---------------------------------------------------------------------------
# Exhaustive labeled enumeration


def pair_order(n: int) -> list[tuple[int, int]]:
    """The pair ordering that edge-mask enumeration uses: (0,1), (0,2), ...
    sorted by first then second endpoint."""
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def enumerate_labeled(n: int) -> Iterator[Graph]:
    """Yield every labeled graph on n vertices exactly once, by edge mask.

    Bit i of the mask selects pair_order(n)[i]. Masks ascend from 0, so the
    sequence starts at the empty graph and ends at K_n. Capped at n <= 7
    because 2^21 graphs is the intended exhaustive regime.
    """
    if not 0 <= n <= 7:
        raise GraphError("exhaustive enumeration is capped at n <= 7")
    pairs = pair_order(n)
    m = len(pairs)
    from_rows = Graph._from_rows
    for mask in range(1 << m):
        rows = [0] * n
        rest = mask
        while rest:
            low = rest & -rest
            u, v = pairs[low.bit_length() - 1]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            rest ^= low
        yield from_rows(n, tuple(rows))


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    """Rebuild the graph a given enumeration mask denotes."""
    pairs = pair_order(n)
    if mask >> len(pairs):
        raise GraphError("edge mask has bits beyond the pair count")
    rows = [0] * n
    rest = mask
    while rest:
        low = rest & -rest
        u, v = pairs[low.bit_length() - 1]
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        rest ^= low
    return Graph._from_rows(n, tuple(rows))
