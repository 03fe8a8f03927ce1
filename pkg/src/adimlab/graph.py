"""Simple graphs: construction, canonical generators, graph6 I/O, structure.

Vertices are the integers 0..n-1 and adjacency is stored as one bitmask row
per vertex.  Graphs are immutable and hashable, so they can be shared freely
between threads and used as cache keys.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence

from .bitset import VertexSet, bits_of
from .errors import (
    BadParameter,
    MalformedHeader,
    NonCanonicalPadding,
    OutOfRange,
    SelfLoop,
    TruncatedPayload,
)

INFINITE = math.inf

TRUE_TWIN = "true-twin"
FALSE_TWIN = "false-twin"
SINGLETON = "singleton"


class Graph:
    """Immutable simple graph with bitmask adjacency rows."""

    __slots__ = ("n", "rows", "name")

    def __init__(self, n: int, rows: Sequence[int], name: str | None = None):
        if n < 0:
            raise BadParameter("vertex count must be non-negative")
        if len(rows) != n:
            raise BadParameter(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for i, row in enumerate(rows):
            if row & ~full:
                raise OutOfRange(f"row {i} references vertices >= {n}")
            if (row >> i) & 1:
                raise SelfLoop(f"vertex {i} is adjacent to itself")
            for j in bits_of(row):
                if not (rows[j] >> i) & 1:
                    raise BadParameter(f"adjacency not symmetric at ({i}, {j})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", tuple(rows))
        object.__setattr__(self, "name", name)

    def __setattr__(self, *_):
        raise AttributeError("Graph is immutable")

    # -- basic queries ----------------------------------------------------

    def row(self, v: int) -> int:
        """Open neighborhood of v as a raw bitmask."""
        if not 0 <= v < self.n:
            raise OutOfRange(f"vertex {v} not in 0..{self.n - 1}")
        return self.rows[v]

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet(self.n, self.row(v))

    @property
    def adj(self) -> tuple[VertexSet, ...]:
        return tuple(VertexSet(self.n, r) for r in self.rows)

    def closed_row(self, v: int) -> int:
        return self.row(v) | (1 << v)

    def has_edge(self, u: int, v: int) -> bool:
        return (self.row(u) >> v) & 1 == 1

    def degree(self, v: int) -> int:
        return self.row(v).bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            high = self.rows[u] >> (u + 1)
            out.extend((u, u + 1 + d) for d in bits_of(high))
        return out

    def vertex_set(self) -> VertexSet:
        return VertexSet(self.n, (1 << self.n) - 1)

    def relabel(self, name: str | None) -> "Graph":
        g = object.__new__(Graph)
        object.__setattr__(g, "n", self.n)
        object.__setattr__(g, "rows", self.rows)
        object.__setattr__(g, "name", name)
        return g

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self.n} m={self.edge_count()}>"


# -- constructors ----------------------------------------------------------


def from_edge_list(
    n: int, edges: Iterable[tuple[int, int]], name: str | None = None
) -> Graph:
    """Build a graph from (u, v) pairs; duplicates are merged."""
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise SelfLoop(f"edge ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRange(f"edge ({u}, {v}) out of 0..{n - 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows, name)


def from_pair_mask(n: int, mask: int, name: str | None = None) -> Graph:
    """Build a graph from an edge bitmask over the pairs (i, j), i < j,
    ordered lexicographically: bit 0 is (0, 1), bit 1 is (0, 2), ..."""
    rows = [0] * n
    bit = 0
    for i in range(n):
        for j in range(i + 1, n):
            if (mask >> bit) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
    if mask >> bit:
        raise OutOfRange(f"pair mask has bits beyond the {bit} pairs of K_{n}")
    return Graph(n, rows, name)


def pair_mask_of(g: Graph) -> int:
    """Inverse of :func:`from_pair_mask`."""
    mask = 0
    bit = 0
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if g.has_edge(i, j):
                mask |= 1 << bit
            bit += 1
    return mask


def read_edge_list(text: str, name: str | None = None) -> Graph:
    """Parse the plain text format: first line "n m", then m lines "u v"."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise BadParameter("empty edge-list text")
    try:
        n, m = map(int, lines[0].split())
    except ValueError as exc:
        raise BadParameter(f"bad header line {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise BadParameter(f"expected {m} edge lines, got {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        try:
            u, v = map(int, ln.split())
        except ValueError as exc:
            raise BadParameter(f"bad edge line {ln!r}") from exc
        edges.append((u, v))
    return from_edge_list(n, edges, name)


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


# -- graph6 ----------------------------------------------------------------


def _g6_encode_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    if n <= 68719476735:
        return bytes([126, 126]) + bytes(((n >> s) & 63) + 63 for s in range(30, -1, -6))
    raise BadParameter(f"graph6 cannot encode order {n}")


def _g6_decode_size(data: bytes) -> tuple[int, int]:
    """Return (n, header length)."""
    if not data:
        raise MalformedHeader("empty record")
    b0 = data[0] - 63
    if b0 < 0 or data[0] > 126:
        raise MalformedHeader(f"byte {data[0]} outside graph6 range")
    if b0 < 63:
        return b0, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise MalformedHeader("long-form size needs 8 bytes")
        n = 0
        for b in data[2:8]:
            if not 63 <= b <= 126:
                raise MalformedHeader(f"size byte {b} outside graph6 range")
            n = (n << 6) | (b - 63)
        if n <= 258047:
            raise MalformedHeader("long-long size form used for a small order")
        return n, 8
    if len(data) < 4:
        raise MalformedHeader("extended size needs 4 bytes")
    n = 0
    for b in data[1:4]:
        if not 63 <= b <= 126:
            raise MalformedHeader(f"size byte {b} outside graph6 range")
        n = (n << 6) | (b - 63)
    if n <= 62:
        raise MalformedHeader("extended size form used for a small order")
    return n, 4


def to_graph6(g: Graph) -> str:
    """Encode in graph6: column-major upper triangle, 6 bits per byte, +63."""
    out = bytearray(_g6_encode_size(g.n))
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def from_graph6(text: str, name: str | None = None) -> Graph:
    """Decode one graph6 record (an optional ``>>graph6<<`` prefix is accepted)."""
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    data = text.strip().encode("ascii")
    n, off = _g6_decode_size(data)
    npairs = n * (n - 1) // 2
    nbytes = (npairs + 5) // 6
    payload = data[off:]
    if len(payload) < nbytes:
        raise TruncatedPayload(f"need {nbytes} payload bytes, got {len(payload)}")
    if len(payload) > nbytes:
        raise MalformedHeader(f"{len(payload) - nbytes} trailing bytes")
    rows = [0] * n
    pos = 0
    pairs = ((i, j) for j in range(1, n) for i in range(j))
    for b in payload:
        val = b - 63
        if not 0 <= val <= 63:
            raise MalformedHeader(f"payload byte {b} outside graph6 range")
        for shift in range(5, -1, -1):
            bit = (val >> shift) & 1
            if pos < npairs:
                if bit:
                    i, j = next(pairs)
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                else:
                    next(pairs)
            elif bit:
                raise NonCanonicalPadding("non-zero padding bits")
            pos += 1
    return Graph(n, rows, name)


# -- generators ------------------------------------------------------------


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise BadParameter(msg)


def path(n: int) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")


def cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def complete(n: int) -> Graph:
    _require(n >= 1, f"complete needs n >= 1, got {n}")
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << i) for i in range(n)], f"K{n}")


def empty_graph(n: int) -> Graph:
    _require(n >= 1, f"empty_graph needs n >= 1, got {n}")
    return Graph(n, [0] * n, f"N{n}")


def complete_bipartite(r: int, s: int) -> Graph:
    _require(r >= 1 and s >= 1, f"complete_bipartite needs r, s >= 1, got {r}, {s}")
    left = ((1 << s) - 1) << r
    right = (1 << r) - 1
    return Graph(r + s, [left] * r + [right] * s, f"K{r},{s}")


def hypercube(r: int) -> Graph:
    _require(r >= 1, f"hypercube needs r >= 1, got {r}")
    n = 1 << r
    rows = [0] * n
    for v in range(n):
        for b in range(r):
            rows[v] |= 1 << (v ^ (1 << b))
    return Graph(n, rows, f"Q{r}")


def petersen() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return from_edge_list(10, edges, "Petersen")


def join(g: Graph, h: Graph) -> Graph:
    """Join: disjoint union plus every cross edge; g keeps indices 0..n1-1."""
    n1, n2 = g.n, h.n
    hi = ((1 << n2) - 1) << n1
    lo = (1 << n1) - 1
    rows = [g.rows[v] | hi for v in range(n1)]
    rows += [(h.rows[v] << n1) | lo for v in range(n2)]
    return Graph(n1 + n2, rows)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    rows = list(g.rows) + [r << g.n for r in h.rows]
    return Graph(g.n + h.n, rows)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, [~r & full & ~(1 << i) for i, r in enumerate(g.rows)])


def fan(n: int) -> Graph:
    """K1 + P_n with the apex at index 0."""
    return join(complete(1), path(n)).relabel(f"F(1,{n})")


def wheel(n: int) -> Graph:
    """K1 + C_n with the apex at index 0."""
    _require(n >= 3, f"wheel needs n >= 3, got {n}")
    return join(complete(1), cycle(n)).relabel(f"W(1,{n})")


def fig1_graph(t: int) -> Graph:
    """Five-cycle 0,1,2,3,4 with a pendant path of t-1 extra vertices at 4.

    Vertices 0..3 are the cycle-only vertices, vertex 4 doubles as the first
    path vertex, and 5..t+3 continue the path (order is t + 4).
    """
    _require(t >= 1, f"fig1_graph needs t >= 1, got {t}")
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
    edges += [(4 + i, 5 + i) for i in range(t - 1)]
    return from_edge_list(t + 4, edges, f"fig1({t})")


def fig2_graph() -> Graph:
    """24 vertices in four blocks: hub 6b joined to the 5-vertex path
    6b+1..6b+5, hubs forming the path 0-6-12-18."""
    edges = []
    for b in range(4):
        hub = 6 * b
        edges += [(hub, hub + i) for i in range(1, 6)]
        edges += [(hub + i, hub + i + 1) for i in range(1, 5)]
        if b:
            edges.append((hub - 6, hub))
    return from_edge_list(24, edges, "fig2")


def fig3_graph() -> Graph:
    """Hub 0 joined to the rim 1..4; outer vertices 5..8 each join two
    cyclically consecutive rim vertices."""
    edges = [(0, i) for i in range(1, 5)]
    edges += [(5, 1), (5, 2), (6, 2), (6, 3), (7, 3), (7, 4), (8, 4), (8, 1)]
    return from_edge_list(9, edges, "fig3")


def fig4_graph() -> Graph:
    """Octahedron 0..5 (K6 minus the matching 0-3, 1-4, 2-5) plus three
    degree-2 vertices 6, 7, 8 attached to the matched pairs' complements."""
    edges = [
        (0, 1), (0, 2), (0, 4), (0, 5),
        (1, 2), (1, 3), (1, 5),
        (2, 3), (2, 4),
        (3, 4), (3, 5),
        (4, 5),
        (6, 0), (6, 1), (7, 2), (7, 3), (8, 4), (8, 5),
    ]
    return from_edge_list(9, edges, "fig4")


def fig5_graph() -> Graph:
    """Path 0..8 with chords from 0 to {2,4,5,6,7,8} and 1 to {5,6,7}."""
    edges = [(i, i + 1) for i in range(8)]
    edges += [(0, j) for j in (2, 4, 5, 6, 7, 8)]
    edges += [(1, j) for j in (5, 6, 7)]
    return from_edge_list(9, edges, "fig5")


# -- traversal and structure ------------------------------------------------


def bfs_distances(g: Graph, source: int) -> list:
    """Hop distances from ``source``; unreachable vertices get INFINITE."""
    if not 0 <= source < g.n:
        raise OutOfRange(f"vertex {source} not in 0..{g.n - 1}")
    dist = [INFINITE] * g.n
    dist[source] = 0
    frontier = 1 << source
    seen = frontier
    d = 0
    while frontier:
        reached = 0
        for v in bits_of(frontier):
            reached |= g.rows[v]
        frontier = reached & ~seen
        seen |= frontier
        d += 1
        for v in bits_of(frontier):
            dist[v] = d
    return dist


def distance_matrix(g: Graph) -> list[list]:
    return [bfs_distances(g, v) for v in range(g.n)]


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        reached = 0
        for v in bits_of(frontier):
            reached |= g.rows[v]
        frontier = reached & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def diameter(g: Graph):
    """Largest hop distance; INFINITE for disconnected graphs."""
    if g.n <= 1:
        return 0
    if not is_connected(g):
        return INFINITE
    return max(max(bfs_distances(g, v)) for v in range(g.n))


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and is_connected(g) and g.edge_count() == g.n - 1


class TwinPartition:
    """Twin equivalence classes of a graph with per-class kind."""

    __slots__ = ("classes", "kinds")

    def __init__(self, classes: Sequence[VertexSet], kinds: Sequence[str]):
        object.__setattr__(self, "classes", tuple(classes))
        object.__setattr__(self, "kinds", tuple(kinds))

    def __setattr__(self, *_):
        raise AttributeError("TwinPartition is immutable")

    def class_of(self, v: int) -> VertexSet:
        for cls in self.classes:
            if v in cls:
                return cls
        raise OutOfRange(f"vertex {v} not covered")

    def has_nontrivial_class(self) -> bool:
        return any(kind != SINGLETON for kind in self.kinds)

    def all_vertices_in_nontrivial_classes(self) -> bool:
        return all(kind != SINGLETON for kind in self.kinds)

    def __repr__(self) -> str:
        parts = [
            f"{sorted(cls)}:{kind}" for cls, kind in zip(self.classes, self.kinds)
        ]
        return f"TwinPartition({', '.join(parts)})"


def twin_partition(g: Graph) -> TwinPartition:
    """Group vertices by twin equivalence.

    u and v are twins when N(u) - {v} == N(v) - {u}; classes of open-
    neighborhood equality are false twins, classes of closed-neighborhood
    equality are true twins, and no vertex can sit in both kinds at once.
    """
    by_open: dict[int, list[int]] = {}
    by_closed: dict[int, list[int]] = {}
    for v in range(g.n):
        by_open.setdefault(g.rows[v], []).append(v)
        by_closed.setdefault(g.closed_row(v), []).append(v)
    classes = []
    kinds = []
    grouped = 0
    for members in sorted(by_open.values(), key=lambda ms: ms[0]):
        if len(members) > 1:
            classes.append(VertexSet.from_iterable(g.n, members))
            kinds.append(FALSE_TWIN)
            for v in members:
                grouped |= 1 << v
    for members in sorted(by_closed.values(), key=lambda ms: ms[0]):
        if len(members) > 1:
            classes.append(VertexSet.from_iterable(g.n, members))
            kinds.append(TRUE_TWIN)
            for v in members:
                grouped |= 1 << v
    for v in range(g.n):
        if not (grouped >> v) & 1:
            classes.append(VertexSet(g.n, 1 << v))
            kinds.append(SINGLETON)
    order = sorted(range(len(classes)), key=lambda i: classes[i].mask & -classes[i].mask)
    return TwinPartition([classes[i] for i in order], [kinds[i] for i in order])


def are_twins(g: Graph, u: int, v: int) -> bool:
    if u == v:
        raise BadParameter("twin test needs two distinct vertices")
    bu, bv = 1 << u, 1 << v
    return g.rows[u] & ~bv == g.rows[v] & ~bu
