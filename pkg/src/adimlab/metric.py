"""Truncated metrics and per-pair distinguishing sets.

For a truncation level t, the distance between x and y is min(d(x, y), t),
with unreachable pairs saturating to t.  The distinguishing set of a pair
(x, y) collects every vertex whose truncated distances to x and to y differ;
the minimum pair-set size over all pairs bounds the feasible cover level k.
"""

from __future__ import annotations

from functools import lru_cache

from .bitset import VertexSet
from .errors import BadParameter, KTooLarge, OutOfRange, SamePair, TooSmall
from .graph import Graph, bfs_distances, distance_matrix

_TABLE_CACHE_SIZE = 1024


def pair_rank(n: int, x: int, y: int) -> int:
    """Rank of the unordered pair (x, y), x < y, in the flat pair array."""
    if x > y:
        x, y = y, x
    return x * n - x * (x + 1) // 2 + (y - x - 1)


def pair_of_rank(n: int, r: int) -> tuple[int, int]:
    x = 0
    row = n - 1
    while r >= row:
        r -= row
        row -= 1
        x += 1
    return x, x + 1 + r


class DistinguishTable:
    """All pair distinguishing sets of a graph at one truncation level."""

    __slots__ = ("graph", "t", "pair_masks", "pair_sizes")

    def __init__(self, graph: Graph, t: int, pair_masks: list[int]):
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "pair_masks", tuple(pair_masks))
        object.__setattr__(
            self, "pair_sizes", tuple(m.bit_count() for m in pair_masks)
        )

    def __setattr__(self, *_):
        raise AttributeError("DistinguishTable is immutable")

    @property
    def n(self) -> int:
        return self.graph.n

    def pair_mask(self, x: int, y: int) -> int:
        if x == y:
            raise SamePair(f"pair needs two distinct vertices, got ({x}, {y})")
        return self.pair_masks[pair_rank(self.n, x, y)]

    def pair_set(self, x: int, y: int) -> VertexSet:
        return VertexSet(self.n, self.pair_mask(x, y))

    def pairs(self):
        """Yield (x, y, mask) over all unordered pairs in rank order."""
        n = self.n
        r = 0
        for x in range(n):
            for y in range(x + 1, n):
                yield x, y, self.pair_masks[r]
                r += 1

    def min_pair_size(self) -> int:
        return min(self.pair_sizes)

    def max_pair_size(self) -> int:
        return max(self.pair_sizes)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "t": self.t,
            "pairs": [
                {"x": x, "y": y, "set": VertexSet(self.n, m).to_list()}
                for x, y, m in self.pairs()
            ],
        }


def truncated_distance(g: Graph, t: int, x: int, y: int) -> int:
    """min(d(x, y), t); pairs in different components saturate to t."""
    if t < 1:
        raise BadParameter(f"truncation level must be >= 1, got {t}")
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise OutOfRange(f"pair ({x}, {y}) out of 0..{g.n - 1}")
    if x == y:
        return 0
    if t == 1:
        return 1
    if t == 2:
        return 1 if g.has_edge(x, y) else 2
    d = bfs_distances(g, x)[y]
    return t if d > t else int(d)


def distinguishing_set(g: Graph, t: int, x: int, y: int) -> VertexSet:
    """Vertices z with min(d(x,z),t) != min(d(y,z),t); always contains x, y."""
    if x == y:
        raise SamePair(f"({x}, {y})")
    if t < 1:
        raise BadParameter(f"truncation level must be >= 1, got {t}")
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise OutOfRange(f"pair ({x}, {y}) out of 0..{g.n - 1}")
    if t == 2:
        pair = (1 << x) | (1 << y)
        return VertexSet(g.n, ((g.rows[x] ^ g.rows[y]) & ~pair) | pair)
    dx = bfs_distances(g, x)
    dy = bfs_distances(g, y)
    mask = 0
    for z in range(g.n):
        if min(dx[z], t) != min(dy[z], t):
            mask |= 1 << z
    return VertexSet(g.n, mask)


def _build_masks(g: Graph, t: int) -> list[int]:
    n = g.n
    masks = []
    if t == 1:
        for x in range(n):
            for y in range(x + 1, n):
                masks.append((1 << x) | (1 << y))
    elif t == 2:
        # one symmetric difference of adjacency rows per pair, no BFS
        rows = g.rows
        for x in range(n):
            rx = rows[x]
            for y in range(x + 1, n):
                pair = (1 << x) | (1 << y)
                masks.append(((rx ^ rows[y]) & ~pair) | pair)
    else:
        dist = distance_matrix(g)
        trunc = [[t if d > t else d for d in row] for row in dist]
        for x in range(n):
            tx = trunc[x]
            for y in range(x + 1, n):
                ty = trunc[y]
                m = 0
                for z in range(n):
                    if tx[z] != ty[z]:
                        m |= 1 << z
                masks.append(m)
    return masks


@lru_cache(maxsize=_TABLE_CACHE_SIZE)
def build_table(g: Graph, t: int) -> DistinguishTable:
    """Compute every pair's distinguishing set at truncation level t."""
    if t < 1:
        raise BadParameter(f"truncation level must be >= 1, got {t}")
    return DistinguishTable(g, t, _build_masks(g, t))


def dimensionality(table: DistinguishTable) -> int:
    """Smallest pair-set size: the largest k admitting a k-generator."""
    if table.n < 2:
        raise TooSmall(f"need at least 2 vertices, got {table.n}")
    return table.min_pair_size()


def forced_set(table: DistinguishTable, k: int) -> VertexSet:
    """Union of all pair sets of size exactly k.

    Every k-generator at this table's level contains the returned set.
    """
    dim = dimensionality(table)
    if k > dim:
        raise KTooLarge(f"k={k} exceeds the dimensionality bound {dim}")
    mask = 0
    for m, size in zip(table.pair_masks, table.pair_sizes):
        if size == k:
            mask |= m
    return VertexSet(table.n, mask)


def adjacency_dimensionality(g: Graph) -> int:
    """Dimensionality bound at truncation level 2."""
    return dimensionality(build_table(g, 2))


def cone_dimensionality(h: Graph) -> int:
    """Dimensionality bound of K1 + H via the closed form
    min(bound(H), n - max_degree(H) + 1), without building the join."""
    if h.n < 2:
        raise TooSmall(f"closed form needs a nontrivial graph, got n={h.n}")
    return min(adjacency_dimensionality(h), h.n - h.max_degree() + 1)


def join_dimensionality(g: Graph, h: Graph) -> int:
    """Dimensionality bound of G + H via the closed form
    min(bound(G), bound(H), n1 - max_degree(G) + n2 - max_degree(H))."""
    if g.n < 2 or h.n < 2:
        raise TooSmall("closed form needs nontrivial graphs on both sides")
    cross = g.n - g.max_degree() + h.n - h.max_degree()
    return min(adjacency_dimensionality(g), adjacency_dimensionality(h), cross)
