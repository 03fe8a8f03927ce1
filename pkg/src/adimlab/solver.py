"""Exact k-generator solvers: branch and bound, brute force, enumeration.

solve_adim works at truncation level 2 (the adjacency metric), solve_dim at
level t = diameter (the full shortest-path metric, connected graphs only).
Both reduce to exact set multicover over the distinguish table and emit the
lexicographically smallest optimal witness.
"""

from __future__ import annotations

import math
import os
import time
from dataclasses import dataclass, field
from itertools import combinations

from . import kernel
from .bitset import VertexSet
from .errors import (
    BasisCountExceeded,
    CapExceeded,
    Disconnected,
    KExceedsDimensionality,
    TooSmall,
)
from .graph import Graph, diameter, is_connected
from .metric import DistinguishTable, build_table, dimensionality, forced_set

BUDGET_ENV = "ADIMLAB_BUDGET"

BRUTE_FORCE_MAX_N = 14
BRUTE_FORCE_MAX_EVALS = 5_000_000


def default_budget() -> int | None:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else None


@dataclass(frozen=True)
class SolveStats:
    nodes: int = 0
    forced_size: int = 0
    greedy_size: int = 0
    millis: float = 0.0


@dataclass(frozen=True)
class SolveResult:
    k: int
    dimension: int
    witness: VertexSet
    all_bases: tuple[VertexSet, ...] | None = None
    unique: bool | None = None
    stats: SolveStats = field(default_factory=SolveStats)

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "dimension": self.dimension,
            "witness": self.witness.to_list(),
            "unique": self.unique,
            "nodes": self.stats.nodes,
            "millis": round(self.stats.millis, 3),
        }


def is_k_generator(table: DistinguishTable, k: int, s: VertexSet) -> bool:
    """True iff s hits every pair's distinguishing set at least k times."""
    smask = s.mask
    return all((smask & m).bit_count() >= k for m in table.pair_masks)


def greedy_bound(table: DistinguishTable, k: int) -> VertexSet:
    """Valid k-generator from the max-coverage greedy heuristic."""
    _check_k(table, k)
    mask = kernel.greedy_cover(table.pair_masks, k, table.n)
    return VertexSet(table.n, mask)


def _check_k(table: DistinguishTable, k: int) -> int:
    if table.n < 2:
        raise TooSmall(f"need at least 2 vertices, got {table.n}")
    if k < 1:
        raise KExceedsDimensionality(f"k must be >= 1, got {k}")
    dim = dimensionality(table)
    if k > dim:
        raise KExceedsDimensionality(
            f"no {k}-generator exists: the dimensionality bound is {dim}"
        )
    return dim


def solve_table(
    table: DistinguishTable, k: int, budget: int | None = None
) -> SolveResult:
    """Exact minimum k-generator for an arbitrary distinguish table."""
    _check_k(table, k)
    if budget is None:
        budget = default_budget()
    start = time.perf_counter()
    forced = forced_set(table, k).mask
    size, witness, nodes = kernel.solve_min_multicover(
        table.pair_masks, k, table.n, forced, budget
    )
    greedy = kernel.greedy_cover(table.pair_masks, k, table.n, forced)
    millis = (time.perf_counter() - start) * 1000.0
    stats = SolveStats(
        nodes=nodes,
        forced_size=forced.bit_count(),
        greedy_size=greedy.bit_count(),
        millis=millis,
    )
    return SolveResult(k, size, VertexSet(table.n, witness), stats=stats)


def solve_adim(g: Graph, k: int, budget: int | None = None) -> SolveResult:
    """Exact k-adjacency dimension (truncation level 2)."""
    return solve_table(build_table(g, 2), k, budget)


def solve_dim(g: Graph, k: int, budget: int | None = None) -> SolveResult:
    """Exact k-metric dimension via the level t = diameter table."""
    if not is_connected(g):
        raise Disconnected("the full shortest-path metric needs a connected graph")
    if g.n < 2:
        raise TooSmall(f"need at least 2 vertices, got {g.n}")
    return solve_table(build_table(g, max(1, int(diameter(g)))), k, budget)


def enumerate_bases(
    g: Graph,
    k: int,
    limit: int | None = None,
    budget: int | None = None,
    t: int = 2,
) -> list[VertexSet]:
    """All minimum k-generators in ascending lexicographic order."""
    table = build_table(g, t)
    result = solve_table(table, k, budget)
    forced = forced_set(table, k).mask
    covers, _, truncated = kernel.enumerate_min_covers(
        table.pair_masks, k, table.n, result.dimension, forced, limit, budget
    )
    if truncated and limit is not None:
        raise BasisCountExceeded(
            f"more than {limit} minimum {k}-generators; raise the limit"
        )
    return [VertexSet(table.n, m) for m in covers]


def solve_adim_full(g: Graph, k: int, budget: int | None = None) -> SolveResult:
    """solve_adim plus the complete basis list and uniqueness flag."""
    bases = enumerate_bases(g, k, None, budget)
    table = build_table(g, 2)
    first = bases[0]
    return SolveResult(
        k,
        len(first),
        first,
        all_bases=tuple(bases),
        unique=len(bases) == 1,
        stats=SolveStats(forced_size=len(forced_set(table, k))),
    )


def adim_ladder(g: Graph) -> list[int]:
    """adim_k for every feasible k = 1..C as a list (index k-1).

    Uses a full subset scan for small orders, repeated solves otherwise.
    """
    table = build_table(g, 2)
    return _ladder(table)


def dim_ladder(g: Graph) -> list[int]:
    """dim_k for every feasible k at level t = diameter (connected only)."""
    if not is_connected(g):
        raise Disconnected("the full shortest-path metric needs a connected graph")
    return _ladder(build_table(g, max(1, int(diameter(g)))))


_LADDER_SCAN_MAX_N = 13


def _ladder(table: DistinguishTable) -> list[int]:
    if table.n < 2:
        raise TooSmall(f"need at least 2 vertices, got {table.n}")
    if table.n <= _LADDER_SCAN_MAX_N:
        return kernel.cover_ladder(table.pair_masks, table.n)
    top = dimensionality(table)
    return [solve_table(table, k).dimension for k in range(1, top + 1)]


def brute_force_adim(
    g: Graph, k: int, size_cap: int | None = None, t: int = 2
) -> SolveResult:
    """Independent oracle: try subsets in increasing size, lexicographic
    within each size, and return the first valid k-generator."""
    table = build_table(g, t)
    _check_k(table, k)
    n = g.n
    cap = size_cap if size_cap is not None else n
    masks = table.pair_masks
    evals = 0
    start = time.perf_counter()
    for size in range(k, cap + 1):
        if n > BRUTE_FORCE_MAX_N and math.comb(n, size) > BRUTE_FORCE_MAX_EVALS:
            raise CapExceeded(
                f"C({n},{size}) subsets exceed the brute-force evaluation limit"
            )
        for combo in combinations(range(n), size):
            evals += 1
            if evals > BRUTE_FORCE_MAX_EVALS:
                raise CapExceeded(
                    f"brute force exceeded {BRUTE_FORCE_MAX_EVALS} evaluations"
                )
            smask = 0
            for v in combo:
                smask |= 1 << v
            if all((smask & m).bit_count() >= k for m in masks):
                millis = (time.perf_counter() - start) * 1000.0
                return SolveResult(
                    k,
                    size,
                    VertexSet(n, smask),
                    stats=SolveStats(nodes=evals, millis=millis),
                )
    raise CapExceeded(f"no {k}-generator within size cap {cap}")
