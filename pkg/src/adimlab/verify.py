"""Corpus-scale theorem sweeps and the cone conjecture engine.

A corpus is either the internal labeled enumeration (every graph on n
vertices appears exactly once, edge-mask order) or a stream of graph6
records.  Sweeps re-check one statement per graph and report violations;
a violation would be a counterexample, so reports carry full witness data
and can be streamed as NDJSON while the sweep is still running.
"""

from __future__ import annotations

import json
import time
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import NamedTuple

from .errors import TooLarge, UnknownTheorem
from .graph import (
    Graph,
    complement,
    complete,
    diameter,
    from_graph6,
    from_pair_mask,
    is_connected,
    is_tree,
    join,
    to_graph6,
)
from .metric import (
    build_table,
    cone_dimensionality,
    dimensionality,
    forced_set,
    join_dimensionality,
)
from .solver import adim_ladder, dim_ladder

ENUMERATION_MAX_N = 7


def enumerate_all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices exactly once, edge-mask order."""
    if n > ENUMERATION_MAX_N:
        raise TooLarge(
            f"labeled enumeration is capped at n <= {ENUMERATION_MAX_N}, got {n}"
        )
    if n < 0:
        raise TooLarge("n must be non-negative")
    for mask in range(1 << (n * (n - 1) // 2)):
        yield from_pair_mask(n, mask)


def _rooted_code(g: Graph, root: int, parent: int) -> str:
    subs = sorted(
        _rooted_code(g, u, root) for u in g.neighbors(root) if u != parent
    )
    return "(" + "".join(subs) + ")"


def _tree_code(g: Graph) -> str:
    """Isomorphism-invariant code: root at the center(s) found by pruning."""
    alive = set(range(g.n))
    degree = dict(enumerate(g.degrees()))
    while len(alive) > 2:
        leaves = [v for v in alive if degree[v] <= 1]
        for v in leaves:
            alive.discard(v)
            for u in g.neighbors(v):
                if u in alive:
                    degree[u] -= 1
    centers = sorted(alive)
    if len(centers) == 1:
        return _rooted_code(g, centers[0], -1)
    a, b = centers
    return "".join(sorted((_rooted_code(g, a, b), _rooted_code(g, b, a))))


def enumerate_trees(max_n: int, min_n: int = 1) -> list[Graph]:
    """One representative per isomorphism class of trees, orders min..max.

    Grown by attaching a new leaf everywhere and deduplicating on the
    canonical code; intended for small orders (the counts stay tiny).
    """
    if max_n > 16:
        raise TooLarge("tree enumeration is meant for small orders")
    levels: list[list[Graph]] = [[Graph(1, [0])]]
    for n in range(2, max_n + 1):
        seen: dict[str, Graph] = {}
        for t in levels[-1]:
            for v in range(t.n):
                rows = [r for r in t.rows] + [1 << v]
                rows[v] |= 1 << t.n
                grown = Graph(n, rows)
                seen.setdefault(_tree_code(grown), grown)
        levels.append([seen[c] for c in sorted(seen)])
    out: list[Graph] = []
    for n in range(min_n, max_n + 1):
        out.extend(levels[n - 1])
    return out


@dataclass(frozen=True)
class Corpus:
    """Graph source plus filters.

    Internal enumeration covers orders min_n..max_n; alternatively
    ``graph6_lines`` streams records from a file-like iterable.
    """

    min_n: int = 2
    max_n: int = 5
    graph6_lines: tuple[str, ...] | None = None
    connected: bool = False
    min_degree: int = 0

    def _accept(self, g: Graph) -> bool:
        if not self.min_n <= g.n <= self.max_n:
            return False
        if self.min_degree and g.min_degree() < self.min_degree:
            return False
        if self.connected and not is_connected(g):
            return False
        return True

    def __iter__(self) -> Iterator[Graph]:
        if self.graph6_lines is not None:
            for line in self.graph6_lines:
                line = line.strip()
                if not line:
                    continue
                g = from_graph6(line)
                if self._accept(g):
                    yield g
        else:
            for n in range(self.min_n, self.max_n + 1):
                for g in enumerate_all_graphs(n):
                    if self._accept(g):
                        yield g

    @classmethod
    def from_file(cls, path: str, **kw) -> "Corpus":
        with open(path, "r", encoding="ascii") as fh:
            lines = tuple(ln.strip() for ln in fh if ln.strip())
        return cls(graph6_lines=lines, **kw)


class Violation(NamedTuple):
    graph6: str
    k: int
    observed: object
    expected: object

    def to_json_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "k": self.k,
            "observed": self.observed,
            "expected": self.expected,
        }


@dataclass
class SweepReport:
    theorem: str
    checked: int = 0
    violations: list[Violation] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "checked": self.checked,
            "violations": [v.to_json_dict() for v in self.violations],
            "elapsed": round(self.elapsed, 3),
        }

    def write_ndjson(self, fh) -> None:
        for v in self.violations:
            fh.write(json.dumps(v.to_json_dict()) + "\n")


# -- per-graph checkers ------------------------------------------------------
# Each checker returns (k, observed, expected) triples; empty means pass.

Check = Callable[[Graph], list[tuple[int, object, object]]]


def _check_monotony(g: Graph) -> list:
    if g.n < 2:
        return []
    ladder = adim_ladder(g)
    return [
        (k + 1, ladder[k], f"> {ladder[k - 1]}")
        for k in range(1, len(ladder))
        if ladder[k] <= ladder[k - 1]
    ]


def _check_k_plus_2(g: Graph) -> list:
    if g.n < 7:
        return []
    ladder = adim_ladder(g)
    return [
        (k, ladder[k - 1], f">= {k + 2}")
        for k in range(1, len(ladder) + 1)
        if ladder[k - 1] < k + 2
    ]


def _check_adim1_ge_3(g: Graph) -> list:
    if g.n < 7:
        return []
    first = adim_ladder(g)[0]
    return [] if first >= 3 else [(1, first, ">= 3")]


def _check_complement(g: Graph) -> list:
    if g.n < 2:
        return []
    mine = adim_ladder(g)
    other = adim_ladder(complement(g))
    if mine == other:
        return []
    return [
        (k, a, b)
        for k, (a, b) in enumerate(zip(mine, other), start=1)
        if a != b
    ] or [(0, len(mine), len(other))]


def _check_dim_le_adim(g: Graph) -> list:
    if g.n < 2 or not is_connected(g):
        return []
    adim = adim_ladder(g)
    dim = dim_ladder(g)
    flat = diameter(g) <= 2
    out = []
    for k in range(1, len(adim) + 1):
        d, a = dim[k - 1], adim[k - 1]
        if d > a:
            out.append((k, d, f"<= {a}"))
        elif flat and d != a:
            out.append((k, d, f"== {a} (diameter <= 2)"))
    return out


def _check_kdim_vs_kadj(g: Graph) -> list:
    if g.n < 2 or not is_connected(g):
        return []
    k_adj = dimensionality(build_table(g, 2))
    k_met = dimensionality(build_table(g, max(1, int(diameter(g)))))
    if k_adj > k_met:
        return [(0, k_adj, f"<= {k_met}")]
    if diameter(g) <= 2 and k_adj != k_met:
        return [(0, k_adj, f"== {k_met} (diameter <= 2)")]
    return []


def _check_cone_lower(g: Graph) -> list:
    if g.n < 2:
        return []
    lh = adim_ladder(g)
    lc = adim_ladder(join(complete(1), g))
    return [
        (k, lc[k - 1], f">= {lh[k - 1]}")
        for k in range(1, len(lc) + 1)
        if lc[k - 1] < lh[k - 1]
    ]


def _is_path_graph(g: Graph) -> bool:
    return is_tree(g) and g.max_degree() <= 2


def _is_cycle_graph(g: Graph) -> bool:
    return (
        g.n >= 3
        and is_connected(g)
        and all(d == 2 for d in g.degrees())
    )


def _check_adim3_eq_4(g: Graph) -> list:
    if g.n < 4:
        return []
    ladder = adim_ladder(g)
    observed = len(ladder) >= 3 and ladder[2] == 4
    expected = (g.n == 4 and _is_path_graph(g)) or (g.n == 5 and _is_cycle_graph(g))
    if observed != expected:
        return [(3, observed, expected)]
    return []


def _check_adim4_eq_5(g: Graph) -> list:
    if g.n < 5:
        return []
    ladder = adim_ladder(g)
    observed = len(ladder) >= 4 and ladder[3] == 5
    expected = g.n == 5 and _is_cycle_graph(g)
    if observed != expected:
        return [(4, observed, expected)]
    return []


def _spider_legs(g: Graph) -> list[int] | None:
    """Leg lengths when the tree has exactly one vertex of degree >= 3."""
    centers = [v for v in range(g.n) if g.degree(v) >= 3]
    if len(centers) != 1:
        return None
    c = centers[0]
    legs = []
    for first in g.neighbors(c):
        length = 1
        prev, cur = c, first
        while g.degree(cur) == 2:
            nxt = next(u for u in g.neighbors(cur) if u != prev)
            prev, cur = cur, nxt
            length += 1
        if g.degree(cur) != 1:
            return None
        legs.append(length)
    return sorted(legs)


def _in_family_f1(t: Graph) -> bool:
    if _is_path_graph(t):
        return t.n in (2, 3, 6)
    legs = _spider_legs(t)
    if legs is None:
        return False
    if len(legs) >= 3 and all(l == 1 for l in legs):
        return True  # star
    return legs == [1, 2, 2]


def _in_family_f2(t: Graph) -> bool:
    if _is_path_graph(t):
        return 2 <= t.n <= 5
    legs = _spider_legs(t)
    if legs is None:
        return False
    if all(l == 1 for l in legs):
        return len(legs) >= 3  # star
    return len(legs) >= 3 and legs[-1] == 3 and all(l == 1 for l in legs[:-1])


def _in_family_f3(t: Graph) -> bool:
    # P5 drops out: both the path and the fan have value 5 at level 3,
    # so the cone equality holds there (confirmed by brute force)
    return _is_path_graph(t) and t.n == 4


_K1T_FAMILIES = {1: _in_family_f1, 2: _in_family_f2, 3: _in_family_f3}


def _check_k1t_trees(g: Graph) -> list:
    if g.n < 2 or not is_tree(g):
        return []
    lt = adim_ladder(g)
    lc = adim_ladder(join(complete(1), g))
    out = []
    for k in (1, 2, 3):
        if k > len(lc):
            continue
        equal = lc[k - 1] == lt[k - 1]
        excluded = _K1T_FAMILIES[k](g)
        if equal != (not excluded):
            out.append((k, f"equal={equal}", f"member-of-family={excluded}"))
    return out


def _check_full_dimension(g: Graph) -> list:
    if g.n < 2:
        return []
    table = build_table(g, 2)
    ladder = adim_ladder(g)
    out = []
    for k in range(1, len(ladder) + 1):
        forced_full = len(forced_set(table, k)) == g.n
        if (ladder[k - 1] == g.n) != forced_full:
            out.append((k, ladder[k - 1], f"forced-covers-all={forced_full}"))
    return out


def _check_cone_dimensionality(g: Graph) -> list:
    if g.n < 2:
        return []
    closed = cone_dimensionality(g)
    direct = dimensionality(build_table(join(complete(1), g), 2))
    return [] if closed == direct else [(0, closed, direct)]


def _check_cone_isolated_dichotomy(g: Graph) -> list:
    """A strict cone increase needs H connected, or connected plus exactly
    one isolated-vertex component."""
    if g.n < 2:
        return []
    lh = adim_ladder(g)
    lc = adim_ladder(join(complete(1), g))
    if all(lc[k] == lh[k] for k in range(len(lc))):
        return []
    comps = _components(g)
    if len(comps) == 1:
        return []
    if len(comps) == 2 and min(c.bit_count() for c in comps) == 1:
        return []
    shape = sorted(c.bit_count() for c in comps)
    return [(0, f"components={shape}", "connected or one isolated vertex")]


def _components(g: Graph) -> list[int]:
    remaining = (1 << g.n) - 1
    comps = []
    while remaining:
        seed = remaining & -remaining
        seen = seed
        frontier = seed
        while frontier:
            reached = 0
            v = frontier
            while v:
                low = v & -v
                reached |= g.rows[low.bit_length() - 1]
                v ^= low
            frontier = reached & ~seen
            seen |= frontier
        comps.append(seen)
        remaining &= ~seen
    return comps


def _check_cone_conjecture_all_k(g: Graph) -> list:
    return check_cone_slack(g, range(1, 5))


def check_cone_slack(h: Graph, k_range: Iterable[int]) -> list:
    """Violations of cone(H) <= adim_k(H) + k for the feasible k in range."""
    if h.n < 2:
        return []
    lh = adim_ladder(h)
    lc = adim_ladder(join(complete(1), h))
    out = []
    for k in k_range:
        if not 1 <= k <= len(lc):
            continue
        if lc[k - 1] > lh[k - 1] + k:
            out.append((k, lc[k - 1], f"<= {lh[k - 1] + k}"))
    return out


THEOREMS: dict[str, Check] = {
    "monotony": _check_monotony,
    "k-plus-2": _check_k_plus_2,
    "adim1-ge-3": _check_adim1_ge_3,
    "complement": _check_complement,
    "dim-le-adim": _check_dim_le_adim,
    "kdim-vs-kadj": _check_kdim_vs_kadj,
    "cone-lower": _check_cone_lower,
    "cone-dimensionality": _check_cone_dimensionality,
    "cone-isolated-dichotomy": _check_cone_isolated_dichotomy,
    "full-dimension": _check_full_dimension,
    "adim3-eq-4": _check_adim3_eq_4,
    "adim4-eq-5": _check_adim4_eq_5,
    "K1T-trees": _check_k1t_trees,
    "cone-conjecture": _check_cone_conjecture_all_k,
}

# these quantify over pairs of graphs and are dispatched separately
PAIR_THEOREMS = ("join-lower", "join-dimensionality")


def _check_join_lower_pair(g: Graph, h: Graph) -> list:
    if g.n < 2 or h.n < 2:
        return []
    top = join_dimensionality(g, h)
    lg = adim_ladder(g)
    lh = adim_ladder(h)
    lj = adim_ladder(join(g, h))
    return [
        (k, lj[k - 1], f">= {lg[k - 1] + lh[k - 1]}")
        for k in range(1, top + 1)
        if lj[k - 1] < lg[k - 1] + lh[k - 1]
    ]


def _check_join_dimensionality_pair(g: Graph, h: Graph) -> list:
    if g.n < 2 or h.n < 2:
        return []
    closed = join_dimensionality(g, h)
    direct = dimensionality(build_table(join(g, h), 2))
    return [] if closed == direct else [(0, closed, direct)]


_PAIR_CHECKS = {
    "join-lower": _check_join_lower_pair,
    "join-dimensionality": _check_join_dimensionality_pair,
}


def _run_checker(
    checker: Check,
    graphs: Iterable[Graph],
    report: SweepReport,
    on_violation: Callable[[Violation], None] | None,
) -> None:
    for g in graphs:
        report.checked += 1
        triples = checker(g)
        if triples:
            g6 = to_graph6(g)
            for k, observed, expected in triples:
                v = Violation(g6, k, observed, expected)
                report.violations.append(v)
                if on_violation:
                    on_violation(v)


def _shard_args(corpus: Corpus, jobs: int) -> list[tuple]:
    shards = []
    for n in range(corpus.min_n, corpus.max_n + 1):
        total = 1 << (n * (n - 1) // 2)
        parts = min(total, max(1, jobs * 4))
        step = (total + parts - 1) // parts
        for lo in range(0, total, step):
            shards.append((n, lo, min(lo + step, total)))
    return shards


_WORKER_STATE: dict = {}


def _init_worker(theorem: str, connected: bool, min_degree: int) -> None:
    _WORKER_STATE["checker"] = THEOREMS[theorem]
    _WORKER_STATE["connected"] = connected
    _WORKER_STATE["min_degree"] = min_degree


def _run_shard(shard: tuple) -> tuple[int, list[Violation]]:
    n, lo, hi = shard
    checker = _WORKER_STATE["checker"]
    connected = _WORKER_STATE["connected"]
    min_degree = _WORKER_STATE["min_degree"]
    checked = 0
    violations: list[Violation] = []
    for mask in range(lo, hi):
        g = from_pair_mask(n, mask)
        if min_degree and g.min_degree() < min_degree:
            continue
        if connected and not is_connected(g):
            continue
        checked += 1
        for k, observed, expected in checker(g):
            violations.append(Violation(to_graph6(g), k, observed, expected))
    return checked, violations


def sweep_theorem(
    corpus: Corpus,
    theorem_id: str,
    jobs: int = 1,
    on_violation: Callable[[Violation], None] | None = None,
) -> SweepReport:
    """Run one theorem over the corpus; zero violations means it held."""
    if theorem_id in PAIR_THEOREMS:
        return _sweep_pairs(corpus, theorem_id)
    if theorem_id not in THEOREMS:
        known = sorted(THEOREMS) + list(PAIR_THEOREMS)
        raise UnknownTheorem(f"{theorem_id!r}; known ids: {', '.join(known)}")
    report = SweepReport(theorem_id)
    start = time.perf_counter()
    if jobs > 1 and corpus.graph6_lines is None:
        with Pool(
            jobs,
            initializer=_init_worker,
            initargs=(theorem_id, corpus.connected, corpus.min_degree),
        ) as pool:
            for checked, violations in pool.imap_unordered(
                _run_shard, _shard_args(corpus, jobs)
            ):
                report.checked += checked
                report.violations.extend(violations)
                if on_violation:
                    for v in violations:
                        on_violation(v)
    else:
        _run_checker(THEOREMS[theorem_id], corpus, report, on_violation)
    report.violations.sort(key=lambda v: (v.graph6, v.k))
    report.elapsed = time.perf_counter() - start
    return report


def _sweep_pairs(corpus: Corpus, theorem_id: str) -> SweepReport:
    """Pair sweeps iterate all unordered corpus pairs; kept single-process."""
    checker = _PAIR_CHECKS[theorem_id]
    report = SweepReport(theorem_id)
    start = time.perf_counter()
    graphs = list(corpus)
    for i, g in enumerate(graphs):
        for h in graphs[i:]:
            report.checked += 1
            for k, observed, expected in checker(g, h):
                report.violations.append(
                    Violation(f"{to_graph6(g)}+{to_graph6(h)}", k, observed, expected)
                )
    report.elapsed = time.perf_counter() - start
    return report


def check_cone_conjecture(
    corpus: Corpus,
    k_range: Iterable[int] = range(1, 5),
    jobs: int = 1,
    on_violation: Callable[[Violation], None] | None = None,
) -> SweepReport:
    """Re-run the cone conjecture over the corpus: for every H and feasible
    k, the cone dimension never exceeds adim_k(H) + k.  Any violation is a
    publishable counterexample, so it carries the full witness."""
    ks = tuple(k_range)
    report = SweepReport("cone-conjecture")
    start = time.perf_counter()
    if jobs > 1 and corpus.graph6_lines is None and ks == (1, 2, 3, 4):
        inner = sweep_theorem(corpus, "cone-conjecture", jobs, on_violation)
        inner.elapsed = time.perf_counter() - start
        return inner
    for h in corpus:
        report.checked += 1
        for k, observed, expected in check_cone_slack(h, ks):
            v = Violation(to_graph6(h), k, observed, expected)
            report.violations.append(v)
            if on_violation:
                on_violation(v)
    report.violations.sort(key=lambda v: (v.graph6, v.k))
    report.elapsed = time.perf_counter() - start
    return report
