"""Families of graphs sharing every neighborhood of a fixed generator.

Fixing a vertex set B of a graph G, the family collects every graph on the
same vertices that agrees with G on all edges incident to B; the free edges
inside V - B range over all subsets.  A minimum k-generator B of G stays a
k-generator for every member, which the verification sweep re-checks member
by member together with the rigidity corollaries.
"""

from __future__ import annotations

import time
from collections.abc import Iterator
from dataclasses import dataclass, field

from .bitset import VertexSet
from .errors import LimitRequired, OutOfRange
from .graph import Graph
from .metric import build_table
from .solver import is_k_generator, solve_adim

_NO_LIMIT_MAX_PAIRS = 40


@dataclass(frozen=True)
class FamilySpec:
    base: Graph
    basis: VertexSet
    free_vertices: VertexSet
    family_size: int


def family_spec(g: Graph, b: VertexSet) -> FamilySpec:
    if b.n != g.n:
        raise OutOfRange("basis universe does not match the graph")
    free = b.complement()
    m = len(free)
    return FamilySpec(g, b, free, 1 << (m * (m - 1) // 2))


def _free_pairs(free: VertexSet) -> list[tuple[int, int]]:
    vs = free.members()
    return [(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs))]


def _member(g: Graph, bmask: int, pairs: list[tuple[int, int]], mask: int) -> Graph:
    rows = [
        g.rows[v] if (bmask >> v) & 1 else g.rows[v] & bmask for v in range(g.n)
    ]
    for bit, (u, v) in enumerate(pairs):
        if (mask >> bit) & 1:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return Graph(g.n, rows)


def enumerate_family(
    g: Graph,
    b: VertexSet,
    limit: int | None = None,
    from_mask: int = 0,
    to_mask: int | None = None,
) -> Iterator[Graph]:
    """Yield the family members in free-edge mask order 0, 1, 2, ...

    The free pairs are numbered lexicographically by vertex index, so member
    masks are reproducible and a mask range can be verified in shards.
    """
    spec = family_spec(g, b)
    pairs = _free_pairs(spec.free_vertices)
    if len(pairs) > _NO_LIMIT_MAX_PAIRS and limit is None and to_mask is None:
        raise LimitRequired(
            f"{len(pairs)} free pairs make 2^{len(pairs)} members; pass a limit"
        )
    end = spec.family_size if to_mask is None else min(to_mask, spec.family_size)
    count = 0
    for mask in range(from_mask, end):
        if limit is not None and count >= limit:
            return
        yield _member(g, b.mask, pairs, mask)
        count += 1


@dataclass
class FamilyReport:
    k: int
    basis: VertexSet
    family_size: int
    checked: int = 0
    violations: list[tuple[int, str]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "basis": self.basis.to_list(),
            "family_size": self.family_size,
            "checked": self.checked,
            "violations": [
                {"mask": m, "reason": r} for m, r in self.violations
            ],
            "elapsed": round(self.elapsed, 3),
        }


def verify_family_theorem(
    g: Graph,
    k: int,
    limit: int | None = None,
    from_mask: int = 0,
    to_mask: int | None = None,
) -> FamilyReport:
    """Check, member by member, that a minimum k-generator of the base graph
    generates the whole family and never increases the dimension; when the
    base dimension is k+1 (order >= 4) or k+2 (order >= 7) it must also stay
    exactly there."""
    base = solve_adim(g, k)
    basis = base.witness
    spec = family_spec(g, basis)
    report = FamilyReport(k, basis, spec.family_size)
    start = time.perf_counter()
    rigid = None
    if base.dimension == k + 1 and g.n >= 4:
        rigid = k + 1
    elif base.dimension == k + 2 and g.n >= 7:
        rigid = k + 2
    for mask, member in enumerate(
        enumerate_family(g, basis, limit, from_mask, to_mask), start=from_mask
    ):
        report.checked += 1
        if not is_k_generator(build_table(member, 2), k, basis):
            report.violations.append((mask, "basis is not a generator"))
            continue
        dim = solve_adim(member, k).dimension
        if dim > base.dimension:
            report.violations.append((mask, f"dimension rose to {dim}"))
        elif rigid is not None and dim != rigid:
            report.violations.append((mask, f"dimension {dim} != rigid {rigid}"))
    report.elapsed = time.perf_counter() - start
    return report
