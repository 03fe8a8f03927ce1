#!/usr/bin/env python3
"""Benchmark the compiled multicover kernel against the pure-Python fallback.

Run from the repository root:

    python3 benchmarks/bench_kernel.py

Workloads cover the three kernel entry points that dominate library runtime:
single exact solves on the bundled fixtures, minimum-generator enumeration,
and the full-ladder subset scan used by the corpus sweeps.
"""

from __future__ import annotations

import time

from adimlab import _cover_py, kernel
from adimlab.graph import (
    cycle,
    fig2_graph,
    fig4_graph,
    fig5_graph,
    from_pair_mask,
    join,
    complete,
    petersen,
)
from adimlab.metric import build_table


def _impls():
    impls = [("python", _cover_py)]
    if kernel.HAVE_COMPILED:
        from adimlab import _coverc

        impls.append(("compiled", _coverc))
    return impls


def _time(fn, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench_solves():
    cases = [
        ("petersen k=3", petersen(), 3),
        ("petersen k=5", petersen(), 5),
        ("C14 k=2", cycle(14), 2),
        ("fig4 k=3", fig4_graph(), 3),
        ("fig5 cone k=3", join(complete(1), fig5_graph()), 3),
        ("fig2 k=1", fig2_graph(), 1),
        ("fig2 k=2", fig2_graph(), 2),
        ("fig2 k=3", fig2_graph(), 3),
    ]
    print(f"{'solve':<16} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for label, g, k in cases:
        table = build_table(g, 2)
        masks = list(table.pair_masks)
        times = {}
        answers = {}
        for name, impl in _impls():
            times[name], answers[name] = _time(
                lambda impl=impl: impl.solve_min_multicover(masks, k, g.n, 0, None)
            )
        _report(label, times, answers)


def bench_enumeration():
    cases = [("fig4 bases k=3", fig4_graph(), 3), ("fig2 bases k=3", fig2_graph(), 3)]
    print(f"\n{'enumerate':<16} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for label, g, k in cases:
        table = build_table(g, 2)
        masks = list(table.pair_masks)
        size = _cover_py.solve_min_multicover(masks, k, g.n, 0, None)[0]
        times = {}
        answers = {}
        for name, impl in _impls():
            times[name], answers[name] = _time(
                lambda impl=impl: impl.enumerate_min_covers(
                    masks, k, g.n, size, 0, None, None
                )[0]
            )
        _report(label, times, answers)


def bench_ladder_sweep(n=6, sample=4096):
    print(f"\n{'ladder sweep':<16} {'python':>10} {'compiled':>10} {'speedup':>8}")
    instances = []
    for mask in range(sample):
        g = from_pair_mask(n, mask * ((1 << (n * (n - 1) // 2)) // sample))
        instances.append((list(build_table(g, 2).pair_masks), g.n))
    times = {}
    answers = {}
    for name, impl in _impls():
        times[name], answers[name] = _time(
            lambda impl=impl: [impl.cover_ladder(m, nn) for m, nn in instances],
            repeat=1,
        )
    _report(f"{sample} graphs n={n}", times, answers)


def _report(label, times, answers):
    if len(answers) == 2 and answers["python"] != answers["compiled"]:
        raise SystemExit(f"MISMATCH in {label}: kernels disagree")
    py = times["python"]
    if "compiled" in times:
        cy = times["compiled"]
        print(f"{label:<16} {py * 1e3:>8.2f}ms {cy * 1e3:>8.2f}ms {py / cy:>7.1f}x")
    else:
        print(f"{label:<16} {py * 1e3:>8.2f}ms {'-':>10} {'-':>8}")


if __name__ == "__main__":
    if not kernel.HAVE_COMPILED:
        print("compiled kernel unavailable; timing the fallback only\n")
    bench_solves()
    bench_enumeration()
    bench_ladder_sweep()
