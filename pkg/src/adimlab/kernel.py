"""Kernel selection: compiled extension when available, pure Python otherwise.

The compiled kernel only handles universes of at most 64 vertices; larger
instances always go through the pure-Python implementation.
"""

from __future__ import annotations

from . import _cover_py

try:
    from . import _coverc  # compiled at install time; optional

    HAVE_COMPILED = True
except ImportError:  # pragma: no cover - depends on the build environment
    _coverc = None
    HAVE_COMPILED = False

COMPILED_MAX_N = 64


def _impl(n: int):
    if HAVE_COMPILED and n <= COMPILED_MAX_N:
        return _coverc
    return _cover_py


def implementation_name(n: int = 0) -> str:
    return _impl(n).IMPLEMENTATION


def solve_min_multicover(masks, k, n, forced=0, budget=None):
    return _impl(n).solve_min_multicover(list(masks), k, n, forced, budget)


def enumerate_min_covers(masks, k, n, size, forced=0, limit=None, budget=None):
    return _impl(n).enumerate_min_covers(list(masks), k, n, size, forced, limit, budget)


def greedy_cover(masks, k, n, seed=0):
    return _impl(n).greedy_cover(list(masks), k, n, seed)


def cover_ladder(masks, n):
    return _impl(n).cover_ladder(list(masks), n)


def min_coverage(masks, smask):
    return _cover_py.min_coverage(masks, smask)
