# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel for exact minimum set multicover over 64-bit masks.

Mirrors _cover_py exactly (same results, same witness and enumeration
order); restricted to universes of at most 64 vertices.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy, memset

from .errors import BudgetExhausted

cdef extern from *:
    """
    #include <stdint.h>
    static inline int adim_popcount64(uint64_t x) { return __builtin_popcountll(x); }
    static inline int adim_ctz64(uint64_t x) { return __builtin_ctzll(x); }
    """
    int adim_popcount64(unsigned long long x) nogil
    int adim_ctz64(unsigned long long x) nogil

ctypedef unsigned long long u64

IMPLEMENTATION = "compiled"


cdef inline u64 _full_mask(int n) nogil:
    if n >= 64:
        return <u64>0xFFFFFFFFFFFFFFFFULL
    return (<u64>1 << n) - 1


cdef class _Solver:
    cdef u64* masks
    cdef signed char* res          # residual buffers, one row per level
    cdef int* scores
    cdef int P, n, k, best_size, size, emitted, limit
    cdef long long budget, nodes
    cdef u64 best_mask, forced
    cdef list out

    def __cinit__(self, list pymasks, int k, int n, long long budget):
        cdef int p
        self.P = len(pymasks)
        self.n = n
        self.k = k
        self.budget = budget
        self.nodes = 0
        self.masks = <u64*>malloc(self.P * sizeof(u64))
        self.res = <signed char*>malloc((n + 3) * self.P * sizeof(signed char))
        self.scores = <int*>malloc(n * sizeof(int))
        if not self.masks or not self.res or not self.scores:
            raise MemoryError()
        for p in range(self.P):
            self.masks[p] = <u64>pymasks[p]
        self.out = []

    def __dealloc__(self):
        free(self.masks)
        free(self.res)
        free(self.scores)

    cdef int _tick(self) except -1:
        self.nodes += 1
        if self.budget >= 0 and self.nodes > self.budget:
            raise BudgetExhausted(f"node budget {self.budget} exhausted")
        return 0

    cdef void _fill_residual(self, int level, u64 chosen) nogil:
        cdef int p, r
        cdef signed char* row = self.res + level * self.P
        for p in range(self.P):
            r = self.k - adim_popcount64(chosen & self.masks[p])
            row[p] = r if r > 0 else 0

    cdef int _packing_bound(self, signed char* res, u64 avail) nogil:
        cdef int p, lb = 0
        cdef u64 used = 0, am
        for p in range(self.P):
            if res[p] > 0:
                am = self.masks[p] & avail
                if am & used == 0:
                    lb += res[p]
                    used |= am
        return lb

    cdef int _branch_bound(self, int level, u64 chosen, int count, u64 avail) except -1:
        cdef signed char* res = self.res + level * self.P
        cdef signed char* child = res + self.P
        cdef int p, r, cov, add, worst_slack, bpair, covered, v, best_score, sc
        cdef u64 must, am, used, candidates, bit, cm
        cdef int lb
        self._tick()
        while True:
            if count >= self.best_size:
                return 0
            must = 0
            covered = 1
            worst_slack = 1 << 30
            bpair = -1
            for p in range(self.P):
                r = res[p]
                if r > 0:
                    covered = 0
                    cov = adim_popcount64(self.masks[p] & avail)
                    if cov < r:
                        return 0
                    if cov == r:
                        must |= self.masks[p] & avail
                    elif cov - r < worst_slack:
                        worst_slack = cov - r
                        bpair = p
            if covered:
                self.best_size = count
                self.best_mask = chosen
                return 0
            if must:
                add = adim_popcount64(must)
                if count + add >= self.best_size:
                    return 0
                chosen |= must
                avail &= ~must
                count += add
                for p in range(self.P):
                    if res[p] > 0:
                        r = res[p] - adim_popcount64(self.masks[p] & must)
                        res[p] = r if r > 0 else 0
                continue
            break
        lb = 0
        used = 0
        for p in range(self.P):
            if res[p] > 0:
                am = self.masks[p] & avail
                if am & used == 0:
                    lb += res[p]
                    used |= am
        if count + lb >= self.best_size:
            return 0
        if bpair < 0:
            return 0
        candidates = self.masks[bpair] & avail
        cm = candidates
        while cm:
            self.scores[adim_ctz64(cm)] = 0
            cm &= cm - 1
        for p in range(self.P):
            if res[p] > 0:
                cm = self.masks[p] & candidates
                while cm:
                    self.scores[adim_ctz64(cm)] += 1
                    cm &= cm - 1
        v = -1
        best_score = -1
        cm = candidates
        while cm:
            p = adim_ctz64(cm)
            sc = self.scores[p]
            if sc > best_score:
                best_score = sc
                v = p
            cm &= cm - 1
        bit = <u64>1 << v
        memcpy(child, res, self.P)
        for p in range(self.P):
            if child[p] > 0 and (self.masks[p] >> v) & 1:
                child[p] -= 1
        self._branch_bound(level + 1, chosen | bit, count + 1, avail & ~bit)
        memcpy(child, res, self.P)
        self._branch_bound(level + 1, chosen, count, avail & ~bit)
        return 0

    cdef int _lex(self, int level, int v, u64 chosen, int count) except -1:
        cdef signed char* res = self.res + level * self.P
        cdef signed char* child = res + self.P
        cdef int p, r, cov, worst, lb
        cdef u64 avail, bit
        self._tick()
        if count > self.size or count + (self.n - v) < self.size:
            return 0
        if v >= 64:
            avail = 0
        else:
            avail = _full_mask(self.n) & (<u64>0xFFFFFFFFFFFFFFFFULL << v)
        worst = 0
        for p in range(self.P):
            r = res[p]
            if r > 0:
                cov = adim_popcount64(self.masks[p] & avail)
                if cov < r:
                    return 0
                if r > worst:
                    worst = r
        if count + self._packing_bound(res, avail) > self.size:
            return 0
        if worst == 0 and count == self.size:
            self.out.append(chosen)
            self.emitted += 1
            return 1 if self.emitted >= self.limit else 0
        if v == self.n:
            return 0
        bit = <u64>1 << v
        memcpy(child, res, self.P)
        for p in range(self.P):
            if child[p] > 0 and (self.masks[p] >> v) & 1:
                child[p] -= 1
        if self._lex(level + 1, v + 1, chosen | bit, count + 1):
            return 1
        if (self.forced >> v) & 1:
            return 0
        memcpy(child, res, self.P)
        return self._lex(level + 1, v + 1, chosen, count)

    cdef run_solve(self, u64 forced, u64 incumbent):
        self.best_size = adim_popcount64(incumbent)
        self.best_mask = incumbent
        self._fill_residual(0, forced)
        self._branch_bound(0, forced, adim_popcount64(forced),
                           _full_mask(self.n) & ~forced)
        return self.best_size

    cdef run_lex(self, int size, u64 forced, int limit):
        self.size = size
        self.forced = forced
        self.limit = limit
        self.emitted = 0
        self.out = []
        self._fill_residual(0, 0)
        self._lex(0, 0, 0, 0)
        return self.out


def greedy_cover(list masks, int k, int n, seed=0):
    """Greedy max-coverage cover grown from ``seed``; ties to low index."""
    cdef u64 chosen = <u64>seed
    cdef u64 m, cm
    cdef int P = len(masks)
    cdef int p, v, best_v, best_sc, deficient
    cdef u64* cmasks = <u64*>malloc(P * sizeof(u64))
    cdef signed char* res = <signed char*>malloc(P)
    cdef int* scores = <int*>malloc(n * sizeof(int))
    if not cmasks or not res or not scores:
        free(cmasks); free(res); free(scores)
        raise MemoryError()
    try:
        for p in range(P):
            cmasks[p] = <u64>masks[p]
            v = k - adim_popcount64(chosen & cmasks[p])
            res[p] = v if v > 0 else 0
        while True:
            memset(scores, 0, n * sizeof(int))
            deficient = 0
            for p in range(P):
                if res[p] > 0:
                    deficient = 1
                    cm = cmasks[p] & ~chosen
                    while cm:
                        scores[adim_ctz64(cm)] += 1
                        cm &= cm - 1
            if not deficient:
                return int(chosen)
            best_v = 0
            best_sc = -1
            for v in range(n):
                if scores[v] > best_sc:
                    best_sc = scores[v]
                    best_v = v
            if best_sc == 0:
                raise ValueError("infeasible cover instance: some mask has < k bits")
            chosen |= <u64>1 << best_v
            for p in range(P):
                if res[p] > 0 and (cmasks[p] >> best_v) & 1:
                    res[p] -= 1
    finally:
        free(cmasks); free(res); free(scores)


def solve_min_multicover(list masks, int k, int n, forced=0, budget=None):
    """Exact minimum multicover; see the pure-Python twin for semantics."""
    if not masks:
        return 0, 0, 0
    cdef long long cbudget = -1 if budget is None else <long long>budget
    cdef u64 cforced = <u64>forced
    solver = _Solver(masks, k, n, cbudget)
    incumbent = greedy_cover(masks, k, n, forced)
    size = solver.run_solve(cforced, <u64>incumbent)
    witnesses = solver.run_lex(size, cforced, 1)
    return size, int(witnesses[0]), int(solver.nodes)


def enumerate_min_covers(list masks, int k, int n, int size, forced=0,
                         limit=None, budget=None):
    """All covers of exactly (minimum) ``size`` in lexicographic order."""
    if not masks:
        return ([0] if size == 0 else []), 0, False
    cdef long long cbudget = -1 if budget is None else <long long>budget
    cdef int cap = (1 << 30) if limit is None else <int>limit
    solver = _Solver(masks, k, n, cbudget)
    covers = solver.run_lex(size, <u64>forced, cap)
    return [int(c) for c in covers], int(solver.nodes), len(covers) >= cap


def cover_ladder(list masks, int n):
    """Minimum cover size for every level k = 1..C (index k-1)."""
    if not masks:
        return []
    cdef int P = len(masks)
    cdef u64* cmasks = <u64*>malloc(P * sizeof(u64))
    cdef int* best = <int*>malloc((n + 2) * sizeof(int))
    if not cmasks or not best:
        free(cmasks); free(best)
        raise MemoryError()
    cdef int p, top, lvl, c, sz
    cdef u64 smask, full
    try:
        top = 1 << 30
        for p in range(P):
            cmasks[p] = <u64>masks[p]
            c = adim_popcount64(cmasks[p])
            if c < top:
                top = c
        for p in range(top + 1):
            best[p] = 0
        # numeric subset order, so every entry must keep taking improvements
        full = _full_mask(n)
        smask = 1
        while smask <= full:
            lvl = top
            for p in range(P):
                c = adim_popcount64(smask & cmasks[p])
                if c < lvl:
                    lvl = c
                    if lvl == 0:
                        break
            if lvl > 0:
                sz = adim_popcount64(smask)
                while lvl >= 1 and (best[lvl] == 0 or sz < best[lvl]):
                    best[lvl] = sz
                    lvl -= 1
            smask += 1
        return [best[p] for p in range(1, top + 1)]
    finally:
        free(cmasks)
        free(best)
