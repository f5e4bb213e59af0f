# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled hot loops: all-pairs BFS and the exact DSATUR colouring search.

Both functions mirror ``_fallback`` line for line, so the two backends return
identical results (including node counts).
"""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def bfs_all_pairs(const int[::1] indptr, const int[::1] indices, int n):
    out = np.full((n, n), -1, dtype=np.int32)
    cdef int[:, ::1] D = out
    cdef int[::1] queue = np.empty(max(n, 1), dtype=np.int32)
    cdef int s, head, tail, u, v, k, du
    for s in range(n):
        D[s, s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            du = D[s, u] + 1
            for k in range(indptr[u], indptr[u + 1]):
                v = indices[k]
                if D[s, v] < 0:
                    D[s, v] = du
                    queue[tail] = v
                    tail += 1
    return out


cdef class _Search:
    cdef int n, maxc, best, lower
    cdef long long nodes, budget
    cdef bint aborted
    cdef const int[::1] indptr
    cdef const int[::1] indices
    cdef int[::1] color, satdeg, deg, best_color, cnt

    def __init__(self, indptr, indices, int n, int best, int lower, long long budget):
        self.indptr = indptr
        self.indices = indices
        self.n = n
        self.maxc = max(best, 1)
        self.best = best
        self.lower = lower
        self.budget = budget
        self.nodes = 0
        self.aborted = False
        self.color = np.full(max(n, 1), -1, dtype=np.int32)
        self.best_color = np.full(max(n, 1), -1, dtype=np.int32)
        self.satdeg = np.zeros(max(n, 1), dtype=np.int32)
        self.cnt = np.zeros(max(n, 1) * self.maxc, dtype=np.int32)
        self.deg = np.diff(np.asarray(indptr)).astype(np.int32) if n else np.zeros(1, dtype=np.int32)

    cdef inline void _assign(self, int v, int c):
        cdef int k, u
        self.color[v] = c
        for k in range(self.indptr[v], self.indptr[v + 1]):
            u = self.indices[k]
            if self.cnt[u * self.maxc + c] == 0:
                self.satdeg[u] += 1
            self.cnt[u * self.maxc + c] += 1

    cdef inline void _unassign(self, int v, int c):
        cdef int k, u
        self.color[v] = -1
        for k in range(self.indptr[v], self.indptr[v + 1]):
            u = self.indices[k]
            self.cnt[u * self.maxc + c] -= 1
            if self.cnt[u * self.maxc + c] == 0:
                self.satdeg[u] -= 1

    cdef int _select(self):
        cdef int v, pick = -1, bs = -1, bd = -1
        for v in range(self.n):
            if self.color[v] >= 0:
                continue
            if self.satdeg[v] > bs or (self.satdeg[v] == bs and self.deg[v] > bd):
                pick = v
                bs = self.satdeg[v]
                bd = self.deg[v]
        return pick

    cdef void _rec(self, int ncolored, int kused):
        cdef int v, c, i
        if kused >= self.best:
            return
        self.nodes += 1
        if self.nodes > self.budget:
            self.aborted = True
            return
        if ncolored == self.n:
            self.best = kused
            for i in range(self.n):
                self.best_color[i] = self.color[i]
            return
        v = self._select()
        for c in range(kused):
            if self.cnt[v * self.maxc + c] == 0:
                self._assign(v, c)
                self._rec(ncolored + 1, kused)
                self._unassign(v, c)
                if self.aborted or self.best <= self.lower or kused >= self.best:
                    return
        if kused + 1 < self.best:
            self._assign(v, kused)
            self._rec(ncolored + 1, kused + 1)
            self._unassign(v, kused)

    def run(self, precolor):
        cdef int i, k = 0
        for i, v in enumerate(precolor):
            self._assign(v, i)
            k += 1
        self._rec(k, k)
        return self.best, np.asarray(self.best_color)[: self.n].copy(), self.nodes, self.aborted


def dsatur_search(indptr, indices, int n, precolor, int best, int lower, long long budget):
    search = _Search(indptr, indices, n, best, lower, budget)
    return search.run(list(precolor))
