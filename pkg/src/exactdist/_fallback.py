"""Pure-Python versions of the compiled kernels in ``_kernels.pyx``.

The search below is a line-for-line twin of the Cython one; keep them in step.
"""

import sys

import numpy as np


def bfs_all_pairs(indptr, indices, n):
    # frontier expansion for all sources at once; one matmul per BFS level
    out = np.full((n, n), -1, dtype=np.int32)
    if n == 0:
        return out
    adj = np.zeros((n, n), dtype=np.float32)
    rows = np.repeat(np.arange(n), np.diff(indptr))
    adj[rows, indices] = 1.0
    reached = np.eye(n, dtype=bool)
    frontier = reached.copy()
    np.fill_diagonal(out, 0)
    d = 0
    while frontier.any():
        d += 1
        nxt = (frontier.astype(np.float32) @ adj > 0) & ~reached
        out[nxt] = d
        reached |= nxt
        frontier = nxt
    return out


class _Search:
    def __init__(self, indptr, indices, n, best, lower, budget):
        self.nbrs = [indices[indptr[v]:indptr[v + 1]].tolist() for v in range(n)]
        self.deg = [len(x) for x in self.nbrs]
        self.n = n
        self.maxc = max(best, 1)
        self.best = best
        self.lower = lower
        self.budget = budget
        self.nodes = 0
        self.aborted = False
        self.color = [-1] * n
        self.best_color = [-1] * n
        self.satdeg = [0] * n
        self.cnt = [[0] * self.maxc for _ in range(n)]

    def _assign(self, v, c):
        self.color[v] = c
        cnt, satdeg = self.cnt, self.satdeg
        for u in self.nbrs[v]:
            row = cnt[u]
            if row[c] == 0:
                satdeg[u] += 1
            row[c] += 1

    def _unassign(self, v, c):
        self.color[v] = -1
        cnt, satdeg = self.cnt, self.satdeg
        for u in self.nbrs[v]:
            row = cnt[u]
            row[c] -= 1
            if row[c] == 0:
                satdeg[u] -= 1

    def _select(self):
        pick, bs, bd = -1, -1, -1
        color, satdeg, deg = self.color, self.satdeg, self.deg
        for v in range(self.n):
            if color[v] >= 0:
                continue
            s = satdeg[v]
            if s > bs or (s == bs and deg[v] > bd):
                pick, bs, bd = v, s, deg[v]
        return pick

    def _rec(self, ncolored, kused):
        if kused >= self.best:
            return
        self.nodes += 1
        if self.nodes > self.budget:
            self.aborted = True
            return
        if ncolored == self.n:
            self.best = kused
            self.best_color = list(self.color)
            return
        v = self._select()
        row = self.cnt[v]
        for c in range(kused):
            if row[c] == 0:
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
        for i, v in enumerate(precolor):
            self._assign(v, i)
        k = len(precolor)
        limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(limit, 4 * self.n + 1000))
        try:
            self._rec(k, k)
        finally:
            sys.setrecursionlimit(limit)
        return self.best, np.asarray(self.best_color, dtype=np.int32), self.nodes, self.aborted


def dsatur_search(indptr, indices, n, precolor, best, lower, budget):
    search = _Search(np.asarray(indptr), np.asarray(indices), n, best, lower, budget)
    return search.run(list(precolor))
