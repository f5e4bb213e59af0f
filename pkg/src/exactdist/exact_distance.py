"""The two vertex-set preserving operators: distance exactly p, and path of length p."""

from __future__ import annotations

import numpy as np

from .graph import Graph, GraphError


class BudgetExceeded(RuntimeError):
    pass


def exact_distance_graph(G: Graph, p: int) -> Graph:
    """``G^[p]``: same vertices and labels, ``uv`` an edge iff ``d_G(u, v) == p``.

    ``p == 0`` gives the edgeless graph with a loop on every vertex.
    """
    if p < 0:
        raise GraphError("p must be non-negative")
    if G.has_loops:
        raise GraphError("exact_distance_graph expects a loop-free graph")
    if p == 0:
        return Graph(np.eye(G.order, dtype=bool), True, G.labels)
    d = G.distances().entries
    return Graph(d == p, False, G.labels)


def path_power(G: Graph, p: int, budget: int = 1_000_000) -> Graph:
    """``G^{p}``: ``uv`` an edge iff some simple ``u,v``-path has exactly ``p`` edges.

    p = 1 and p = 2 are closed-form; larger p runs a depth-first enumeration of
    simple paths that raises ``BudgetExceeded`` past ``budget`` steps.
    """
    if p < 1:
        raise GraphError("path_power needs p >= 1")
    if G.has_loops:
        raise GraphError("path_power expects a loop-free graph")
    A = G.adjacency
    n = G.order
    if p == 1:
        return Graph(A, False, G.labels)
    if p == 2:
        common = (A.astype(np.int64) @ A.astype(np.int64)) > 0
        np.fill_diagonal(common, False)
        return Graph(common, False, G.labels)
    nbrs = [G.neighbors(v).tolist() for v in range(n)]
    out = np.zeros((n, n), dtype=bool)
    steps = 0
    for s in range(n):
        on_path = [False] * n
        on_path[s] = True
        stack = [(s, iter(nbrs[s]))]
        while stack:
            u, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                stack.pop()
                on_path[u] = False
                continue
            steps += 1
            if steps > budget:
                raise BudgetExceeded(f"path_power(p={p}) exceeded {budget} steps")
            if on_path[nxt]:
                continue
            if len(stack) == p:
                out[s, nxt] = True
                continue
            on_path[nxt] = True
            stack.append((nxt, iter(nbrs[nxt])))
        on_path[s] = False
    return Graph(out | out.T, False, G.labels)
