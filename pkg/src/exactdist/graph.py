"""Dense graph representation and the basic metric machinery.

Vertices are the integers ``0..n-1``. Semantic labels (bit strings, subsets,
pairs from products) ride along in ``Graph.labels`` so that constructions can
be compared positionally.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

import numpy as np

from . import kernels

UNREACHABLE = -1


class GraphError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Graph:
    adjacency: np.ndarray
    loops_allowed: bool = False
    labels: tuple | None = None
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        adj = np.array(self.adjacency, dtype=bool, copy=True)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise GraphError("adjacency must be a square matrix")
        if not np.array_equal(adj, adj.T):
            raise GraphError("adjacency must be symmetric")
        if not self.loops_allowed and adj.diagonal().any():
            raise GraphError("loop present but loops_allowed is false")
        adj.flags.writeable = False
        object.__setattr__(self, "adjacency", adj)
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != adj.shape[0]:
                raise GraphError("labels length does not match order")
            if len(set(labels)) != len(labels):
                raise GraphError("labels must be pairwise distinct")
            object.__setattr__(self, "labels", labels)

    @property
    def order(self) -> int:
        return self.adjacency.shape[0]

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"Graph(order={self.order}, edges={self.num_edges}, loops={self.has_loops})"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        if self.order != other.order or not np.array_equal(self.adjacency, other.adjacency):
            return False
        if self.labels is not None and other.labels is not None:
            return self.labels == other.labels
        return True

    __hash__ = None

    @property
    def has_loops(self) -> bool:
        return bool(self.adjacency.diagonal().any())

    @property
    def num_edges(self) -> int:
        a = self.adjacency
        return int((np.count_nonzero(a) + np.count_nonzero(a.diagonal())) // 2)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u, v])

    def neighbors(self, v: int) -> np.ndarray:
        """Neighbours of ``v`` other than ``v`` itself."""
        row = self.adjacency[v].copy()
        row[v] = False
        return np.flatnonzero(row)

    def degrees(self) -> np.ndarray:
        return np.count_nonzero(self.adjacency, axis=1) - self.adjacency.diagonal()

    def edges(self) -> list[tuple[int, int]]:
        """Edge list ``(u, v)`` with ``u <= v``; loops appear as ``(v, v)``."""
        us, vs = np.nonzero(np.triu(self.adjacency))
        return list(zip(us.tolist(), vs.tolist()))

    def loopless_adjacency(self) -> np.ndarray:
        a = self.adjacency.copy()
        np.fill_diagonal(a, False)
        return a

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Loop-free CSR arrays ``(indptr, indices)`` as int32, cached."""
        if "csr" not in self._cache:
            a = self.loopless_adjacency()
            rows, cols = np.nonzero(a)
            indptr = np.zeros(self.order + 1, dtype=np.int32)
            np.cumsum(np.bincount(rows, minlength=self.order), out=indptr[1:])
            self._cache["csr"] = (indptr, np.ascontiguousarray(cols, dtype=np.int32))
        return self._cache["csr"]

    def distances(self) -> "DistanceMatrix":
        if "dist" not in self._cache:
            self._cache["dist"] = all_pairs_distances(self)
        return self._cache["dist"]

    def label_of(self, v: int) -> Hashable:
        return v if self.labels is None else self.labels[v]

    def relabel(self, labels: Sequence | None) -> "Graph":
        return Graph(self.adjacency, self.loops_allowed, labels)


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs distances; ``UNREACHABLE`` (-1) marks disconnected pairs."""

    entries: np.ndarray

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    def get(self, u: int, v: int) -> int | None:
        d = int(self.entries[u, v])
        return None if d == UNREACHABLE else d

    def __getitem__(self, uv):
        return self.get(*uv)

    def __eq__(self, other):
        if not isinstance(other, DistanceMatrix):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    __hash__ = None

    def connected(self) -> bool:
        return bool((self.entries != UNREACHABLE).all())


def from_adjacency(adj, loops_allowed: bool = False, labels=None) -> Graph:
    return Graph(np.asarray(adj, dtype=bool), loops_allowed, labels)


def build_graph(n: int, edges: Iterable[tuple[int, int]], loops_allowed: bool = False,
                labels=None) -> Graph:
    if n < 0:
        raise GraphError("order must be non-negative")
    adj = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge endpoint out of range: {(u, v)}")
        if u == v and not loops_allowed:
            raise GraphError(f"loop at {u} not allowed")
        adj[u, v] = adj[v, u] = True
    return Graph(adj, loops_allowed, labels)


def edgeless_graph(n: int, labels=None) -> Graph:
    return Graph(np.zeros((n, n), dtype=bool), False, labels)


def all_pairs_distances(G: Graph, backend: str | None = None) -> DistanceMatrix:
    indptr, indices = G.csr()
    k = kernels.get_backend(backend) if backend else kernels
    return DistanceMatrix(np.asarray(k.bfs_all_pairs(indptr, indices, G.order), dtype=np.int32))


@dataclass(frozen=True)
class MetricProfile:
    eccentricities: tuple  # float('inf') for vertices that cannot reach everything
    radius: float
    diameter: float


def metric_profile(G: Graph) -> MetricProfile:
    d = G.distances().entries
    if G.order == 0:
        return MetricProfile((), 0, 0)
    ecc = []
    for row in d:
        ecc.append(float("inf") if (row == UNREACHABLE).any() else int(row.max()))
    return MetricProfile(tuple(ecc), min(ecc), max(ecc))


def radius(G: Graph):
    return metric_profile(G).radius


def diameter(G: Graph):
    return metric_profile(G).diameter


def connected_components(G: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest member."""
    n = G.order
    seen = np.zeros(n, dtype=bool)
    a = G.loopless_adjacency()
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        comp = np.zeros(n, dtype=bool)
        comp[s] = True
        frontier = comp.copy()
        while frontier.any():
            nxt = a[frontier].any(axis=0) & ~comp
            comp |= nxt
            frontier = nxt
        seen |= comp
        comps.append(np.flatnonzero(comp).tolist())
    return comps


def is_connected(G: Graph) -> bool:
    return G.order > 0 and len(connected_components(G)) == 1


def is_bipartite(G: Graph) -> tuple[list[int], list[int]] | None:
    """A bipartition ``(part0, part1)`` or ``None``.

    Each component's lowest-index vertex is put in ``part0``.
    """
    if G.has_loops:
        raise GraphError("is_bipartite is undefined for graphs with loops")
    side = np.full(G.order, -1, dtype=int)
    for comp in connected_components(G):
        s = comp[0]
        side[s] = 0
        queue = [s]
        for u in queue:
            for v in G.neighbors(u):
                if side[v] < 0:
                    side[v] = 1 - side[u]
                    queue.append(int(v))
                elif side[v] == side[u]:
                    return None
    return np.flatnonzero(side == 0).tolist(), np.flatnonzero(side == 1).tolist()


def _check_aligned(G: Graph, H: Graph):
    if G.order != H.order:
        raise GraphError(f"order mismatch: {G.order} vs {H.order}")
    if G.labels is not None and H.labels is not None and G.labels != H.labels:
        raise GraphError("label mismatch")


def edge_union(G: Graph, H: Graph, *more: Graph) -> Graph:
    graphs = (G, H) + more
    adj = G.adjacency.copy()
    for X in graphs[1:]:
        _check_aligned(G, X)
        adj |= X.adjacency
    labels = next((X.labels for X in graphs if X.labels is not None), None)
    return Graph(adj, any(X.loops_allowed for X in graphs), labels)


def disjoint_copies(k: int, G: Graph) -> Graph:
    if k < 1:
        raise GraphError("need at least one copy")
    adj = np.kron(np.eye(k, dtype=bool), G.adjacency)
    labels = None
    if G.labels is not None:
        labels = [(lab, i) for i in range(k) for lab in G.labels]
    return Graph(adj, G.loops_allowed, labels)


def complement(G: Graph) -> Graph:
    if G.has_loops:
        raise GraphError("complement is undefined for graphs with loops")
    adj = ~G.adjacency
    np.fill_diagonal(adj, False)
    return Graph(adj, False, G.labels)


def induced_subgraph(G: Graph, S: Sequence[int]) -> Graph:
    S = [int(v) for v in S]
    if any(not 0 <= v < G.order for v in S):
        raise GraphError("vertex out of range")
    if len(set(S)) != len(S):
        raise GraphError("repeated vertex in subset")
    idx = np.asarray(S, dtype=int)
    adj = G.adjacency[np.ix_(idx, idx)]
    labels = None if G.labels is None else [G.labels[v] for v in S]
    return Graph(adj, G.loops_allowed, labels)


def permute(G: Graph, order: Sequence[int], labels=None) -> Graph:
    """Graph whose vertex ``i`` is ``G``'s vertex ``order[i]``."""
    idx = np.asarray(order, dtype=int)
    if sorted(idx.tolist()) != list(range(G.order)):
        raise GraphError("not a permutation")
    if labels is None and G.labels is not None:
        labels = [G.labels[v] for v in idx]
    return Graph(G.adjacency[np.ix_(idx, idx)], G.loops_allowed, labels)
