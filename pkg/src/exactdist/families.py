"""Labelled generators for the graph families used throughout the package.

Conventions:

* hypercube vertex ``v`` is the integer whose big-endian binary expansion is its
  bit-string label, so ``hypercube(n)`` equals ``cartesian(hypercube(n-1), K_2)``
  positionally (the new bit is appended on the right). Bit ``j`` (1-based, left
  to right) of ``v`` is ``(v >> (n - j)) & 1``.
* a ``SubsetLabel`` stores ``A`` as a mask with element ``j`` at bit ``j - 1``;
  Johnson/Kneser vertices are listed in colexicographic order, which is
  ascending mask order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from .graph import Graph, GraphError, edgeless_graph
from .products import cartesian

HYPERCUBE_MAX_DIM = 14


@dataclass(frozen=True, order=True)
class SubsetLabel:
    n: int
    mask: int

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(j + 1 for j in range(self.n) if self.mask >> j & 1)

    @property
    def size(self) -> int:
        return bin(self.mask).count("1")

    def complement(self) -> "SubsetLabel":
        return SubsetLabel(self.n, ((1 << self.n) - 1) ^ self.mask)

    def __str__(self):
        return "{" + ",".join(map(str, self.members)) + "}"

    @classmethod
    def of(cls, n: int, members) -> "SubsetLabel":
        mask = 0
        for j in members:
            if not 1 <= j <= n:
                raise GraphError(f"element {j} outside 1..{n}")
            mask |= 1 << (j - 1)
        return cls(n, mask)


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    adj = np.zeros((n, n), dtype=bool)
    i = np.arange(n - 1)
    adj[i, i + 1] = adj[i + 1, i] = True
    return Graph(adj, False, list(range(n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    adj = np.zeros((n, n), dtype=bool)
    i = np.arange(n)
    adj[i, (i + 1) % n] = adj[(i + 1) % n, i] = True
    return Graph(adj, False, list(range(n)))


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete needs n >= 1")
    adj = ~np.eye(n, dtype=bool)
    return Graph(adj, False, list(range(n)))


def edgeless(n: int) -> Graph:
    if n < 1:
        raise GraphError("edgeless needs n >= 1")
    return edgeless_graph(n, list(range(n)))


def popcount(a) -> np.ndarray:
    return np.bitwise_count(np.asarray(a, dtype=np.uint64)).astype(np.int64)


def bitstring(v: int, n: int) -> str:
    return format(v, f"0{n}b") if n else ""


def hamming_graph(n: int, distance: int) -> Graph:
    """Graph on ``{0,1}^n`` joining words at Hamming distance exactly ``distance``."""
    v = np.arange(1 << n, dtype=np.uint64)
    adj = popcount(v[:, None] ^ v[None, :]) == distance
    return Graph(adj, distance == 0, [bitstring(int(x), n) for x in v])


def hypercube(n: int, max_dim: int = HYPERCUBE_MAX_DIM) -> Graph:
    """``Q_n`` built as ``Q_{n-1} □ K_2`` and cross-checked against Hamming distance."""
    if n < 1:
        raise GraphError("hypercube needs n >= 1")
    if n > max_dim:
        raise GraphError(f"hypercube({n}) exceeds the dimension budget {max_dim}")
    k2 = Graph(np.array([[0, 1], [1, 0]], dtype=bool), False, ["0", "1"])
    Q = k2
    for _ in range(n - 1):
        Q = cartesian(Q, k2)
        Q = Q.relabel([a + b for a, b in Q.labels])
    # Hamming cross-check without materialising an all-pairs XOR table
    v = np.arange(1 << n)
    ok = (Q.degrees() == n).all() and all(Q.adjacency[v, v ^ (1 << b)].all() for b in range(n))
    if not ok:
        raise AssertionError("recursive hypercube disagrees with Hamming construction")
    return Q


def subsets(n: int, k: int) -> list[int]:
    """Masks of the ``k``-subsets of ``{1..n}`` in colexicographic order."""
    return sorted(sum(1 << j for j in c) for c in combinations(range(n), k))


def _check_params(n, k, i):
    if not (0 <= i <= k <= n):
        raise GraphError(f"need 0 <= i <= k <= n, got n={n}, k={k}, i={i}")


def _intersection_sizes(n, k):
    masks = np.array(subsets(n, k), dtype=np.uint64)
    return masks, popcount(masks[:, None] & masks[None, :])


def johnson(n: int, k: int, i: int) -> Graph:
    """Generalised Johnson graph ``J(n,k,i)``: ``k``-sets meeting in exactly ``i`` points."""
    _check_params(n, k, i)
    masks, inter = _intersection_sizes(n, k)
    adj = inter == i
    np.fill_diagonal(adj, False)
    return Graph(adj, False, [SubsetLabel(n, int(m)) for m in masks])


def kneser_general(n: int, k: int, i: int) -> Graph:
    """Generalised Kneser graph ``K(n,k,i)``: ``k``-sets meeting in at most ``i`` points."""
    _check_params(n, k, i)
    masks, inter = _intersection_sizes(n, k)
    adj = inter <= i
    np.fill_diagonal(adj, False)
    return Graph(adj, False, [SubsetLabel(n, int(m)) for m in masks])


def vertex_subset(n: int, v: int) -> SubsetLabel:
    """Subset of ``{1..n}`` marked by the 1-bits of hypercube vertex ``v``."""
    mask = 0
    for j in range(1, n + 1):
        if (v >> (n - j)) & 1:
            mask |= 1 << (j - 1)
    return SubsetLabel(n, mask)


def subset_vertex(label: SubsetLabel) -> int:
    """Inverse of ``vertex_subset``."""
    n = label.n
    return sum(1 << (n - j) for j in label.members)


def hypercube_level(n: int, j: int) -> list[int]:
    """Indices of the weight-``j`` vertices of ``hypercube(n)``, ascending."""
    if not 0 <= j <= n:
        raise GraphError(f"level {j} outside 0..{n}")
    v = np.arange(1 << n, dtype=np.uint64)
    return np.flatnonzero(popcount(v) == j).tolist()


def weights(n: int) -> np.ndarray:
    return popcount(np.arange(1 << n, dtype=np.uint64))


def level_sizes(n: int) -> list[int]:
    return [comb(n, j) for j in range(n + 1)]


def level_adjacent(n: int, t: int, i: int, j: int) -> bool:
    """Whether some vertex of level ``i`` and some of level ``j`` are at Hamming distance ``t``.

    Words of weights ``i`` and ``j`` sharing ``c`` ones are at distance
    ``i + j - 2c``, and ``c`` ranges over ``max(0, i + j - n) .. min(i, j)``.
    Within one level the two words must also differ, so ``t > 0``.
    """
    if (i + j - t) % 2:
        return False
    c = (i + j - t) // 2
    if not max(0, i + j - n) <= c <= min(i, j):
        return False
    return i != j or t > 0
