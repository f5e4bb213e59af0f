"""Isomorphism testing for small graphs by colour refinement + individualisation.

Both graphs are refined with a shared colour vocabulary (signatures are sorted
jointly), so a colour means the same thing on either side. When refinement
stalls, the smallest non-singleton cell is split by individualising its lowest
vertex in ``G`` against each candidate in ``H``. The search is deterministic and
capped by a node budget.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import UNREACHABLE, Graph

ISOMORPHIC = "isomorphic"
NOT_ISOMORPHIC = "not_isomorphic"
UNDECIDED = "undecided"


@dataclass(frozen=True)
class IsoResult:
    status: str
    mapping: tuple | None = None  # mapping[g] = h
    nodes: int = 0

    def __bool__(self):
        return self.status == ISOMORPHIC

    @property
    def decided(self) -> bool:
        return self.status != UNDECIDED


class _BudgetExceeded(Exception):
    pass


def verify_isomorphism(G: Graph, H: Graph, mapping) -> bool:
    """Replay ``mapping`` and compare edge sets exactly (loops included)."""
    if G.order != H.order or mapping is None or len(mapping) != G.order:
        return False
    perm = np.asarray(mapping, dtype=int)
    if sorted(perm.tolist()) != list(range(H.order)):
        return False
    return bool(np.array_equal(G.adjacency, H.adjacency[np.ix_(perm, perm)]))


def _initial_signatures(G: Graph, width: int) -> np.ndarray:
    d = G.distances().entries
    n = G.order
    hist = np.zeros((n, width + 1), dtype=np.int64)
    for k in range(width):
        hist[:, k] = (d == k).sum(axis=1)
    hist[:, width] = (d == UNREACHABLE).sum(axis=1)
    return np.column_stack([G.adjacency.diagonal().astype(np.int64), G.degrees(), hist])


def _relabel_jointly(sg: np.ndarray, sh: np.ndarray):
    n = sg.shape[0]
    _, inv = np.unique(np.vstack([sg, sh]), axis=0, return_inverse=True)
    inv = inv.reshape(-1)
    return inv[:n].astype(np.int64), inv[n:].astype(np.int64)


def _refine(Ag, Ah, cg, ch):
    """Equitable refinement of both colourings; ``None`` if they diverge."""
    n = len(cg)
    ncol = len(np.unique(cg))
    while True:
        k = int(max(cg.max(), ch.max())) + 1
        if not np.array_equal(np.bincount(cg, minlength=k), np.bincount(ch, minlength=k)):
            return None
        eg = np.zeros((n, k), dtype=np.int64)
        eg[np.arange(n), cg] = 1
        eh = np.zeros((n, k), dtype=np.int64)
        eh[np.arange(n), ch] = 1
        sg = np.column_stack([cg, Ag @ eg])
        sh = np.column_stack([ch, Ah @ eh])
        cg2, ch2 = _relabel_jointly(sg, sh)
        new = len(np.unique(cg2))
        if not np.array_equal(np.sort(cg2), np.sort(ch2)):
            return None
        if new == ncol:
            return cg2, ch2
        cg, ch, ncol = cg2, ch2, new


def are_isomorphic(G: Graph, H: Graph, budget: int = 200_000) -> IsoResult:
    if G.order != H.order or G.num_edges != H.num_edges:
        return IsoResult(NOT_ISOMORPHIC)
    if G.has_loops != H.has_loops:
        return IsoResult(NOT_ISOMORPHIC)
    if not np.array_equal(np.sort(G.degrees()), np.sort(H.degrees())):
        return IsoResult(NOT_ISOMORPHIC)
    n = G.order
    if n == 0:
        return IsoResult(ISOMORPHIC, ())
    width = int(max(G.distances().entries.max(), H.distances().entries.max())) + 1
    cg, ch = _relabel_jointly(_initial_signatures(G, width), _initial_signatures(H, width))
    Ag = G.adjacency.astype(np.int64)
    Ah = H.adjacency.astype(np.int64)
    state = {"nodes": 0}

    def search(cg, ch):
        state["nodes"] += 1
        if state["nodes"] > budget:
            raise _BudgetExceeded
        r = _refine(Ag, Ah, cg, ch)
        if r is None:
            return None
        cg, ch = r
        counts = np.bincount(cg)
        if counts.max() == 1:
            inv_h = np.empty(int(ch.max()) + 1, dtype=int)
            inv_h[ch] = np.arange(n)
            mapping = tuple(int(x) for x in inv_h[cg])
            return mapping if verify_isomorphism(G, H, mapping) else None
        sizes = np.where(counts > 1, counts, n + 1)
        target = int(np.argmin(sizes))
        v = int(np.flatnonzero(cg == target)[0])
        fresh = int(max(cg.max(), ch.max())) + 1
        for w in np.flatnonzero(ch == target):
            cg2 = cg.copy()
            ch2 = ch.copy()
            cg2[v] = fresh
            ch2[w] = fresh
            found = search(cg2, ch2)
            if found is not None:
                return found
        return None

    try:
        mapping = search(cg, ch)
    except _BudgetExceeded:
        return IsoResult(UNDECIDED, None, state["nodes"])
    if mapping is None:
        return IsoResult(NOT_ISOMORPHIC, None, state["nodes"])
    return IsoResult(ISOMORPHIC, mapping, state["nodes"])
