"""Exact chromatic number by DSATUR branch and bound.

A maximum clique (itself found by a small branch and bound) gives the lower
bound and is precoloured ``1..w``. The compiled DSATUR search then starts with
an unbounded palette, so its first leaf is the plain DSATUR greedy colouring,
and keeps going until it meets the clique bound, exhausts the tree, or runs
out of nodes.

Disconnected graphs are solved component by component; a component that is
isomorphic to one already solved inherits its colouring through the bijection.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .. import kernels
from ..graph import Graph, connected_components, induced_subgraph
from ..isomorphism import are_isomorphic
from .core import Coloring, ColoringError, validate_coloring

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 5_000_000


@dataclass(frozen=True)
class ChromaticResult:
    lower: int
    upper: int
    coloring: Coloring
    nodes: int = 0

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> int | None:
        return self.upper if self.exact else None

    def __str__(self):
        return str(self.upper) if self.exact else f"undecided({self.lower},{self.upper})"


def _bits(m: int):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def neighbor_masks(G: Graph) -> list[int]:
    a = G.loopless_adjacency()
    return [int(sum(1 << int(u) for u in np.flatnonzero(row))) for row in a]


def max_clique(G: Graph, budget: int = 500_000) -> tuple[list[int], bool]:
    """Largest clique found and whether it is certified maximum (budget not hit).

    Branch and bound with greedy colour-class bounds over bitsets.
    """
    n = G.order
    if n == 0:
        return [], True
    nbr = neighbor_masks(G)
    deg = [bin(m).count("1") for m in nbr]
    # greedy seed: highest degree first, lowest index on ties
    best: list[int] = []
    for s in sorted(range(n), key=lambda v: (-deg[v], v))[: min(n, 32)]:
        clique, cand = [s], nbr[s]
        while cand:
            v = max(_bits(cand), key=lambda u: (bin(nbr[u] & cand).count("1"), -u))
            clique.append(v)
            cand &= nbr[v]
        if len(clique) > len(best):
            best = sorted(clique)
    state = {"nodes": 0, "best": best, "complete": True}

    def colour_sort(P):
        order, bounds = [], []
        k = 0
        while P:
            k += 1
            Q = P
            while Q:
                v = (Q & -Q).bit_length() - 1
                Q &= ~nbr[v] & ~(1 << v)
                P &= ~(1 << v)
                order.append(v)
                bounds.append(k)
        return order, bounds

    def expand(R, P):
        state["nodes"] += 1
        if state["nodes"] > budget:
            state["complete"] = False
            return
        order, bounds = colour_sort(P)
        for idx in range(len(order) - 1, -1, -1):
            if len(R) + bounds[idx] <= len(state["best"]):
                return
            v = order[idx]
            R2 = R + [v]
            P2 = P & nbr[v]
            if P2:
                expand(R2, P2)
                if not state["complete"]:
                    return
            elif len(R2) > len(state["best"]):
                state["best"] = sorted(R2)
            P &= ~(1 << v)

    expand([], (1 << n) - 1)
    return state["best"], state["complete"]


def _solve_connected(G: Graph, budget: int, backend=None) -> ChromaticResult:
    n = G.order
    if n == 0:
        return ChromaticResult(0, 0, Coloring(()))
    if G.num_edges == 0:
        return ChromaticResult(1, 1, Coloring((1,) * n))
    clique, _ = max_clique(G)
    lower = len(clique)
    indptr, indices = G.csr()
    k = kernels.get_backend(backend) if backend else kernels
    best, colors, nodes, aborted = k.dsatur_search(indptr, indices, n, clique, n + 1, lower, budget)
    if best > n:  # budget exhausted before the first leaf: fall back to greedy
        col = greedy_coloring(G).canonical()
        return ChromaticResult(lower, max(lower, col.count), col, int(nodes))
    col = Coloring.from_zero_based(colors)
    upper = col.count
    if not aborted:
        lower = upper
    return ChromaticResult(lower, upper, col, int(nodes))


def exact_chromatic(G: Graph, budget: int = DEFAULT_BUDGET, backend: str | None = None,
                    reuse_isomorphic: bool = True) -> ChromaticResult:
    """Chromatic number of ``G`` or a bracketing ``(lower, upper)`` when over budget."""
    if G.has_loops:
        raise ColoringError("a graph with loops has no proper colouring")
    if G.order == 0:
        return ChromaticResult(0, 0, Coloring(()))
    comps = connected_components(G)
    colors = [0] * G.order
    lower = upper = 0
    nodes = 0
    solved: list[tuple[Graph, list[int], ChromaticResult]] = []
    for comp in comps:
        H = induced_subgraph(G, comp)
        res = None
        if reuse_isomorphic:
            for H0, comp0, res0 in solved:
                if H0.order != H.order or H0.num_edges != H.num_edges:
                    continue
                iso = are_isomorphic(H, H0, budget=2_000)
                if iso:
                    res = ChromaticResult(res0.lower, res0.upper,
                                          Coloring(tuple(res0.coloring[iso.mapping[v]] for v in range(H.order))))
                    break
        if res is None:
            res = _solve_connected(H, budget, backend)
            nodes += res.nodes
            solved.append((H, comp, res))
        for i, v in enumerate(comp):
            colors[v] = res.coloring[i]
        lower = max(lower, res.lower)
        upper = max(upper, res.upper)
    col = Coloring(tuple(colors))
    check = validate_coloring(G, col)
    if not check.proper:
        raise AssertionError(f"solver produced an improper colouring: {check.violations[:3]}")
    return ChromaticResult(lower, col.count, col, nodes)


def greedy_coloring(G: Graph, order=None) -> Coloring:
    """First-fit colouring in ``order`` (default: vertex index)."""
    n = G.order
    order = range(n) if order is None else order
    colors = [0] * n
    for v in order:
        used = {colors[u] for u in G.neighbors(v)}
        c = 1
        while c in used:
            c += 1
        colors[v] = c
    return Coloring(tuple(colors))


def tabu_coloring(G: Graph, k: int, seed: int = 0, max_iters: int = 50_000,
                  init: Coloring | None = None) -> Coloring | None:
    """Tabu search for a proper ``k``-colouring; ``None`` if none found in ``max_iters`` moves.

    Plain Tabucol: move a conflicting vertex to the colour that lowers the
    conflict count most, forbidding the reverse move for a while.
    """
    n = G.order
    if k < 1 or n == 0:
        return None
    rng = np.random.default_rng(seed)
    A = G.loopless_adjacency()
    nbrs = [np.flatnonzero(A[v]) for v in range(n)]
    if init is None:
        col = rng.integers(0, k, n)
    else:
        col = np.minimum(np.asarray(init.colors) - 1, k - 1)
    rows = np.arange(n)
    gamma = np.zeros((n, k), dtype=np.int64)
    for v in range(n):
        np.add.at(gamma[v], col[nbrs[v]], 1)
    tabu = np.zeros((n, k), dtype=np.int64)
    f = int(gamma[rows, col].sum()) // 2
    best_f = f
    big = 1 << 30
    for it in range(max_iters):
        if f == 0:
            break
        cv = np.flatnonzero(gamma[rows, col] > 0)
        delta = gamma[cv] - gamma[cv, col[cv]][:, None]
        delta[np.arange(len(cv)), col[cv]] = big
        # aspiration: a tabu move is allowed if it beats the best seen
        delta = np.where((tabu[cv] <= it) | (f + delta < best_f), delta, big)
        m = int(delta.min())
        if m >= big:
            continue
        ties = np.flatnonzero(delta.ravel() == m)
        i, c = divmod(int(ties[rng.integers(len(ties))]), k)
        v = cv[i]
        old = col[v]
        col[v] = c
        gamma[nbrs[v], old] -= 1
        gamma[nbrs[v], c] += 1
        f += m
        best_f = min(best_f, f)
        tabu[v, old] = it + int(0.6 * len(cv)) + int(rng.integers(10))
    if f:
        return None
    out = Coloring.from_zero_based(col).canonical()
    if not validate_coloring(G, out).proper:
        raise AssertionError("tabu search produced an improper colouring")
    return out


def improve_coloring(G: Graph, start: Coloring, seed: int = 0, max_iters: int = 20_000,
                     floor: int = 1) -> Coloring:
    """Repeatedly try one colour fewer than the current best; stop at ``floor`` or the first miss."""
    best = start
    while best.count > max(floor, 1):
        nxt = tabu_coloring(G, best.count - 1, seed=seed, max_iters=max_iters, init=best)
        if nxt is None:
            break
        best = nxt
    return best
