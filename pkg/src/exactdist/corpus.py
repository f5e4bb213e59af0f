"""Seeded random and structured graphs for fuzzing the identities and characterisations."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .families import complete, cycle, hypercube, path
from .graph import Graph, build_graph, is_connected

DEFAULT_SEED = 20240601
DENSITIES = (0.25, 0.5, 0.75)


@dataclass(frozen=True)
class Instance:
    G: Graph
    H: Graph
    name: str


def gnp(n: int, density: float, rng: np.random.Generator) -> Graph:
    upper = np.triu(rng.random((n, n)) < density, 1)
    adj = upper | upper.T
    return Graph(adj, False, list(range(n)))


def star(n: int) -> Graph:
    """``K_{1,n-1}`` with the centre at vertex 0."""
    return build_graph(n, [(0, v) for v in range(1, n)], labels=list(range(n)))


def _int_labels(G: Graph) -> Graph:
    return G.relabel(list(range(G.order)))


def structured_graphs() -> list[tuple[str, Graph]]:
    out = [(f"P{n}", path(n)) for n in range(1, 7)]
    out += [(f"C{n}", cycle(n)) for n in range(3, 9)]
    out += [(f"K{n}", complete(n)) for n in range(1, 5)]
    out += [(f"S{n}", star(n)) for n in range(3, 7)]
    out += [("Q2", _int_labels(hypercube(2))), ("Q3", _int_labels(hypercube(3)))]
    return out


def _accept(G: Graph, isolate_free: bool, connected: bool, triangle_free: bool) -> bool:
    if isolate_free and (G.order < 2 or (G.degrees() == 0).any()):
        return False
    if connected and not is_connected(G):
        return False
    if triangle_free and has_triangle(G):
        return False
    return True


def has_triangle(G: Graph) -> bool:
    A = G.loopless_adjacency().astype(np.int64)
    return bool(np.trace(A @ A @ A))


def random_factor(rng, max_order=8, isolate_free=False, connected=False, triangle_free=False,
                  min_order=1) -> tuple[str, Graph]:
    while True:
        n = int(rng.integers(min_order, max_order + 1))
        d = float(DENSITIES[int(rng.integers(len(DENSITIES)))])
        if triangle_free:
            # random bipartite graphs are triangle-free by construction
            side = rng.integers(0, 2, n).astype(bool)
            upper = np.triu((rng.random((n, n)) < d) & (side[:, None] != side[None, :]), 1)
            G = Graph(upper | upper.T, False, list(range(n)))
            name = f"bip({n},{d})"
        else:
            G = gnp(n, d, rng)
            name = f"gnp({n},{d})"
        if _accept(G, isolate_free, connected, triangle_free):
            return name, G


def pair_corpus(count: int = 200, seed: int = DEFAULT_SEED, max_order: int = 8,
                isolate_free: bool = False, connected: bool = False,
                triangle_free: bool = False, min_order: int = 1) -> list[Instance]:
    """``count`` factor pairs: structured pairs first, then random ones at three densities."""
    rng = np.random.default_rng(seed)
    pool = [(nm, G) for nm, G in structured_graphs()
            if G.order <= max_order and G.order >= min_order
            and _accept(G, isolate_free, connected, triangle_free)]
    out: list[Instance] = []
    # roughly a fifth of the corpus pairs structured graphs with each other
    n_struct = min(count // 5, len(pool) * len(pool))
    for k in range(n_struct):
        a, b = pool[int(rng.integers(len(pool)))], pool[int(rng.integers(len(pool)))]
        out.append(Instance(a[1], b[1], f"{a[0]}*{b[0]}#{k}"))
    k = len(out)
    while len(out) < count:
        a = random_factor(rng, max_order, isolate_free, connected, triangle_free, min_order)
        b = random_factor(rng, max_order, isolate_free, connected, triangle_free, min_order)
        out.append(Instance(a[1], b[1], f"{a[0]}*{b[0]}#{k}"))
        k += 1
    return out
