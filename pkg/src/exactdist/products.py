"""The four standard graph products and their closed-form distance functions.

Vertex ``(g, h)`` of a product sits at index ``g * n(H) + h`` (row-major, ``G``
major) and carries the label ``(label_G(g), label_H(h))``.

Loops are honoured: in the direct product a loop at ``g`` makes ``(g, h)``
adjacent to ``(g, h')`` whenever ``hh'`` is an edge of ``H``.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from .graph import UNREACHABLE, Graph, GraphError


class ProductKind(str, Enum):
    CARTESIAN = "cartesian"
    STRONG = "strong"
    DIRECT = "direct"
    LEXICOGRAPHIC = "lexicographic"


def _pair_labels(G: Graph, H: Graph):
    return [(G.label_of(g), H.label_of(h)) for g in range(G.order) for h in range(H.order)]


def product(kind, G: Graph, H: Graph) -> Graph:
    kind = ProductKind(kind)
    A, B = G.adjacency, H.adjacency
    IG = np.eye(G.order, dtype=bool)
    IH = np.eye(H.order, dtype=bool)
    if kind is ProductKind.CARTESIAN:
        adj = np.kron(A, IH) | np.kron(IG, B)
    elif kind is ProductKind.DIRECT:
        adj = np.kron(A, B)
    elif kind is ProductKind.STRONG:
        adj = np.kron(A, IH) | np.kron(IG, B) | np.kron(A, B)
    else:
        adj = np.kron(A, np.ones_like(IH)) | np.kron(IG, B)
    return Graph(adj, G.loops_allowed or H.loops_allowed, _pair_labels(G, H))


def cartesian(G, H):
    return product(ProductKind.CARTESIAN, G, H)


def strong(G, H):
    return product(ProductKind.STRONG, G, H)


def direct(G, H):
    return product(ProductKind.DIRECT, G, H)


def lexicographic(G, H):
    return product(ProductKind.LEXICOGRAPHIC, G, H)


def parity_walk_lengths(G: Graph) -> tuple[np.ndarray, np.ndarray]:
    """Shortest even and shortest odd walk lengths between all pairs.

    Computed by BFS on the bipartite double cover (vertex, parity bit).
    ``UNREACHABLE`` where no walk of that parity exists.
    """
    n = G.order
    A = G.loopless_adjacency()
    cover = Graph(np.kron(np.array([[0, 1], [1, 0]], dtype=bool), A))
    d = cover.distances().entries
    return d[:n, :n].copy(), d[:n, n:].copy()


def _parity(G: Graph):
    if "parity_walks" not in G._cache:
        G._cache["parity_walks"] = parity_walk_lengths(G)
    return G._cache["parity_walks"]


def _walk_set_min(eg, og, eh, oh, iso_g, iso_h):
    """Least k walkable in both factors, given shortest even/odd walk lengths."""
    # an isolated vertex has only the empty walk to itself; no +2 padding
    if iso_g or iso_h:
        if eg == 0 and eh == 0:
            return 0
        return None
    best = None
    for a, b in ((eg, eh), (og, oh)):
        if a != UNREACHABLE and b != UNREACHABLE:
            k = max(a, b)
            best = k if best is None else min(best, k)
    return best


def product_distance(kind, G: Graph, H: Graph, u, v):
    """Closed-form distance between ``u = (g1, h1)`` and ``v = (g2, h2)`` in the product.

    ``None`` means unreachable. Factors must be loop-free.
    """
    if G.has_loops or H.has_loops:
        raise GraphError("product_distance expects loop-free factors")
    kind = ProductKind(kind)
    (g1, h1), (g2, h2) = u, v
    dg = G.distances().get(g1, g2)
    dh = H.distances().get(h1, h2)
    if kind is ProductKind.CARTESIAN:
        return None if dg is None or dh is None else dg + dh
    if kind is ProductKind.STRONG:
        return None if dg is None or dh is None else max(dg, dh)
    if kind is ProductKind.LEXICOGRAPHIC:
        if g1 != g2:
            return dg
        if G.degrees()[g1] > 0:
            return 2 if dh is None else min(dh, 2)
        return dh
    EG, OG = _parity(G)
    EH, OH = _parity(H)
    iso_g = G.degrees()[g1] == 0
    iso_h = H.degrees()[h1] == 0
    return _walk_set_min(int(EG[g1, g2]), int(OG[g1, g2]), int(EH[h1, h2]), int(OH[h1, h2]),
                         iso_g, iso_h)


def product_distance_matrix(kind, G: Graph, H: Graph) -> np.ndarray:
    """All pairs of ``product_distance`` in product index order, ``UNREACHABLE`` for None."""
    n, m = G.order, H.order
    out = np.empty((n * m, n * m), dtype=np.int32)
    for a in range(n * m):
        for b in range(n * m):
            d = product_distance(kind, G, H, divmod(a, m), divmod(b, m))
            out[a, b] = UNREACHABLE if d is None else d
    return out
