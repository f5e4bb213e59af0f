"""Predicted connectivity of exact distance graphs of products, each paired with
the component-count oracle on the graph actually built."""

from __future__ import annotations

from dataclasses import dataclass

from .exact_distance import exact_distance_graph, path_power
from .families import hypercube
from .graph import Graph, GraphError, diameter, is_bipartite, is_connected, radius
from .products import ProductKind, cartesian, direct, lexicographic, product, strong


@dataclass(frozen=True)
class Verdict:
    """``predicted`` is ``None`` when no closed characterisation applies."""

    predicted: bool | None
    oracle: bool
    note: str = ""

    @property
    def agreement(self) -> bool | None:
        return None if self.predicted is None else self.predicted == self.oracle

    def to_json(self) -> dict:
        return {"predicted": self.predicted, "oracle": self.oracle,
                "agreement": self.agreement, "note": self.note}


def _require_connected(*graphs):
    for X in graphs:
        if X.order == 0 or not is_connected(X):
            raise GraphError("factors must be connected")


def _require_nontrivial(*graphs):
    for X in graphs:
        if X.order < 2:
            raise GraphError("factors must have at least two vertices")


def radius_obstruction(G: Graph, p: int) -> Verdict:
    """``p > rad(G)`` forces ``G^[p]`` to be disconnected (a central vertex is isolated)."""
    _require_nontrivial(G)
    _require_connected(G)
    blocked = p > radius(G)
    oracle = is_connected(exact_distance_graph(G, p))
    # the obstruction only ever predicts disconnection
    return Verdict(False if blocked else None, oracle,
                   "p > rad: disconnected" if blocked else "no radius obstruction")


def strong_product_characterization(G: Graph, H: Graph, p: int) -> Verdict:
    """``(G ⊠ H)^[p]`` connected iff ``rad(G) >= p`` and (``G^[p]`` connected or ``diam(H) >= p``),
    with the factors ordered so that ``rad(G) >= rad(H)``."""
    _require_connected(G, H)
    if G.order < 2 and H.order < 2:
        raise GraphError("product is trivial")
    if p < 2:
        raise GraphError("p must be at least 2")
    oracle = is_connected(exact_distance_graph(strong(G, H), p))
    if radius(G) < radius(H):
        G, H = H, G
    pred = radius(G) >= p and (is_connected(exact_distance_graph(G, p)) or diameter(H) >= p)
    return Verdict(pred, oracle)


def lex_characterization(G: Graph, H: Graph, p: int) -> Verdict:
    """``(G ∘ H)^[p]`` connected iff ``G^[p]`` is connected (``G`` non-trivial)."""
    _require_nontrivial(G)
    if p < 1:
        raise GraphError("p must be at least 1")
    oracle = is_connected(exact_distance_graph(lexicographic(G, H), p))
    return Verdict(is_connected(exact_distance_graph(G, p)), oracle)


def cartesian_p2_characterization(G: Graph, H: Graph) -> Verdict:
    """``(G □ H)^[2]`` connected iff some factor is non-bipartite (connected, non-trivial factors)."""
    _require_nontrivial(G, H)
    _require_connected(G, H)
    oracle = is_connected(exact_distance_graph(cartesian(G, H), 2))
    return Verdict(is_bipartite(G) is None or is_bipartite(H) is None, oracle)


def direct_p2_characterization(G: Graph, H: Graph, rule: str = "distance") -> Verdict:
    """Predict connectivity of ``(G x H)^[2]`` for connected, non-trivial factors.

    ``rule="distance"``: connected iff ``G^[2]`` and ``H^[2]`` are connected.
    This is only sufficient; ``C_5 x K_3`` is connected although ``K_3^[2]``
    is edgeless.
    ``rule="path"``: connected iff the 2-path graphs ``G^{2}`` and ``H^{2}``
    are connected. This one is exact, since ``(G x H)^[2]`` lies between
    ``G^{2} □ H^{2}`` and ``G^{2} ⊠ H^{2}``.
    """
    _require_nontrivial(G, H)
    _require_connected(G, H)
    oracle = is_connected(exact_distance_graph(direct(G, H), 2))
    if rule == "distance":
        pred = is_connected(exact_distance_graph(G, 2)) and is_connected(exact_distance_graph(H, 2))
    elif rule == "path":
        pred = is_connected(path_power(G, 2)) and is_connected(path_power(H, 2))
    else:
        raise ValueError("rule must be 'distance' or 'path'")
    return Verdict(pred, oracle, f"rule={rule}")


def hypercube_characterization(d: int, p: int) -> Verdict:
    """``Q_d^[p]`` for ``1 <= p < d`` is connected iff ``p`` is odd; other ``p`` get the oracle only."""
    if d < 1 or p < 0:
        raise GraphError("need d >= 1 and p >= 0")
    oracle = is_connected(exact_distance_graph(hypercube(d), p))
    if d >= 2 and 1 <= p < d:
        return Verdict(p % 2 == 1, oracle)
    return Verdict(None, oracle, "outside characterized range")


def product_oracle(kind, G: Graph, H: Graph, p: int) -> Verdict:
    """Connectivity of ``(G * H)^[p]`` with a prediction only where one is known."""
    kind = ProductKind(kind)
    if kind is ProductKind.STRONG and p >= 2:
        return strong_product_characterization(G, H, p)
    if kind is ProductKind.LEXICOGRAPHIC and G.order >= 2 and p >= 1:
        return lex_characterization(G, H, p)
    if p == 2 and kind is ProductKind.CARTESIAN:
        return cartesian_p2_characterization(G, H)
    if p == 2 and kind is ProductKind.DIRECT:
        return direct_p2_characterization(G, H)
    oracle = is_connected(exact_distance_graph(product(kind, G, H), p))
    return Verdict(None, oracle, "no closed characterization")


def bipartite_parity_check(G: Graph, p: int) -> dict:
    """For bipartite ``G``: even ``p`` disconnects ``G^[p]``; odd ``p`` keeps the bipartition proper."""
    parts = is_bipartite(G)
    if parts is None:
        raise GraphError("graph is not bipartite")
    X = exact_distance_graph(G, p)
    if p % 2 == 0:
        ok = G.order < 2 or not is_connected(X)
        return {"p": p, "claim": "disconnected", "holds": ok}
    side = {v: 0 for v in parts[0]} | {v: 1 for v in parts[1]}
    ok = all(side[u] != side[v] for u, v in X.edges())
    return {"p": p, "claim": "bipartition proper", "holds": ok}
