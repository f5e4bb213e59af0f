"""Right-hand sides of the product identities for exact distance graphs, and
positional checks of those identities against directly computed graphs."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exact_distance import exact_distance_graph, path_power
from .families import path
from .graph import Graph, GraphError, complement, connected_components, edge_union, edgeless_graph
from .corpus import DEFAULT_SEED, has_triangle, pair_corpus
from .products import cartesian, direct, lexicographic, product, product_distance_matrix, strong


@dataclass
class IdentityReport:
    identity: str
    instance: str
    passed: bool
    only_lhs: list = field(default_factory=list)
    only_rhs: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict:
        return {"identity": self.identity, "instance": self.instance,
                "verdict": "pass" if self.passed else "fail",
                "only_lhs": [list(e) for e in self.only_lhs],
                "only_rhs": [list(e) for e in self.only_rhs],
                "witnesses": [list(w) for w in self.witnesses], "details": self.details}


def _loop_free(*graphs):
    for X in graphs:
        if X.has_loops:
            raise GraphError("factors must be loop-free")


def _no_isolated(*graphs):
    for X in graphs:
        if X.order and (X.degrees() == 0).any():
            raise GraphError("factor has an isolated vertex")


def rhs_cartesian(G: Graph, H: Graph, p: int, form: int = 1) -> Graph:
    """Union over ``i`` of ``G^[i] x H^[p-i]``; ``form=2`` folds the two end terms into ``G^[p] □ H^[p]``."""
    _loop_free(G, H)
    if p < 0:
        raise GraphError("p must be non-negative")
    Gx = [exact_distance_graph(G, i) for i in range(p + 1)]
    Hx = [exact_distance_graph(H, i) for i in range(p + 1)]
    if form == 1:
        parts = [direct(Gx[i], Hx[p - i]) for i in range(p + 1)]
    elif form == 2:
        parts = [direct(Gx[i], Hx[p - i]) for i in range(1, p)] + [cartesian(Gx[p], Hx[p])]
    else:
        raise ValueError("form must be 1 or 2")
    return parts[0] if len(parts) == 1 else edge_union(*parts)


def rhs_strong(G: Graph, H: Graph, p: int) -> Graph:
    _loop_free(G, H)
    if p < 0:
        raise GraphError("p must be non-negative")
    Gx = [exact_distance_graph(G, i) for i in range(p + 1)]
    Hx = [exact_distance_graph(H, i) for i in range(p + 1)]
    parts = []
    for i in range(p + 1):
        parts += [direct(Gx[p], Hx[i]), direct(Gx[i], Hx[p])]
    return edge_union(*parts)


def rhs_direct2(G: Graph, H: Graph) -> Graph:
    """``(G^{2} □ H^{2}) ⊎ (G^{2} x H^[2]) ⊎ (G^[2] x H^{2})`` with ``X^{2}`` the 2-path graph."""
    _loop_free(G, H)
    _no_isolated(G, H)
    G2p, H2p = path_power(G, 2), path_power(H, 2)
    G2, H2 = exact_distance_graph(G, 2), exact_distance_graph(H, 2)
    return edge_union(cartesian(G2p, H2p), direct(G2p, H2), direct(G2, H2p))


def rhs_direct2_triangle_free(G: Graph, H: Graph) -> Graph:
    """``G^[2] ⊠ H^[2]``, which agrees with ``rhs_direct2`` when both factors are triangle-free."""
    _loop_free(G, H)
    return strong(exact_distance_graph(G, 2), exact_distance_graph(H, 2))


def rhs_lex(G: Graph, H: Graph, p: int) -> Graph:
    _loop_free(G, H)
    if G.order < 2:
        raise GraphError("trivial first factor: use H^[p] directly")
    _no_isolated(G)
    if p < 2:
        raise GraphError("p must be at least 2")
    Gp = exact_distance_graph(G, p)
    inner = complement(H) if p == 2 else edgeless_graph(H.order, H.labels)
    return lexicographic(Gp, inner)


def _edge_list(mask):
    us, vs = np.nonzero(np.triu(mask))
    return list(zip(us.tolist(), vs.tolist()))


def check_identity(lhs: Graph, rhs: Graph, identity: str = "", instance: str = "") -> IdentityReport:
    """Positional edge-set comparison (loops included)."""
    if lhs.order != rhs.order:
        raise GraphError(f"order mismatch: {lhs.order} vs {rhs.order}")
    if lhs.labels is not None and rhs.labels is not None and list(lhs.labels) != list(rhs.labels):
        raise GraphError("label mismatch")
    A, B = lhs.adjacency, rhs.adjacency
    only_l = _edge_list(A & ~B)
    only_r = _edge_list(B & ~A)
    return IdentityReport(identity, instance, not only_l and not only_r, only_l, only_r,
                          (only_l + only_r)[:5])


def _grid_coords(which, i, j):
    """Component id and king-grid coordinates of ``(i, j)``."""
    if which == "cartesian":
        comp = (i + j) % 2
        return comp, ((i + j - comp) // 2, (i - j - comp) // 2)
    a, b = i % 2, j % 2
    return (a, b), ((i - a) // 2, (j - b) // 2)


def grid_window_check(m: int, which: str = "cartesian") -> IdentityReport:
    """Local structure of ``(P_m * P_m)^[2]`` away from the boundary.

    Checks the component count, that interior vertices have the eight expected
    neighbours, and that within each component the interior is a king grid
    under the usual coordinate change.
    """
    if m < 9:
        raise GraphError("window needs m >= 9")
    if which not in ("cartesian", "direct"):
        raise ValueError("which must be 'cartesian' or 'direct'")
    prod = cartesian if which == "cartesian" else direct
    G = exact_distance_graph(prod(path(m), path(m)), 2)
    A = G.adjacency
    comps = connected_components(G)
    want_comps = 2 if which == "cartesian" else 4
    if which == "cartesian":
        steps = [(1, 1), (1, -1), (-1, 1), (-1, -1), (0, 2), (0, -2), (2, 0), (-2, 0)]
    else:
        steps = [(2, 2), (2, -2), (-2, 2), (-2, -2), (0, 2), (0, -2), (2, 0), (-2, 0)]
    interior = [(i, j) for i in range(2, m - 2) for j in range(2, m - 2)]
    only_l, only_r, witnesses = [], [], []
    bad_degree = []
    for i, j in interior:
        v = i * m + j
        want = {(i + a) * m + (j + b) for a, b in steps}
        have = set(np.flatnonzero(A[v]).tolist())
        if len(have) != 8:
            bad_degree.append((i, j))
        only_l += [(v, u) for u in sorted(have - want)]
        only_r += [(v, u) for u in sorted(want - have)]
    # king-grid adjacency on each component's interior under the coordinate map
    king_bad = []
    coords = {}
    for i, j in interior:
        comp, uv = _grid_coords(which, i, j)
        if (comp, uv) in coords:
            king_bad.append(((i, j), coords[(comp, uv)]))
        coords[(comp, uv)] = (i, j)
    for x in interior:
        cx, (ux, vx) = _grid_coords(which, *x)
        for y in interior:
            cy, (uy, vy) = _grid_coords(which, *y)
            if cx != cy or x >= y:
                continue
            king = max(abs(ux - uy), abs(vx - vy)) == 1
            if king != bool(A[x[0] * m + x[1], y[0] * m + y[1]]):
                king_bad.append((x, y))
    if bad_degree:
        witnesses.append(("degree", bad_degree[0]))
    if king_bad:
        witnesses.append(("king", king_bad[0]))
    ok = (len(comps) == want_comps and not bad_degree and not only_l and not only_r and not king_bad)
    details = {"components": len(comps), "expected_components": want_comps,
               "interior_vertices": len(interior), "interior_degree_ok": not bad_degree,
               "king_grid_ok": not king_bad}
    return IdentityReport(f"grid-{which}", f"m={m}", ok, only_l, only_r, witnesses, details)


IDENTITIES = ("cartesian", "strong", "direct", "lexicographic")


def identity_instance(identity: str, G: Graph, H: Graph, p: int, name: str = "") -> list[IdentityReport]:
    """All checks of one identity on one factor pair (several forms where they exist)."""
    inst = f"{name} p={p}" if name else f"p={p}"
    if identity == "cartesian":
        lhs = exact_distance_graph(cartesian(G, H), p)
        return [check_identity(lhs, rhs_cartesian(G, H, p, 1), "cartesian", inst),
                check_identity(lhs, rhs_cartesian(G, H, p, 2), "cartesian-second-form", inst)]
    if identity == "strong":
        return [check_identity(exact_distance_graph(strong(G, H), p), rhs_strong(G, H, p), "strong", inst)]
    if identity == "direct":
        lhs = exact_distance_graph(direct(G, H), 2)
        out = [check_identity(lhs, rhs_direct2(G, H), "direct", inst)]
        if not has_triangle(G) and not has_triangle(H):
            out.append(check_identity(lhs, rhs_direct2_triangle_free(G, H), "direct-triangle-free", inst))
        return out
    if identity == "lexicographic":
        return [check_identity(exact_distance_graph(lexicographic(G, H), p), rhs_lex(G, H, p),
                               "lexicographic", inst)]
    raise ValueError(f"unknown identity {identity!r}")


def identity_fuzz(identity: str, trials: int = 200, seed: int | None = None, max_order: int = 8,
                  ps=None):
    """Yield reports over a seeded corpus; ``direct`` and ``lexicographic`` draw isolate-free pairs."""
    seed = DEFAULT_SEED if seed is None else seed
    if identity in ("direct", "lexicographic"):
        corpus = pair_corpus(trials, seed, max_order, isolate_free=True)
    else:
        corpus = pair_corpus(trials, seed, max_order)
    if ps is None:
        ps = {"cartesian": range(6), "strong": range(6), "direct": [2],
              "lexicographic": range(2, 6)}[identity]
    for inst in corpus:
        for p in ps:
            yield from identity_instance(identity, inst.G, inst.H, p, inst.name)


def distance_formula_check(kind, G: Graph, H: Graph, name: str = "") -> IdentityReport:
    """Closed-form product distances against BFS on the built product, all vertex pairs."""
    bfs = product(kind, G, H).distances().entries
    formula = product_distance_matrix(kind, G, H)
    us, vs = np.nonzero(bfs != formula)
    bad = [(int(u), int(v), int(bfs[u, v]), int(formula[u, v])) for u, v in zip(us, vs)]
    return IdentityReport(f"distance-{getattr(kind, 'value', kind)}", name, not bad,
                          witnesses=bad[:5], details={"pairs": int(bfs.size), "mismatches": len(bad)})
