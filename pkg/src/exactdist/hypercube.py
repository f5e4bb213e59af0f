"""Structure of exact distance graphs of hypercubes: decompositions, explicit
isomorphisms and the Johnson graphs sitting on the levels.

Hypercube vertex ``v`` is the integer whose big-endian binary form is its bit
string, so bit ``j`` (1-based, from the left) is ``(v >> (n - j)) & 1`` and
the 2-bit word ``x_{2i+1,2i+2}`` is ``(v >> (n - 2i - 2)) & 3``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exact_distance import exact_distance_graph
from .families import hypercube, johnson, subsets, vertex_subset, weights
from .graph import GraphError, connected_components, disjoint_copies, edge_union, induced_subgraph
from .identities import IdentityReport, check_identity
from .isomorphism import are_isomorphic, verify_isomorphism

ISO_BUDGET = 200_000


@dataclass
class MapCheck:
    mapping: tuple
    bijective: bool
    isomorphism: bool
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.bijective and self.isomorphism


def even_distance_decomposition_check(n: int, p: int, budget: int = ISO_BUDGET) -> IdentityReport:
    """``Q_n^[2p]`` against ``2(Q_{n-1}^[2p] ⊎ Q_{n-1}^[2p-1])`` by isomorphism search."""
    if not (2 <= 2 * p <= n):
        raise GraphError(f"need 2 <= 2p <= n, got n={n}, p={p}")
    lhs = exact_distance_graph(hypercube(n), 2 * p)
    Q = hypercube(n - 1)
    rhs = disjoint_copies(2, edge_union(exact_distance_graph(Q, 2 * p),
                                        exact_distance_graph(Q, 2 * p - 1)))
    res = are_isomorphic(lhs, rhs, budget=budget)
    ok = bool(res) and verify_isomorphism(lhs, rhs, res.mapping)
    details = {"status": res.status, "nodes": res.nodes,
               "mapping": list(res.mapping) if res.mapping is not None else None}
    return IdentityReport("even-distance-decomposition", f"n={n}, p={p}", ok, details=details)


def word_parity_type(v: int, n: int) -> str:
    """``"A"`` when ``v`` has an even number of odd 2-bit words (01 or 10), else ``"B"``."""
    odd = sum(((v >> (n - 2 * i - 2)) & 3) in (1, 2) for i in range(n // 2))
    return "A" if odd % 2 == 0 else "B"


def f_map(v: int, n: int) -> int:
    """Type A keeps even words and flips odd ones; type B flips even words and keeps odd ones."""
    type_a = word_parity_type(v, n) == "A"
    out = v
    for i in range(n // 2):
        shift = n - 2 * i - 2
        odd = ((v >> shift) & 3) in (1, 2)
        if odd == type_a:
            out ^= 3 << shift
    return out


def qn_nminus1_isomorphism(n: int) -> MapCheck:
    """The explicit map ``Q_n^[n-1] -> Q_n`` for even ``n``, verified edge by edge."""
    if n < 2 or n % 2:
        raise GraphError("n must be even and at least 2")
    Q = hypercube(n)
    X = exact_distance_graph(Q, n - 1)
    f = tuple(f_map(v, n) for v in range(1 << n))
    bijective = sorted(f) == list(range(1 << n))
    iso = bijective and verify_isomorphism(X, Q, f)
    keeps_type = all(word_parity_type(v, n) == word_parity_type(f[v], n) for v in range(1 << n))
    return MapCheck(f, bijective, iso, {"preserves_type": keeps_type})


def johnson_complement_isomorphism(n: int, k: int, i: int) -> MapCheck:
    """``A -> {1..n} \\ A`` from ``J(n,k,i)`` onto ``J(n, n-k, n-2k+i)``."""
    j = n - 2 * k + i
    if not (0 <= i <= k <= n) or j < 0:
        raise GraphError(f"invalid parameters n={n}, k={k}, i={i}")
    G, H = johnson(n, k, i), johnson(n, n - k, j)
    target = {m: idx for idx, m in enumerate(subsets(n, n - k))}
    full = (1 << n) - 1
    f = tuple(target[full ^ m] for m in subsets(n, k))
    bijective = sorted(f) == list(range(H.order))
    return MapCheck(f, bijective, bijective and verify_isomorphism(G, H, f), {"image": (n, n - k, j)})


def level_induces_johnson_check(n: int, p: int, i: int) -> IdentityReport:
    """Level ``i`` of ``Q_n^[p]`` is ``J(n, i, i - p/2)`` once vertices are read as subsets."""
    # p = 0 is excluded: Q_n^[0] carries loops while J(n,i,i) is loop-free
    if p % 2 or p < 2 or not (p // 2 <= i <= n - p // 2):
        raise GraphError(f"need even p >= 2 and p/2 <= i <= n - p/2, got n={n}, p={p}, i={i}")
    X = exact_distance_graph(hypercube(n), p)
    level = np.flatnonzero(weights(n) == i)
    J = johnson(n, i, i - p // 2)
    pos = {m: idx for idx, m in enumerate(subsets(n, i))}
    # reorder the level into colex order of the corresponding subsets
    order = [0] * len(level)
    for v in level:
        order[pos[vertex_subset(n, int(v)).mask]] = int(v)
    sub = induced_subgraph(X, order).relabel(J.labels)
    return check_identity(sub, J, "level-johnson", f"n={n}, p={p}, i={i}")


def parity_components_check(n: int, p: int, budget: int = ISO_BUDGET, search: bool = True) -> dict:
    """Even/odd weight classes of ``Q_n^[p]`` for even ``p``.

    (a) no edge joins the classes; (b) for odd ``n`` complementation maps one
    class onto the other; (c) for even ``n`` the classes are compared by
    isomorphism search, and the translation ``x -> x XOR 10...0`` is checked as
    an explicit witness. Component counts are reported per class.
    """
    if p % 2 or not 0 <= p <= n:
        raise GraphError(f"need even p <= n, got n={n}, p={p}")
    X = exact_distance_graph(hypercube(n), p)
    w = weights(n)
    even = np.flatnonzero(w % 2 == 0).tolist()
    odd = np.flatnonzero(w % 2 == 1).tolist()
    A = X.adjacency
    cross = bool(A[np.ix_(even, odd)].any())
    Ge, Go = induced_subgraph(X, even), induced_subgraph(X, odd)
    pos_odd = {v: k for k, v in enumerate(odd)}
    out = {"n": n, "p": p, "a_no_cross_edges": not cross}
    full = (1 << n) - 1
    if n % 2:
        f = [pos_odd[full ^ v] for v in even]
        out["b_complement_isomorphism"] = verify_isomorphism(Ge, Go, f)
    else:
        out["b_complement_isomorphism"] = None
        f = [pos_odd[v ^ (1 << (n - 1))] for v in even]
        out["c_translation_isomorphism"] = verify_isomorphism(Ge, Go, f)
        if search:
            res = are_isomorphic(Ge, Go, budget=budget)
            out["c_search"] = res.status
    ce, co = len(connected_components(Ge)), len(connected_components(Go))
    out["components_even"] = ce
    out["components_odd"] = co
    out["classes_connected"] = ce == 1 and co == 1
    return out
