"""Explicit colourings: the twelve-colour rule on K(8,3,1), the classical
Kneser colouring, the four-colour block pattern on king grids, and transport
of colourings along hypercube translations."""

from __future__ import annotations

from ..exact_distance import exact_distance_graph
from ..families import SubsetLabel, kneser_general, johnson, path, subsets
from ..graph import Graph
from ..products import strong
from .core import Coloring, ColoringError, validate_coloring

_PAIR_CASES = [(i, {2 * i - 1, 2 * i}) for i in range(1, 5)]
_TRIPLE_CASES = [
    (5, {1, 4}, {5, 6, 7, 8}),
    (6, {2, 3}, {5, 6, 7, 8}),
    (7, {5, 8}, {1, 2, 3, 4}),
    (8, {6, 7}, {1, 2, 3, 4}),
]
_QUAD_CASES = [(9, {1, 3, 5, 7}), (10, {1, 3, 6, 8}), (11, {2, 4, 5, 7}), (12, {2, 4, 6, 8})]


def k831_cases(A) -> list[int]:
    """Every case of the twelve-colour rule that ``A`` satisfies, in rule order.

    The last case is tested literally (``A`` inside ``{2,4,6,8}``) rather than
    as a catch-all, so an empty list means the rule misses ``A``.
    """
    A = set(A.members if isinstance(A, SubsetLabel) else A)
    if len(A) != 3 or not A <= set(range(1, 9)):
        raise ColoringError(f"{sorted(A)} is not a 3-subset of 1..8")
    hits = [c for c, pair in _PAIR_CASES if pair <= A]
    for c, pair, rest in _TRIPLE_CASES:
        extra = A - pair
        if pair <= A and len(extra) == 1 and extra <= rest:
            hits.append(c)
    hits += [c for c, quad in _QUAD_CASES if A <= quad]
    return hits


def k831_color(A) -> int:
    """Colour of a 3-subset under the twelve-colour rule, first matching case wins."""
    hits = k831_cases(A)
    return hits[0] if hits else 12


def k831_coloring() -> Coloring:
    """The twelve-colour map on ``kneser_general(8, 3, 1)``, self-checked."""
    G = kneser_general(8, 3, 1)
    c = Coloring(tuple(k831_color(lab) for lab in G.labels))
    _ensure_proper(G, c)
    return c


def kneser_coloring(n: int, k: int) -> Coloring:
    """``n - 2k + 2`` colours on ``J(n,k,0)``: colour ``min(min A, n - 2k + 2)``."""
    if not 1 <= k or 2 * k > n:
        raise ColoringError(f"need 1 <= k <= n/2, got n={n}, k={k}")
    cap = n - 2 * k + 2
    c = Coloring(tuple(min(SubsetLabel(n, m).members[0], cap) for m in subsets(n, k)))
    _ensure_proper(johnson(n, k, 0), c)
    return c


def grid_pattern_color(i: int, j: int, p: int) -> int:
    return 1 + (i // p) % 2 + 2 * ((j // p) % 2)


def grid_pattern_coloring(m: int, p: int) -> tuple[Graph, Coloring]:
    """Block pattern on ``(P_m ⊠ P_m)^[p]``; vertex ``(i, j)`` sits at index ``i*m + j``."""
    if p < 1 or m < 2 * p:
        raise ColoringError(f"need p >= 1 and m >= 2p, got m={m}, p={p}")
    G = exact_distance_graph(strong(path(m), path(m)), p)
    c = Coloring(tuple(grid_pattern_color(i, j, p) for i in range(m) for j in range(m)))
    _ensure_proper(G, c)
    return G, c


def translate_coloring(n: int, c: Coloring, w: int) -> Coloring:
    """Colouring ``x -> c(x XOR w)`` of a hypercube-vertex set of size ``2^n``.

    Translations are automorphisms of every exact distance graph of ``Q_n``.
    """
    if len(c) != 1 << n:
        raise ColoringError("translation needs a colouring of all 2^n vertices")
    return Coloring(tuple(c[x ^ w] for x in range(1 << n)))


def complement_level_coloring(n: int, k: int, c: Coloring) -> Coloring:
    """Move a colouring of the ``k``-subsets onto the ``(n-k)``-subsets by complementation."""
    src = {m: i for i, m in enumerate(subsets(n, k))}
    full = (1 << n) - 1
    return Coloring(tuple(c[src[full ^ m]] for m in subsets(n, n - k)))


def _ensure_proper(G, c):
    res = validate_coloring(G, c)
    if not res.proper:
        raise AssertionError(f"constructed colouring is improper on {res.violations[:3]}")
