"""Level-by-level colourings of ``Q_n^[t]`` for ``t`` in ``{n-2, n-3, n-4}``.

The three constructions colour one or two middle levels with Johnson-graph
colourings and sweep the outer levels with one colour per side. Each rule is
applied exactly as stated, to every level it names, and the result is checked.
A rule that leaves levels uncovered, or that colours a level improperly, is
completed: by default the parity class holding the named middle level is kept
and the other class receives a translate of it (``x -> x XOR w`` is an
automorphism exchanging the two classes). ``completion="levels"`` instead
colours each missing level on its own and reuses a colour only across levels
that cannot be adjacent.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from importlib import resources

import numpy as np

from ..exact_distance import exact_distance_graph
from ..families import (
    hypercube, johnson, level_adjacent, subsets, vertex_subset, weights,
)
from ..graph import Graph, induced_subgraph
from .constructions import complement_level_coloring, kneser_coloring
from .core import Coloring, validate_coloring
from .solver import exact_chromatic, improve_coloring

log = logging.getLogger(__name__)

CERTIFICATES = {(8, 4, 1): "j841_5coloring.json"}
LEVEL_BUDGET = 200_000


def load_certificate(n: int, k: int, i: int) -> Coloring | None:
    name = CERTIFICATES.get((n, k, i))
    if name is None:
        return None
    data = json.loads(resources.files("exactdist.data").joinpath(name).read_text())
    c = Coloring(tuple(data["colors"]))
    if not validate_coloring(johnson(n, k, i), c).proper:
        raise AssertionError(f"stored certificate for J({n},{k},{i}) is improper")
    return c


def johnson_coloring(n: int, k: int, i: int, budget: int = LEVEL_BUDGET, seed: int = 0) -> Coloring:
    """A small colouring of ``J(n,k,i)``: exact when the solver finishes, else tabu-improved.

    A stored certificate is used when it beats an unfinished search.
    """
    if i == 0 and 2 * k <= n:
        return kneser_coloring(n, k)
    G = johnson(n, k, i)
    res = exact_chromatic(G, budget=budget)
    if res.exact:
        return res.coloring
    best = improve_coloring(G, res.coloring, seed=seed, floor=res.lower)
    cert = load_certificate(n, k, i)
    if cert is not None and cert.count < best.count:
        best = cert
    log.info("J(%d,%d,%d): undecided, using %d colours", n, k, i, best.count)
    return best


def default_level_coloring(n: int, t: int, j: int, **kw) -> Coloring:
    """Colouring of level ``j`` of ``Q_n^[t]``, which induces ``J(n, j, j - t/2)``.

    Levels above the middle are reached from the mirror level by complementation.
    """
    if 2 * j > n:
        return complement_level_coloring(n, n - j, default_level_coloring(n, t, n - j, **kw))
    return johnson_coloring(n, j, j - t // 2, **kw)


@dataclass(frozen=True)
class LayeredReport:
    n: int
    target: int
    variant: str
    coloring: Coloring | None
    count: int
    proper: bool
    printed_rule_sufficient: bool
    uncovered_levels: tuple
    improper_levels: tuple
    completion: str
    primary_parity: int
    level_colors: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "n": self.n, "target": self.target, "variant": self.variant, "count": self.count,
            "proper": self.proper, "printed_rule_sufficient": self.printed_rule_sufficient,
            "uncovered_levels": list(self.uncovered_levels),
            "improper_levels": list(self.improper_levels), "completion": self.completion,
            "primary_parity": self.primary_parity,
            "level_colors": {str(k): v for k, v in sorted(self.level_colors.items())},
        }


def _plan(n: int, target: int, variant: str):
    """Printed rule as (named levels, sweeps, primary parity).

    ``named`` lists the levels that get a Johnson colouring, in palette order;
    ``sweeps`` is a list of (level predicate, colour choice) where the choice is
    either ``"new"`` (one fresh colour) or ``("reuse", level)``.
    """
    t = target
    if t == n - 2:
        if n % 2 or n < 4:
            raise ValueError("the n-2 construction needs even n >= 4")
        m = n // 2
        return [m], [(lambda i: i <= (n - 4) // 2, "new"), (lambda i: i >= (n + 4) // 2, "new")], m % 2
    if t == n - 3:
        if n % 2 == 0 or n < 5:
            raise ValueError("the n-3 construction needs odd n >= 5")
        lo, hi = (n - 3) // 2, (n + 1) // 2
        return [lo, hi], [(lambda i: i > (n + 3) // 2, "new"),
                          (lambda i: i < lo, ("reuse", lo))], lo % 2
    if t == n - 4:
        if n % 2 or n < 6:
            raise ValueError("the n-4 construction needs even n >= 6")
        if variant == "first":
            lo, mid, hi = (n - 4) // 2, n // 2, (n + 4) // 2
            return [lo, hi, mid], [(lambda i: i < (n - 2) // 2 and i != lo, ("reuse", lo)),
                                   (lambda i: i > (n + 2) // 2 and i != hi, ("reuse", hi))], lo % 2
        lo, hi = (n - 2) // 2, (n + 2) // 2
        return [lo, hi], [(lambda i: i <= (n - 6) // 2, "new"), (lambda i: i >= (n + 4) // 2, "new")], lo % 2
    raise ValueError(f"target must be n-2, n-3 or n-4, got {t} for n={n}")


def layered_coloring(n: int, target: int, sub_colorings: dict | None = None,
                     variant: str = "second", completion: str = "translate",
                     G: Graph | None = None, budget: int = LEVEL_BUDGET) -> LayeredReport:
    """Assemble the layered colouring of ``Q_n^[target]``.

    ``sub_colorings`` maps a level ``j`` to a colouring of its subsets in
    colex order; missing levels are coloured by ``default_level_coloring``.
    """
    if completion not in ("translate", "levels"):
        raise ValueError("completion must be 'translate' or 'levels'")
    if variant not in ("first", "second"):
        raise ValueError("variant must be 'first' or 'second'")
    named, sweeps, parity = _plan(n, target, variant)
    sub = dict(sub_colorings or {})
    if G is None:
        G = exact_distance_graph(hypercube(n), target)
    w = weights(n)
    N = 1 << n
    col = np.zeros(N, dtype=np.int64)
    next_colour = 1
    for j in named:
        c = sub.get(j) or default_level_coloring(n, target, j, budget=budget)
        sub[j] = c
        canon = c.canonical()
        idx = {m: k for k, m in enumerate(subsets(n, j))}
        for v in np.flatnonzero(w == j):
            col[v] = next_colour - 1 + canon[idx[vertex_subset(n, int(v)).mask]]
        next_colour += canon.count
    for pred, choice in sweeps:
        if choice == "new":
            colour = next_colour
            next_colour += 1
        else:
            colour = 1 if choice[1] == named[0] else int(col[w == choice[1]].min())
        for i in range(n + 1):
            if i not in named and pred(i):
                col[w == i] = colour
    uncovered = tuple(i for i in range(n + 1) if not col[w == i].all())
    A = G.adjacency
    assigned = col > 0
    bad = np.triu(A & assigned[:, None] & assigned[None, :] & (col[:, None] == col[None, :]))
    us, vs = np.nonzero(bad)
    improper = tuple(sorted(set(w[us].tolist()) | set(w[vs].tolist())))
    sufficient = not uncovered and not improper

    method = "none"
    if not sufficient:
        method = completion
        if completion == "translate":
            col = _translate_complete(n, col, w, parity)
        else:
            col = _levels_complete(n, target, col, w, G, set(uncovered) | set(improper), budget)
    out = Coloring(tuple(col.tolist()))
    check = validate_coloring(G, out)
    level_colors = {i: sorted(set(col[w == i].tolist())) for i in range(n + 1)}
    return LayeredReport(n, target, variant if target == n - 4 else "", out, out.count, check.proper,
                         sufficient, uncovered, improper, method, parity, level_colors,
                         check.violations[:10])


def _translate_complete(n, col, w, parity):
    # keep the primary parity class, copy it onto the other one by x -> x ^ shift
    shift = (1 << n) - 1 if n % 2 else 1 << (n - 1)
    primary = (w % 2) == parity
    if not col[primary].all():
        raise AssertionError("printed rule leaves part of its own parity class uncovered")
    out = col.copy()
    for x in np.flatnonzero(~primary):
        out[x] = col[x ^ shift]
    return out


def _levels_complete(n, t, col, w, G, redo, budget):
    col = col.copy()
    for i in sorted(redo):
        col[w == i] = 0
    for i in sorted(redo):
        verts = np.flatnonzero(w == i).tolist()
        H = induced_subgraph(G, verts)
        lc = exact_chromatic(H, budget=budget).coloring
        # colours already present on some level adjacent to i are off limits
        blocked = set()
        for j in range(n + 1):
            if col[w == j].any() and level_adjacent(n, t, i, j):
                blocked |= set(col[w == j].tolist())
        blocked.discard(0)
        palette = sorted(set(col.tolist()) - {0} - blocked)
        fresh = int(col.max()) + 1
        mapping = {}
        for c in sorted(set(lc.colors)):
            if palette:
                mapping[c] = palette.pop(0)
            else:
                mapping[c] = fresh
                fresh += 1
        for k, v in enumerate(verts):
            col[v] = mapping[lc[k]]
    return col
