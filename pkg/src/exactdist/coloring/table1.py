"""Bounds table for ``chi(Q_n^[p])``, ``6 <= n <= 10``, even ``p >= 4``.

Each cell combines the formula bounds, exact values from the solver where the
graph is small enough, and the best colouring actually constructed. The
printed reference cells are compared with what the formulas and computations
give.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from ..exact_distance import exact_distance_graph
from ..families import hypercube
from .bounds import BoundRecord, chi_bound_formulas
from .layered import layered_coloring
from .solver import exact_chromatic

log = logging.getLogger(__name__)

# reference cells: exact values as ints, brackets as (lower, upper)
PRINTED = {
    (6, 4): 7, (6, 6): 2,
    (7, 4): 8, (7, 6): 4,
    (8, 4): 8, (8, 6): (4, 7), (8, 8): 2,
    (9, 4): 8, (9, 6): (5, 15), (9, 8): (4, 8),
    (10, 6): (6, 26), (10, 8): (5, 15), (10, 10): 2,
}
ROWS = range(6, 11)
COLS = (4, 6, 8, 10)
EXACT_MAX_N = 8
TABLE_BUDGET = 200_000


@dataclass(frozen=True)
class Table1Cell:
    bounds: BoundRecord
    computed: int | None
    computed_note: str
    constructive_upper: int | None
    constructive_source: str
    printed: object

    @property
    def n(self):
        return self.bounds.n

    @property
    def p(self):
        return self.bounds.p

    @property
    def exact(self) -> int | None:
        if self.computed is not None:
            return self.computed
        return self.bounds.exact

    def cell(self) -> str:
        e = self.exact
        return str(e) if e is not None else f"{self.bounds.lower}-{self.bounds.upper}"

    @property
    def printed_str(self) -> str:
        if self.printed is None:
            return ""
        if isinstance(self.printed, tuple):
            return f"{self.printed[0]}-{self.printed[1]}"
        return str(self.printed)

    @property
    def matches(self) -> bool | None:
        if self.printed is None:
            return None
        return self.cell() == self.printed_str

    def to_json(self) -> dict:
        d = self.bounds.to_json()
        d.update(cell=self.cell(), computed=self.computed, computed_note=self.computed_note,
                 constructive_upper=self.constructive_upper,
                 constructive_source=self.constructive_source,
                 printed=self.printed_str or None, matches=self.matches)
        return d


def _constructive(n, p):
    t = n - p
    if (t in (2, 4) and n % 2 == 0) or (t == 3 and n % 2 == 1):
        try:
            rep = layered_coloring(n, p)
        except ValueError:
            return None, ""
        if rep.proper:
            return rep.count, f"layered (n-{t}), completion={rep.completion}"
    return None, ""


def table1_report(compute: bool = True, budget: int = TABLE_BUDGET,
                  constructive: bool = True) -> list[Table1Cell]:
    """All cells with ``p <= n``; only the reference cells carry a printed value."""
    out = []
    for n in ROWS:
        for p in COLS:
            if p > n:
                continue
            rec = chi_bound_formulas(n, p)
            computed, note = None, ""
            best_up, src = None, ""
            if compute and n <= EXACT_MAX_N:
                res = exact_chromatic(exact_distance_graph(hypercube(n), p), budget=budget)
                if res.exact:
                    computed, note = res.value, "solver"
                else:
                    note = f"solver {res}"
                best_up, src = res.upper, "solver colouring"
            if constructive and n <= 10:
                c, s = _constructive(n, p)
                if c is not None and (best_up is None or c < best_up):
                    best_up, src = c, s
            if computed is not None and rec.exact is not None and computed != rec.exact:
                log.warning("solver value %d disagrees with formula value %d at (%d,%d)",
                            computed, rec.exact, n, p)
            out.append(Table1Cell(rec, computed, note, best_up, src, PRINTED.get((n, p))))
    return out


def format_table(cells: list[Table1Cell]) -> str:
    by = {(c.n, c.p): c for c in cells}
    head = "n\\p".rjust(5) + "".join(f"{p:>14}" for p in COLS)
    lines = [head]
    for n in ROWS:
        row = f"{n:>5}"
        for p in COLS:
            c = by.get((n, p))
            if c is None:
                row += f"{'':>14}"
                continue
            text = c.cell()
            if c.matches is False:
                text += f" [{c.printed_str}]"
            row += f"{text:>14}"
        lines.append(row)
    lines.append("")
    lines.append("bracketed entries are reference values that differ from the computed cell")
    return "\n".join(lines)
