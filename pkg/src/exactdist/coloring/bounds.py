"""Closed-form bounds on the chromatic number of ``Q_n^[p]``.

Each bound carries a short provenance string. Only formulas are used here;
computed and constructive values are layered on top by the table report.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, comb, log2

# literature values quoted as exact, keyed by (n, p)
LITERATURE_EXACT = {
    (6, 4): (7, "literature: chi(Q_6^[4]) = 7"),
    (7, 4): (8, "literature: chi(Q_7^[4]) = 8"),
    (8, 4): (8, "literature: chi(Q_8^[4]) = 8"),
    (9, 4): (8, "literature (cited in table): chi(Q_9^[4]) = 8"),
}
LITERATURE_UPPER = {
    (8, 6): (8, "literature: chi(Q_8^[6]) <= 8"),
    (9, 6): (16, "literature: chi(Q_9^[6]) <= 16"),
}
# known chromatic numbers of the middle-level Johnson graphs J(n, n/2, 1)
JOHNSON_MIDDLE_1 = {6: 6, 8: 5}
K831_UPPER = 12
K631_UPPER = 6
K731_UPPER = 9


@dataclass(frozen=True)
class BoundRecord:
    n: int
    p: int
    lower: int
    lower_source: str
    upper: int
    upper_source: str
    exact: int | None = None
    exact_source: str = ""

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"lower {self.lower} exceeds upper {self.upper} at ({self.n},{self.p})")
        if self.exact is not None and not self.lower <= self.exact <= self.upper:
            raise ValueError(f"exact {self.exact} outside [{self.lower},{self.upper}]")

    def cell(self) -> str:
        if self.exact is not None:
            return str(self.exact)
        if self.lower == self.upper:
            return str(self.lower)
        return f"{self.lower}-{self.upper}"

    def to_json(self) -> dict:
        return {"n": self.n, "p": self.p, "lower": self.lower, "lower_source": self.lower_source,
                "upper": self.upper, "upper_source": self.upper_source,
                "exact": self.exact, "exact_source": self.exact_source}


def kneser_chi(n: int, k: int) -> int:
    """Chromatic number of ``J(n,k,0)``; edgeless (one colour) when ``2k > n``."""
    if 2 * k > n:
        return 1
    return n - 2 * k + 2


def lower_bounds(n: int, p: int) -> list[tuple[int, str]]:
    out = [(2, "has an edge")]
    if p % 2 == 0 and p < n:
        k = p // 2
        out.append((kneser_chi(n, k), f"induced J({n},{k},0) on level {k}"))
    if n % 2 == 0 and p % 2 == 0 and p < n:
        i = (n - p) // 2
        out.append((i + 2, f"induced J({n},{n // 2},{i}) on the middle level"))
    if n % 2 == 1 and p == n - 1 and n >= 3:
        out.append((4, "odd n, p = n-1"))
    if (n, p) in LITERATURE_EXACT:
        out.append(LITERATURE_EXACT[(n, p)])
    return out


def upper_bounds(n: int, p: int) -> list[tuple[int, str]]:
    out = [(2 ** ceil(log2(1 + comb(n - 1, p - 1))), "binary-code bound 2^ceil(log2(1+C(n-1,p-1)))")]
    if p % 2 == 1:
        out.append((2, "odd p: bipartite"))
    if p == n and n % 2 == 0:
        out.append((2, "p = n even: perfect matching"))
    if n % 2 == 1 and p == n - 1 and n >= 3:
        out.append((4, "odd n, p = n-1"))
    if n % 2 == 0 and n >= 4 and p == n - 2:
        out.append((8, "n even, p = n-2: at most 8"))
        if n in JOHNSON_MIDDLE_1:
            out.append((JOHNSON_MIDDLE_1[n] + 2, f"chi(J({n},{n // 2},1)) + 2"))
    if n % 2 == 1 and n >= 5 and p == n - 3:
        out.append((15, "n odd, p = n-3: at most 15"))
        k = (n - 3) // 2
        out.append((kneser_chi(n, k) + K731_UPPER + 1,
                    f"chi(J({n},{k},0)) + chi(K(7,3,1)) + 1"))
    if n % 2 == 0 and n >= 6 and p == n - 4:
        out.append((2 * K831_UPPER + 2, "n even, p = n-4: 2 chi(K(8,3,1)) + 2"))
        k = (n - 4) // 2
        out.append((2 * kneser_chi(n, k) + 2 * comb(6, 3),
                    f"2 chi(J({n},{k},0)) + chi(J({n},{n // 2},2)), middle level bounded by 2 C(6,3)"))
    if (n, p) in LITERATURE_UPPER:
        out.append(LITERATURE_UPPER[(n, p)])
    if (n, p) in LITERATURE_EXACT:
        out.append(LITERATURE_EXACT[(n, p)])
    return out


def chi_bound_formulas(n: int, p: int) -> BoundRecord:
    """Best formula bounds on ``chi(Q_n^[p])`` for ``1 <= p <= n``."""
    if not 1 <= p <= n:
        raise ValueError(f"need 1 <= p <= n, got n={n}, p={p}")
    lo = max(lower_bounds(n, p), key=lambda t: t[0])
    up = min(upper_bounds(n, p), key=lambda t: t[0])
    exact = lo[0] if lo[0] == up[0] else None
    src = ""
    if exact is not None:
        src = lo[1] if lo[1] == up[1] else f"{lo[1]}; {up[1]}"
    return BoundRecord(n, p, lo[0], lo[1], up[0], up[1], exact, src)
