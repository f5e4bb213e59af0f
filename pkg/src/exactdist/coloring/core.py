from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..graph import Graph


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class Coloring:
    """Total map vertex -> colour, colours are positive integers."""

    colors: tuple

    def __post_init__(self):
        cols = tuple(int(c) for c in self.colors)
        if any(c < 1 for c in cols):
            raise ColoringError("colours must be positive integers")
        object.__setattr__(self, "colors", cols)

    @property
    def count(self) -> int:
        return len(set(self.colors))

    def __len__(self):
        return len(self.colors)

    def __getitem__(self, v):
        return self.colors[v]

    @classmethod
    def from_zero_based(cls, colors) -> "Coloring":
        return cls(tuple(int(c) + 1 for c in colors))

    def canonical(self) -> "Coloring":
        """Renumber colours 1..k in order of first appearance."""
        seen = {}
        return Coloring(tuple(seen.setdefault(c, len(seen) + 1) for c in self.colors))

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for v, c in enumerate(self.colors):
            out.setdefault(c, []).append(v)
        return out

    def to_json(self) -> dict:
        return {str(v): c for v, c in enumerate(self.colors)}

    @classmethod
    def from_json(cls, data: dict) -> "Coloring":
        n = len(data)
        try:
            return cls(tuple(int(data[str(v)]) for v in range(n)))
        except KeyError as exc:
            raise ColoringError(f"colouring is not total: missing vertex {exc}") from None


@dataclass(frozen=True)
class ValidationResult:
    proper: bool
    violations: list = field(default_factory=list)  # monochromatic edges (u, v), u <= v
    count: int = 0

    def __bool__(self):
        return self.proper


def validate_coloring(G: Graph, c: Coloring | list | tuple) -> ValidationResult:
    if not isinstance(c, Coloring):
        if any(x is None for x in c):
            raise ColoringError("colouring is not total")
        c = Coloring(tuple(c))
    if len(c) != G.order:
        raise ColoringError(f"colouring covers {len(c)} vertices, graph has {G.order}")
    col = np.asarray(c.colors)
    bad = np.triu(G.adjacency & (col[:, None] == col[None, :]))
    us, vs = np.nonzero(bad)
    violations = list(zip(us.tolist(), vs.tolist()))
    return ValidationResult(not violations, violations, c.count)
