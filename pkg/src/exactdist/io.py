"""Graph and colouring files.

* xdg v1: header ``xdg n=<order> loops=<0|1>`` then one ``e u v`` line per
  edge, 0-based; a loop is ``e v v``. Blank lines and ``#`` comments are skipped.
* DIMACS ``.col``: ``c`` comments, ``p edge n m``, ``e u v`` 1-based.
* JSON graphs: ``{"n", "loops", "edges", "labels"}``.
* colourings: JSON ``{"vertex": colour}`` or ``s col k`` followed by
  ``l v c`` lines (1-based vertices).
"""

from __future__ import annotations

import json
import re

from .coloring.core import Coloring, ColoringError
from .graph import Graph, GraphError, build_graph

_XDG_HEADER = re.compile(r"^xdg\s+n=(\d+)\s+loops=([01])\s*$")


class GraphFormatError(GraphError):
    pass


def _lines(text):
    for k, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield k, line


def write_xdg(G: Graph) -> str:
    out = [f"xdg n={G.order} loops={int(G.loops_allowed)}"]
    out += [f"e {u} {v}" for u, v in G.edges()]
    return "\n".join(out) + "\n"


def read_xdg(text: str) -> Graph:
    lines = _lines(text)
    try:
        k, head = next(lines)
    except StopIteration:
        raise GraphFormatError("empty xdg file") from None
    m = _XDG_HEADER.match(head)
    if not m:
        raise GraphFormatError(f"line {k}: bad xdg header {head!r}")
    n, loops = int(m.group(1)), m.group(2) == "1"
    edges = []
    for k, line in lines:
        parts = line.split()
        if len(parts) != 3 or parts[0] != "e":
            raise GraphFormatError(f"line {k}: expected 'e u v', got {line!r}")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise GraphFormatError(f"line {k}: non-integer vertex") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {k}: vertex out of range 0..{n - 1}")
        if u == v and not loops:
            raise GraphFormatError(f"line {k}: loop in a loops=0 file")
        edges.append((u, v))
    return build_graph(n, edges, loops_allowed=loops)


def write_dimacs(G: Graph, comment: str = "") -> str:
    out = [f"c {line}" for line in comment.splitlines()] if comment else []
    edges = G.edges()
    out.append(f"p edge {G.order} {len(edges)}")
    out += [f"e {u + 1} {v + 1}" for u, v in edges]
    return "\n".join(out) + "\n"


def read_dimacs(text: str) -> Graph:
    n = None
    declared = 0
    edges = []
    for k, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] not in ("edge", "col") or n is not None:
                raise GraphFormatError(f"line {k}: bad problem line {raw!r}")
            n, declared = int(parts[2]), int(parts[3])
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError(f"line {k}: edge before problem line")
            if len(parts) != 3:
                raise GraphFormatError(f"line {k}: expected 'e u v'")
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"line {k}: vertex out of range 1..{n}")
            edges.append((u, v))
        else:
            raise GraphFormatError(f"line {k}: unknown line type {parts[0]!r}")
    if n is None:
        raise GraphFormatError("missing problem line")
    G = build_graph(n, edges, loops_allowed=any(u == v for u, v in edges))
    if G.num_edges != declared:
        raise GraphFormatError(f"problem line declares {declared} edges, found {G.num_edges} distinct")
    return G


def write_json_graph(G: Graph) -> str:
    labels = None if G.labels is None else [str(lab) for lab in G.labels]
    return json.dumps({"n": G.order, "loops": G.loops_allowed,
                       "edges": [list(e) for e in G.edges()], "labels": labels}, sort_keys=True) + "\n"


def read_json_graph(text: str) -> Graph:
    try:
        d = json.loads(text)
        return build_graph(int(d["n"]), [tuple(e) for e in d["edges"]],
                           loops_allowed=bool(d.get("loops", False)), labels=d.get("labels"))
    except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
        raise GraphFormatError(f"bad JSON graph: {exc}") from None


WRITERS = {"xdg": write_xdg, "dimacs": write_dimacs, "json": write_json_graph}
READERS = {"xdg": read_xdg, "dimacs": read_dimacs, "json": read_json_graph}


def sniff_format(text: str) -> str:
    for _, line in _lines(text):
        if line.startswith("xdg"):
            return "xdg"
        if line.startswith("{"):
            return "json"
        if line[0] in "cpe":
            return "dimacs"
        break
    raise GraphFormatError("cannot tell the graph format")


def read_graph(text: str, fmt: str | None = None) -> Graph:
    fmt = fmt or sniff_format(text)
    if fmt not in READERS:
        raise GraphFormatError(f"unknown format {fmt!r}")
    return READERS[fmt](text)


def write_graph(G: Graph, fmt: str = "xdg") -> str:
    if fmt not in WRITERS:
        raise GraphFormatError(f"unknown format {fmt!r}")
    return WRITERS[fmt](G)


def write_coloring_json(c: Coloring) -> str:
    return json.dumps(c.to_json(), sort_keys=True) + "\n"


def write_coloring_lines(c: Coloring) -> str:
    out = [f"s col {c.count}"] + [f"l {v + 1} {col}" for v, col in enumerate(c.colors)]
    return "\n".join(out) + "\n"


def read_coloring(text: str) -> Coloring:
    text = text.strip()
    if text.startswith("{"):
        return Coloring.from_json(json.loads(text))
    colors = {}
    for k, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] in ("c", "s"):
            continue
        if parts[0] != "l" or len(parts) != 3:
            raise ColoringError(f"line {k}: expected 'l v c'")
        colors[int(parts[1]) - 1] = int(parts[2])
    n = len(colors)
    if sorted(colors) != list(range(n)):
        raise ColoringError("colouring is not total")
    return Coloring(tuple(colors[v] for v in range(n)))
