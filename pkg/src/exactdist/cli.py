"""Command-line entry point.

Exit codes: 0 success, 1 a verification failed, 2 usage or input error,
3 a search ran out of budget before deciding.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

import numpy as np

from . import io
from .coloring import (
    chi_bound_formulas, exact_chromatic, format_table, layered_coloring, table1_report,
    validate_coloring,
)
from .connectivity import hypercube_characterization, product_oracle
from .corpus import DEFAULT_SEED, gnp, pair_corpus
from .exact_distance import exact_distance_graph, path_power
from .families import complete, cycle, edgeless, hypercube, johnson, kneser_general, path
from .graph import GraphError
from .hypercube import (
    even_distance_decomposition_check, johnson_complement_isomorphism, level_induces_johnson_check,
    parity_components_check, qn_nminus1_isomorphism,
)
from .identities import distance_formula_check, grid_window_check, identity_fuzz
from .products import product

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNDECIDED = 0, 1, 2, 3
DEFAULT_BUDGET = 5_000_000


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _emit(args, text: str):
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read(path_):
    try:
        with open(path_) as fh:
            return io.read_graph(fh.read())
    except OSError as exc:
        raise UsageError(str(exc)) from None


def _int_labels(G):
    return G.relabel(list(range(G.order)))


FAMILIES = {
    "path": (1, path), "cycle": (1, cycle), "complete": (1, complete), "edgeless": (1, edgeless),
    "hypercube": (1, hypercube), "johnson": (3, johnson), "kneser": (3, kneser_general),
}


def cmd_gen(args):
    fam = args.family
    if fam == "random":
        if len(args.params) != 2:
            raise UsageError("random needs: order density")
        rng = np.random.default_rng(args.seed)
        G = gnp(int(args.params[0]), float(args.params[1]), rng)
    else:
        if fam not in FAMILIES:
            raise UsageError(f"unknown family {fam!r}")
        arity, fn = FAMILIES[fam]
        if len(args.params) != arity:
            raise UsageError(f"{fam} takes {arity} integer parameter(s)")
        G = fn(*(int(x) for x in args.params))
    _emit(args, io.write_graph(G, args.format))
    return EXIT_OK


def cmd_xdist(args):
    G = _read(args.graph)
    X = path_power(G, args.p) if args.path else exact_distance_graph(G, args.p)
    _emit(args, io.write_graph(X, args.format))
    return EXIT_OK


def cmd_product(args):
    G, H = _read(args.g), _read(args.h)
    _emit(args, io.write_graph(_int_labels(product(args.kind, G, H)), args.format))
    return EXIT_OK


def cmd_verify(args):
    lines, ok = [], True
    if args.what in ("cartesian-identity", "strong-identity", "direct-identity", "lex-identity"):
        ident = {"cartesian-identity": "cartesian", "strong-identity": "strong",
                 "direct-identity": "direct", "lex-identity": "lexicographic"}[args.what]
        ps = None if args.p is None else [args.p]
        for rep in identity_fuzz(ident, args.trials, args.seed, args.n, ps):
            ok &= rep.passed
            lines.append(rep.to_json())
    elif args.what == "distance-formula":
        for inst in pair_corpus(args.trials, args.seed, args.n):
            for kind in ("cartesian", "strong", "direct", "lexicographic"):
                rep = distance_formula_check(kind, inst.G, inst.H, inst.name)
                ok &= rep.passed
                lines.append(rep.to_json())
    elif args.what == "grid-window":
        for which in ("cartesian", "direct"):
            rep = grid_window_check(args.m, which)
            ok &= rep.passed
            lines.append(rep.to_json())
    else:
        raise UsageError(f"unknown verification {args.what!r}")
    _emit(args, "".join(_dump(x) + "\n" for x in lines))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_connectivity(args):
    if args.kind == "hypercube":
        if args.d is None:
            raise UsageError("hypercube needs --d")
        v = hypercube_characterization(args.d, args.p)
    else:
        if not (args.g and args.h):
            raise UsageError("product kinds need two graph files")
        v = product_oracle(args.kind, _read(args.g), _read(args.h), args.p)
    _emit(args, _dump(v.to_json()) + "\n")
    return EXIT_FAIL if v.agreement is False else EXIT_OK


def cmd_hypercube_checks(args):
    c = args.check
    need = {"decomposition": ("p",), "complement": ("k", "i"), "level": ("p", "i"), "parity": ("p",)}
    for name in need.get(c, ()):
        if getattr(args, name) is None:
            raise UsageError(f"{c} needs --{name}")
    if c == "f":
        r = qn_nminus1_isomorphism(args.n)
        out = {"check": "f", "n": args.n, "bijective": r.bijective, "isomorphism": r.isomorphism,
               **r.details}
        ok = bool(r)
    elif c == "decomposition":
        r = even_distance_decomposition_check(args.n, args.p, budget=args.budget_nodes)
        out = {"check": c, **r.to_json()}
        ok = r.passed
        if r.details["status"] == "undecided":
            _emit(args, _dump(out) + "\n")
            return EXIT_UNDECIDED
    elif c == "complement":
        r = johnson_complement_isomorphism(args.n, args.k, args.i)
        out = {"check": c, "n": args.n, "k": args.k, "i": args.i, "bijective": r.bijective,
               "isomorphism": r.isomorphism}
        ok = bool(r)
    elif c == "level":
        r = level_induces_johnson_check(args.n, args.p, args.i)
        out = {"check": c, **r.to_json()}
        ok = r.passed
    elif c == "parity":
        out = {"check": c, **parity_components_check(args.n, args.p, budget=args.budget_nodes)}
        ok = out["a_no_cross_edges"] and out["b_complement_isomorphism"] is not False
    else:
        raise UsageError(f"unknown check {c!r}")
    _emit(args, _dump(out) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def _table(args):
    cells = table1_report()
    if args.format == "json":
        text = _dump([c.to_json() for c in cells]) + "\n"
    else:
        text = format_table(cells) + "\n"
    _emit(args, text)
    return EXIT_OK if all(c.matches is not False for c in cells) else EXIT_FAIL


def cmd_chi(args):
    a = args.action
    if a == "exact":
        if len(args.params) != 1:
            raise UsageError("chi exact needs a graph file")
        res = exact_chromatic(_read(args.params[0]), budget=args.budget_nodes)
        out = {"result": str(res), "lower": res.lower, "upper": res.upper, "nodes": res.nodes}
        if args.coloring_out:
            with open(args.coloring_out, "w") as fh:
                fh.write(io.write_coloring_json(res.coloring))
        _emit(args, _dump(out) + "\n")
        return EXIT_OK if res.exact else EXIT_UNDECIDED
    if a == "bounds":
        if len(args.params) != 2:
            raise UsageError("chi bounds needs n p")
        _emit(args, _dump(chi_bound_formulas(*(int(x) for x in args.params)).to_json()) + "\n")
        return EXIT_OK
    if a == "table1":
        return _table(args)
    if a == "validate":
        if len(args.params) != 2:
            raise UsageError("chi validate needs a graph file and a colouring file")
        G = _read(args.params[0])
        try:
            with open(args.params[1]) as fh:
                c = io.read_coloring(fh.read())
        except OSError as exc:
            raise UsageError(str(exc)) from None
        res = validate_coloring(G, c)
        _emit(args, _dump({"proper": res.proper, "colors": res.count,
                           "violations": [list(e) for e in res.violations[:20]]}) + "\n")
        return EXIT_OK if res.proper else EXIT_FAIL
    if a == "layered":
        if len(args.params) != 2:
            raise UsageError("chi layered needs n target")
        n, t = (int(x) for x in args.params)
        rep = layered_coloring(n, t, variant=args.variant)
        if args.coloring_out:
            with open(args.coloring_out, "w") as fh:
                fh.write(io.write_coloring_json(rep.coloring))
        _emit(args, _dump(rep.to_json()) + "\n")
        return EXIT_OK if rep.proper else EXIT_FAIL
    raise UsageError(f"unknown chi action {a!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help=f"seed for all randomness (default {DEFAULT_SEED})")
    common.add_argument("--budget-nodes", type=int, default=DEFAULT_BUDGET,
                        help="search node budget")
    common.add_argument("--format", choices=["xdg", "dimacs", "json", "text"], default=None)
    common.add_argument("-o", "--output", help="write to this file instead of stdout")

    ap = argparse.ArgumentParser(prog="exactdist", description="Exact distance graphs of graph products.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", parents=[common], help="generate a graph family")
    s.add_argument("family", help="path|cycle|complete|edgeless|hypercube|johnson|kneser|random")
    s.add_argument("params", nargs="*")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("xdist", parents=[common], help="exact distance graph of a graph file")
    s.add_argument("graph")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--path", action="store_true", help="simple-path graph instead")
    s.set_defaults(func=cmd_xdist)

    s = sub.add_parser("product", parents=[common], help="product of two graph files")
    s.add_argument("kind", choices=["cartesian", "strong", "direct", "lexicographic"])
    s.add_argument("g")
    s.add_argument("h")
    s.set_defaults(func=cmd_product)

    s = sub.add_parser("verify", parents=[common], help="fuzz an identity, JSON lines out")
    s.add_argument("what", help="cartesian-identity|strong-identity|direct-identity|lex-identity|"
                                "distance-formula|grid-window")
    s.add_argument("--n", type=int, default=8, help="largest factor order")
    s.add_argument("--p", type=int, default=None)
    s.add_argument("--trials", type=int, default=200)
    s.add_argument("--m", type=int, default=12, help="grid side for grid-window")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("connectivity", parents=[common], help="predicted vs actual connectivity")
    s.add_argument("kind", choices=["cartesian", "strong", "direct", "lexicographic", "hypercube"])
    s.add_argument("g", nargs="?")
    s.add_argument("h", nargs="?")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--d", type=int)
    s.set_defaults(func=cmd_connectivity)

    s = sub.add_parser("hypercube-checks", parents=[common], help="hypercube structure checks")
    s.add_argument("check", choices=["f", "decomposition", "complement", "level", "parity"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--p", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--i", type=int)
    s.set_defaults(func=cmd_hypercube_checks)

    s = sub.add_parser("chi", parents=[common], help="chromatic numbers and colourings")
    s.add_argument("action", choices=["exact", "bounds", "table1", "validate", "layered"])
    s.add_argument("params", nargs="*")
    s.add_argument("--coloring-out", help="also write the colouring (JSON)")
    s.add_argument("--variant", choices=["first", "second"], default="second")
    s.set_defaults(func=cmd_chi)

    s = sub.add_parser("table1", parents=[common], help="bounds table for hypercubes")
    s.set_defaults(func=_table)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    if args.format is None:
        args.format = "xdg" if args.command in ("gen", "xdist", "product") else "text"
    if args.command in ("gen", "xdist", "product") and args.format == "text":
        args.format = "xdg"
    try:
        return args.func(args)
    except (UsageError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
