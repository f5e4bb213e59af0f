"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import json
import time

from exactdist import kernels
from exactdist.coloring import exact_chromatic
from exactdist.exact_distance import exact_distance_graph
from exactdist.families import hypercube, johnson, kneser_general


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def bfs_case(G):
    indptr, indices = G.csr()
    return lambda name: kernels.get_backend(name).bfs_all_pairs(indptr, indices, G.order)


def dsatur_case(G):
    return lambda name: exact_chromatic(G, backend=name, reuse_isomorphic=False).upper


CASES = [
    ("bfs Q10", bfs_case(hypercube(10))),
    ("bfs J(10,4,1)", bfs_case(johnson(10, 4, 1))),
    ("dsatur Q7^[4]", dsatur_case(exact_distance_graph(hypercube(7), 4))),
    ("dsatur J(7,3,1)", dsatur_case(johnson(7, 3, 1))),
    ("dsatur K(7,3,1)", dsatur_case(kneser_general(7, 3, 1))),
    ("dsatur J(8,4,1)", dsatur_case(johnson(8, 4, 1))),
    ("dsatur Q8^[4]", dsatur_case(exact_distance_graph(hypercube(8), 4))),
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    try:
        kernels.get_backend("cython")
    except ImportError:
        print("compiled extension not built; nothing to compare")
        return
    rows = []
    for name, case in CASES:
        t_py, _ = _time(lambda: case("python"), args.repeat)
        t_cy, _ = _time(lambda: case("cython"), args.repeat)
        rows.append({"case": name, "python_s": round(t_py, 4), "cython_s": round(t_cy, 4),
                     "speedup": round(t_py / t_cy, 1) if t_cy else None})
        print(f"{name:18s} python {t_py:8.4f}s  cython {t_cy:8.4f}s  x{t_py / t_cy:6.1f}")
    print(json.dumps(rows, sort_keys=True))


if __name__ == "__main__":
    main()
