"""Backend selection for the hot loops.

The compiled extension is used when it imports; set ``EXACTDIST_PURE_PYTHON=1``
to force the pure-Python fallback.
"""

import os

from . import _fallback

BACKEND = "python"
if os.environ.get("EXACTDIST_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _impl

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _fallback
else:
    _impl = _fallback


def get_backend(name=None):
    """Return the kernel module for ``name`` ("cython", "python") or the active one."""
    if name is None:
        return _impl
    if name == "python":
        return _fallback
    if name == "cython":
        from . import _kernels

        return _kernels
    raise ValueError(f"unknown backend {name!r}")


def bfs_all_pairs(indptr, indices, n):
    return _impl.bfs_all_pairs(indptr, indices, n)


def dsatur_search(indptr, indices, n, precolor, best, lower, budget):
    return _impl.dsatur_search(indptr, indices, n, precolor, best, lower, budget)
