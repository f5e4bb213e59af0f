import numpy as np
import pytest
from hypothesis import given

from conftest import graphs
from exactdist import kernels
from exactdist.families import hypercube, johnson

BACKENDS = ["python"]
try:
    kernels.get_backend("cython")
    BACKENDS.append("cython")
except ImportError:
    pass


def test_active_backend_reported():
    assert kernels.BACKEND in ("cython", "python")


@pytest.mark.skipif(len(BACKENDS) < 2, reason="extension not built")
@given(graphs(max_order=9))
def test_bfs_backends_agree(G):
    indptr, indices = G.csr()
    a = kernels.get_backend("python").bfs_all_pairs(indptr, indices, G.order)
    b = kernels.get_backend("cython").bfs_all_pairs(indptr, indices, G.order)
    assert np.array_equal(np.asarray(a), np.asarray(b))


@pytest.mark.skipif(len(BACKENDS) < 2, reason="extension not built")
@pytest.mark.parametrize("G", [johnson(6, 3, 1), hypercube(4), johnson(7, 3, 0)], ids=["J631", "Q4", "K73"])
def test_dsatur_backends_agree(G):
    from exactdist.coloring import exact_chromatic

    a = exact_chromatic(G, backend="python")
    b = exact_chromatic(G, backend="cython")
    assert (a.lower, a.upper) == (b.lower, b.upper)


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.get_backend("fortran")
