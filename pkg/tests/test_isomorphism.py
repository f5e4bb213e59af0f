import numpy as np
from hypothesis import given, strategies as st

from conftest import graphs
from exactdist.families import cycle, hypercube, johnson, kneser_general, path
from exactdist.graph import Graph, permute
from exactdist.isomorphism import ISOMORPHIC, NOT_ISOMORPHIC, UNDECIDED, are_isomorphic, verify_isomorphism


@given(graphs(max_order=8), st.randoms())
def test_permuted_copy_is_isomorphic(G, rnd):
    order = list(range(G.order))
    rnd.shuffle(order)
    H = permute(G, order)
    res = are_isomorphic(G, H)
    assert res.status == ISOMORPHIC
    assert verify_isomorphism(G, H, res.mapping)


def test_known_pairs():
    assert are_isomorphic(johnson(5, 2, 0), kneser_general(5, 2, 0))
    assert are_isomorphic(cycle(6), path(6)).status == NOT_ISOMORPHIC
    # frozen: C_6 vs two triangles share the degree sequence
    two_tri = Graph(np.kron(np.eye(2, dtype=bool), ~np.eye(3, dtype=bool)))
    assert are_isomorphic(cycle(6), two_tri).status == NOT_ISOMORPHIC


def test_budget_reports_undecided():
    res = are_isomorphic(hypercube(5), hypercube(5), budget=1)
    assert res.status in (UNDECIDED, ISOMORPHIC)
    assert res.decided == (res.status != UNDECIDED)


def test_verify_rejects_non_bijection():
    assert not verify_isomorphism(path(3), path(3), (0, 0, 1))
    assert not verify_isomorphism(path(3), path(3), (1, 0, 2))
