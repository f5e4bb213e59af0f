import itertools
from math import comb

import numpy as np
import pytest
from hypothesis import given, strategies as st

from exactdist.exact_distance import exact_distance_graph
from exactdist.families import (
    SubsetLabel, bitstring, complete, cycle, edgeless, hypercube, hypercube_level, johnson,
    kneser_general, level_adjacent, level_sizes, path, subset_vertex, subsets, vertex_subset,
    weights,
)
from exactdist.graph import GraphError


def test_small_families():
    assert path(5).num_edges == 4
    assert cycle(6).num_edges == 6 and (cycle(6).degrees() == 2).all()
    assert complete(5).num_edges == 10
    assert edgeless(4).num_edges == 0
    with pytest.raises(GraphError):
        cycle(2)


@pytest.mark.parametrize("n", range(1, 8))
def test_hypercube(n):
    Q = hypercube(n)
    assert Q.order == 2 ** n and Q.num_edges == n * 2 ** (n - 1)
    assert Q.label_of(1) == bitstring(1, n)
    assert sum(level_sizes(n)) == 2 ** n


def _johnson_edges(n, k, i):
    return comb(n, k) * comb(k, i) * comb(n - k, k - i) // 2


@pytest.mark.parametrize("n,k,i", [(5, 2, 0), (6, 3, 1), (7, 3, 1), (8, 4, 2), (6, 2, 1), (7, 2, 0)])
def test_johnson_frozen_edge_counts(n, k, i):
    assert johnson(n, k, i).num_edges == _johnson_edges(n, k, i)
    assert kneser_general(n, k, i).num_edges == sum(_johnson_edges(n, k, j) for j in range(i + 1)
                                                    if j != k)


def test_petersen():
    K = johnson(5, 2, 0)
    assert K.order == 10 and (K.degrees() == 3).all()


def test_subsets_colex():
    masks = subsets(5, 2)
    assert masks == sorted(masks) and len(masks) == 10
    assert SubsetLabel(5, masks[0]).members == (1, 2)
    assert str(SubsetLabel.of(5, [1, 4])) == "{1,4}"


@given(st.integers(1, 10).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 2 ** n - 1))))
def test_vertex_subset_roundtrip(nv):
    n, v = nv
    lab = vertex_subset(n, v)
    assert subset_vertex(lab) == v
    assert lab.size == bin(v).count("1")
    assert [j for j in range(1, n + 1) if bitstring(v, n)[j - 1] == "1"] == list(lab.members)


def test_levels():
    assert hypercube_level(4, 2) == [int(v) for v in np.flatnonzero(weights(4) == 2)]


@pytest.mark.parametrize("n", range(2, 8))
def test_level_adjacency_brute_force(n):
    w = weights(n)
    for t in range(n + 1):
        X = exact_distance_graph(hypercube(n), t).adjacency if t else None
        for i, j in itertools.product(range(n + 1), repeat=2):
            if t == 0:
                want = False  # no edges between distinct words at distance 0
            else:
                want = bool(X[np.ix_(w == i, w == j)].any())
            assert level_adjacent(n, t, i, j) == want, (n, t, i, j)
