import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import graphs, nx_distances, to_nx
from exactdist.exact_distance import BudgetExceeded, exact_distance_graph, path_power
from exactdist.families import complete, cycle, hypercube, path
from exactdist.graph import GraphError


@given(graphs(), st.integers(0, 6))
def test_exact_distance_against_networkx(G, p):
    X = exact_distance_graph(G, p)
    d = nx_distances(G)
    assert np.array_equal(X.adjacency, d == p)
    assert X.labels == G.labels


@given(graphs(), st.integers(1, 5))
def test_exact_distance_inside_path_power(G, p):
    X, Y = exact_distance_graph(G, p), path_power(G, p)
    assert not (X.adjacency & ~Y.adjacency).any()


def _brute_path_power(G, p):
    X = to_nx(G)
    A = np.zeros((G.order, G.order), dtype=bool)
    for u, v in itertools.combinations(range(G.order), 2):
        if any(len(P) == p + 1 for P in nx.all_simple_paths(X, u, v, cutoff=p)):
            A[u, v] = A[v, u] = True
    return A


@given(graphs(max_order=6), st.integers(1, 4))
def test_path_power_brute_force(G, p):
    assert np.array_equal(path_power(G, p).adjacency, _brute_path_power(G, p))


def test_zero_gives_loops():
    X = exact_distance_graph(path(3), 0)
    assert X.has_loops and X.num_edges == 3


def test_frozen_edge_counts():
    # |E(Q_n^[p])| = 2^(n-1) C(n,p); C_n^[p] is 2-regular for p < n/2
    from math import comb

    for n in range(1, 7):
        for p in range(1, n + 1):
            assert exact_distance_graph(hypercube(n), p).num_edges == 2 ** (n - 1) * comb(n, p)
    assert exact_distance_graph(cycle(9), 3).num_edges == 9
    assert exact_distance_graph(cycle(8), 4).num_edges == 4
    assert exact_distance_graph(complete(5), 2).num_edges == 0


def test_errors():
    with pytest.raises(GraphError):
        exact_distance_graph(path(3), -1)
    with pytest.raises(GraphError):
        exact_distance_graph(exact_distance_graph(path(3), 0), 1)
    with pytest.raises(GraphError):
        path_power(path(3), 0)
    with pytest.raises(BudgetExceeded):
        path_power(complete(9), 6, budget=10)
