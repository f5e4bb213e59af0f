import networkx as nx
import numpy as np
import pytest
from hypothesis import given

from conftest import graphs, nx_distances, to_nx
from exactdist.families import cycle, path
from exactdist.graph import (
    Graph, GraphError, build_graph, complement, connected_components, diameter, disjoint_copies,
    edge_union, induced_subgraph, is_bipartite, is_connected, radius,
)


@given(graphs())
def test_distances_match_networkx(G):
    assert np.array_equal(G.distances().entries, nx_distances(G))


@given(graphs())
def test_components_match_networkx(G):
    ours = sorted(sorted(c) for c in connected_components(G))
    theirs = sorted(sorted(c) for c in nx.connected_components(to_nx(G)))
    assert ours == theirs
    assert is_connected(G) == nx.is_connected(to_nx(G))


@given(graphs(min_order=2))
def test_bipartition_is_proper(G):
    parts = is_bipartite(G)
    assert (parts is not None) == nx.is_bipartite(to_nx(G))
    if parts is not None:
        side = {v: 0 for v in parts[0]} | {v: 1 for v in parts[1]}
        assert all(side[u] != side[v] for u, v in G.edges())


@given(graphs())
def test_complement_involution(G):
    C = complement(G)
    assert complement(C) == G
    assert G.num_edges + C.num_edges == G.order * (G.order - 1) // 2


def test_radius_diameter_of_paths_and_cycles():
    # frozen: rad(P_n) = floor(n/2), diam(P_n) = n-1, rad = diam = floor(n/2) on C_n
    for n in range(2, 9):
        assert radius(path(n)) == n // 2
        assert diameter(path(n)) == n - 1
    for n in range(3, 9):
        assert radius(cycle(n)) == diameter(cycle(n)) == n // 2


def test_rejects_bad_adjacency():
    with pytest.raises(GraphError):
        Graph(np.array([[0, 1], [0, 0]], dtype=bool))
    with pytest.raises(GraphError):
        Graph(np.eye(2, dtype=bool))
    with pytest.raises(GraphError):
        Graph(np.zeros((2, 2), dtype=bool), labels=[1, 1])


def test_union_copies_induced():
    P = path(4)
    U = edge_union(P, complement(P))
    assert U.num_edges == 6
    D = disjoint_copies(3, P)
    assert D.order == 12 and len(connected_components(D)) == 3
    S = induced_subgraph(build_graph(4, [(0, 1), (1, 2), (2, 3)]), [0, 2, 3])
    assert S.edges() == [(1, 2)]
