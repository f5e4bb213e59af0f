import networkx as nx
import numpy as np
import pytest
from hypothesis import given

from conftest import graphs, nx_distances, to_nx
from exactdist.families import complete, path
from exactdist.graph import GraphError
from exactdist.products import ProductKind, product, product_distance, product_distance_matrix

NX = {
    "cartesian": nx.cartesian_product,
    "strong": nx.strong_product,
    "direct": nx.tensor_product,
    "lexicographic": nx.lexicographic_product,
}


@pytest.mark.parametrize("kind", list(NX))
@given(G=graphs(max_order=5), H=graphs(max_order=5))
def test_product_edges_match_networkx(kind, G, H):
    P = product(kind, G, H)
    X = NX[kind](to_nx(G), to_nx(H))
    m = H.order
    want = {frozenset((g1 * m + h1, g2 * m + h2)) for (g1, h1), (g2, h2) in X.edges()}
    assert {frozenset(e) for e in P.edges()} == want
    assert P.labels == tuple((g, h) for g in range(G.order) for h in range(m))


@pytest.mark.parametrize("kind", list(NX))
@given(G=graphs(max_order=4), H=graphs(max_order=4))
def test_distance_formula_matches_bfs(kind, G, H):
    P = product(kind, G, H)
    assert np.array_equal(product_distance_matrix(kind, G, H), nx_distances(P))


def test_frozen_distances():
    # P3 x K2 direct: bipartite double cover splits it; strong is max; lex uses 2 inside a fibre
    P3, K2 = path(3), complete(2)
    assert product_distance("direct", P3, K2, (0, 0), (0, 1)) is None
    assert product_distance("direct", P3, K2, (0, 0), (2, 0)) == 2
    assert product_distance("strong", P3, K2, (0, 0), (2, 1)) == 2
    assert product_distance("cartesian", P3, K2, (0, 0), (2, 1)) == 3
    assert product_distance("lexicographic", P3, path(3), (1, 0), (1, 2)) == 2
    # direct product of odd cycle with K2 is C_10: antipodal distance 5
    from exactdist.families import cycle
    d = product_distance_matrix("direct", cycle(5), K2)
    assert d.max() == 5


def test_kind_and_loop_errors():
    with pytest.raises(ValueError):
        product("tensorish", path(2), path(2))
    from exactdist.exact_distance import exact_distance_graph
    with pytest.raises(GraphError):
        product_distance("direct", exact_distance_graph(path(2), 0), path(2), (0, 0), (1, 1))
    assert ProductKind("strong") is ProductKind.STRONG
