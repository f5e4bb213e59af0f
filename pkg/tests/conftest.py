import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from exactdist.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_order=1, max_order=7):
    n = draw(st.integers(min_order, max_order))
    pairs = list(itertools.combinations(range(n), 2))
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    adj = np.zeros((n, n), dtype=bool)
    for (u, v), b in zip(pairs, bits):
        adj[u, v] = adj[v, u] = b
    return Graph(adj, False, list(range(n)))


def to_nx(G: Graph) -> nx.Graph:
    X = nx.Graph()
    X.add_nodes_from(range(G.order))
    X.add_edges_from(G.edges())
    return X


def nx_distances(G: Graph) -> np.ndarray:
    d = np.full((G.order, G.order), -1, dtype=np.int64)
    for u, row in nx.all_pairs_shortest_path_length(to_nx(G)):
        for v, k in row.items():
            d[u, v] = k
    return d


def brute_chromatic(G: Graph) -> int:
    """Smallest k admitting a proper colouring, by trying every assignment."""
    n = G.order
    if n == 0:
        return 0
    edges = [(u, v) for u, v in G.edges() if u != v]
    for k in range(1, n + 1):
        for col in itertools.product(range(k), repeat=n - 1):
            col = (0,) + col
            if all(col[u] != col[v] for u, v in edges):
                return k
    return n


@pytest.fixture
def run_cli(capsys):
    from exactdist.cli import main

    def run(*argv):
        code = main([str(a) for a in argv])
        out = capsys.readouterr()
        return code, out.out, out.err

    return run
