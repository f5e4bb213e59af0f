import pytest
from hypothesis import given

from conftest import graphs
from exactdist.coloring import Coloring, ColoringError
from exactdist.exact_distance import exact_distance_graph
from exactdist.families import path
from exactdist.io import (
    GraphFormatError, read_coloring, read_graph, sniff_format, write_coloring_json,
    write_coloring_lines, write_graph,
)


@pytest.mark.parametrize("fmt", ["xdg", "dimacs", "json"])
@given(G=graphs(max_order=8))
def test_roundtrip(fmt, G):
    text = write_graph(G, fmt)
    assert sniff_format(text) == fmt
    H = read_graph(text)
    assert H.edges() == G.edges() and H.order == G.order


def test_loops_roundtrip_xdg():
    X = exact_distance_graph(path(3), 0)
    assert read_graph(write_graph(X, "xdg")).edges() == X.edges()


@pytest.mark.parametrize("text", [
    "xdg n=2 loops=0\ne 0 5\n",
    "xdg n=2 loops=0\ne 1 1\n",
    "p edge 3 2\ne 1 2\n",
    "p edge 2 1\ne 1 9\n",
    "garbage\n",
    '{"n": 2, "edges": [[0, 3]]}',
])
def test_malformed(text):
    with pytest.raises(GraphFormatError):
        read_graph(text)


def test_coloring_roundtrip():
    c = Coloring((1, 2, 1, 3))
    assert read_coloring(write_coloring_json(c)) == c
    assert read_coloring(write_coloring_lines(c)) == c
    with pytest.raises(ColoringError):
        read_coloring("l 1 1\nx 2 2\n")
