import pytest

from exactdist.connectivity import (
    bipartite_parity_check, cartesian_p2_characterization, direct_p2_characterization,
    hypercube_characterization, lex_characterization, product_oracle, radius_obstruction,
    strong_product_characterization,
)
from exactdist.corpus import pair_corpus
from exactdist.families import complete, cycle, hypercube, path
from exactdist.graph import GraphError


def test_counterexample_to_distance_rule():
    # C5 x K3: (C5 x K3)^[2] is connected while K3^[2] has no edges
    v = direct_p2_characterization(cycle(5), complete(3), rule="distance")
    assert v.oracle is True and v.predicted is False
    assert direct_p2_characterization(cycle(5), complete(3), rule="path").agreement


def test_path_rule_agrees_on_corpus():
    corpus = pair_corpus(150, seed=21, max_order=6, connected=True, min_order=2)
    assert all(direct_p2_characterization(i.G, i.H, rule="path").agreement for i in corpus)


def test_small_corpus_characterizations():
    corpus = pair_corpus(40, seed=22, max_order=5, connected=True, min_order=2)
    for inst in corpus:
        assert cartesian_p2_characterization(inst.G, inst.H).agreement
        for p in (2, 3):
            assert strong_product_characterization(inst.G, inst.H, p).agreement
        for p in (1, 2, 3):
            assert lex_characterization(inst.G, inst.H, p).agreement


def test_hypercube_rule():
    for d in range(2, 7):
        for p in range(1, d):
            assert hypercube_characterization(d, p).agreement
    assert hypercube_characterization(4, 4).predicted is None


def test_radius_obstruction():
    v = radius_obstruction(path(5), 3)
    assert v.predicted is False and v.oracle is False
    assert radius_obstruction(path(5), 2).predicted is None


def test_bipartite_parity():
    for p in range(1, 5):
        assert bipartite_parity_check(hypercube(4), p)["holds"]
    with pytest.raises(GraphError):
        bipartite_parity_check(cycle(5), 2)


def test_requirements():
    with pytest.raises(GraphError):
        cartesian_p2_characterization(path(1), path(3))
    with pytest.raises(GraphError):
        strong_product_characterization(path(3), path(3), 1)
    with pytest.raises(ValueError):
        direct_p2_characterization(path(3), path(3), rule="walk")
    v = product_oracle("cartesian", path(3), path(3), 3)
    assert v.predicted is None and v.to_json()["agreement"] is None
