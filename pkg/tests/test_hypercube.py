import pytest

from exactdist.graph import GraphError
from exactdist.hypercube import (
    even_distance_decomposition_check, f_map, johnson_complement_isomorphism,
    level_induces_johnson_check, parity_components_check, qn_nminus1_isomorphism, word_parity_type,
)


@pytest.mark.parametrize("n,p", [(2, 1), (4, 1), (4, 2), (5, 2)])
def test_decomposition(n, p):
    assert even_distance_decomposition_check(n, p).passed


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_f_map(n):
    res = qn_nminus1_isomorphism(n)
    assert res.bijective and res.isomorphism and res.details["preserves_type"]


def test_f_map_frozen():
    # 01 is odd, so 0100 has type B: even words flip, odd words stay
    assert word_parity_type(0b0100, 4) == "B"
    assert f_map(0b0100, 4) == 0b0111
    assert f_map(0b0000, 4) == 0b0000
    with pytest.raises(GraphError):
        qn_nminus1_isomorphism(5)


@pytest.mark.parametrize("n,k,i", [(6, 2, 0), (7, 3, 1), (8, 3, 2), (6, 3, 1)])
def test_complement_iso(n, k, i):
    assert johnson_complement_isomorphism(n, k, i)


@pytest.mark.parametrize("n,p,i", [(6, 2, 3), (6, 4, 2), (7, 4, 3), (5, 2, 1)])
def test_level_johnson(n, p, i):
    assert level_induces_johnson_check(n, p, i).passed


def test_level_rejects_zero_and_odd():
    with pytest.raises(GraphError):
        level_induces_johnson_check(5, 0, 2)
    with pytest.raises(GraphError):
        level_induces_johnson_check(5, 3, 2)


@pytest.mark.parametrize("n,p", [(5, 2), (6, 2), (6, 4), (7, 4)])
def test_parity_components(n, p):
    out = parity_components_check(n, p)
    assert out["a_no_cross_edges"]
    assert out["b_complement_isomorphism"] in (True, None)
    if n % 2 == 0:
        assert out["c_translation_isomorphism"] and out["c_search"] == "isomorphic"


def test_parity_components_p_equals_n_is_matching():
    out = parity_components_check(4, 4)
    assert not out["classes_connected"] and out["components_even"] == 4
