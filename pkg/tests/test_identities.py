import pytest
from hypothesis import given, strategies as st

from conftest import graphs
from exactdist.corpus import has_triangle, pair_corpus
from exactdist.exact_distance import exact_distance_graph
from exactdist.families import complete, cycle, path
from exactdist.graph import GraphError
from exactdist.identities import (
    check_identity, distance_formula_check, grid_window_check, identity_fuzz, identity_instance,
    rhs_cartesian, rhs_direct2, rhs_lex,
)
from exactdist.products import cartesian, direct, lexicographic, strong


@given(graphs(max_order=5), graphs(max_order=5), st.integers(0, 5))
def test_cartesian_identity_property(G, H, p):
    assert all(identity_instance("cartesian", G, H, p))


@given(graphs(max_order=5), graphs(max_order=5), st.integers(0, 5))
def test_strong_identity_property(G, H, p):
    assert all(identity_instance("strong", G, H, p))


@given(graphs(min_order=2, max_order=5), graphs(min_order=2, max_order=5), st.integers(2, 5))
def test_lex_identity_property(G, H, p):
    if (G.degrees() == 0).any():
        with pytest.raises(GraphError):
            rhs_lex(G, H, p)
    else:
        assert all(identity_instance("lexicographic", G, H, p))


@given(graphs(min_order=2, max_order=5), graphs(min_order=2, max_order=5))
def test_direct_identity_property(G, H):
    if (G.degrees() == 0).any() or (H.degrees() == 0).any():
        with pytest.raises(GraphError):
            rhs_direct2(G, H)
    else:
        assert all(identity_instance("direct", G, H, 2))


def test_direct_needs_isolate_free():
    # frozen witness: an isolated vertex breaks the direct-product formula
    G = path(1)
    with pytest.raises(GraphError):
        rhs_direct2(G, path(3))


def test_check_identity_reports_differences():
    rep = check_identity(path(3), cycle(3), "x", "y")
    assert not rep.passed and rep.only_rhs == [(0, 2)] and rep.only_lhs == []
    assert rep.to_json()["verdict"] == "fail"


def test_second_form_equals_first():
    for inst in pair_corpus(20, seed=3, max_order=5):
        for p in range(1, 5):
            assert rhs_cartesian(inst.G, inst.H, p, 1) == rhs_cartesian(inst.G, inst.H, p, 2)
    with pytest.raises(ValueError):
        rhs_cartesian(path(2), path(2), 2, form=3)


def test_fuzz_is_deterministic():
    a = [r.to_json() for r in identity_fuzz("strong", 10, seed=5, max_order=5, ps=[2])]
    b = [r.to_json() for r in identity_fuzz("strong", 10, seed=5, max_order=5, ps=[2])]
    assert a == b and len(a) == 10


def test_triangle_free_corpus():
    for inst in pair_corpus(15, seed=1, max_order=6, isolate_free=True, triangle_free=True):
        assert not has_triangle(inst.G) and not has_triangle(inst.H)
        assert all(identity_instance("direct", inst.G, inst.H, 2))


@pytest.mark.parametrize("kind", ["cartesian", "strong", "direct", "lexicographic"])
def test_distance_formula_small(kind):
    assert distance_formula_check(kind, cycle(5), complete(2)).passed


@pytest.mark.parametrize("which", ["cartesian", "direct"])
def test_grid_window(which):
    rep = grid_window_check(9, which)
    assert rep.passed, rep.details
    with pytest.raises(GraphError):
        grid_window_check(8, which)
