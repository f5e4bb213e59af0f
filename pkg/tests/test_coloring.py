import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import brute_chromatic, graphs
from exactdist.coloring import (
    PRINTED, BoundRecord, Coloring, ColoringError, chi_bound_formulas, complement_level_coloring,
    exact_chromatic, greedy_coloring, grid_pattern_coloring, improve_coloring, johnson_coloring,
    k831_cases, k831_coloring, kneser_coloring, layered_coloring, load_certificate, max_clique,
    tabu_coloring, translate_coloring, validate_coloring,
)
from exactdist.coloring.bounds import kneser_chi
from exactdist.exact_distance import exact_distance_graph
from exactdist.families import complete, cycle, hypercube, johnson, kneser_general, subsets


@given(graphs(max_order=7))
def test_exact_matches_brute_force(G):
    res = exact_chromatic(G)
    assert res.exact and res.value == brute_chromatic(G)
    assert validate_coloring(G, res.coloring).proper


@given(graphs(max_order=8))
def test_clique_is_clique(G):
    clique, _ = max_clique(G)
    assert all(G.has_edge(u, v) for u, v in itertools.combinations(clique, 2))


@given(graphs(max_order=8))
def test_greedy_is_proper(G):
    assert validate_coloring(G, greedy_coloring(G)).proper


def test_frozen_chromatic_numbers():
    assert exact_chromatic(cycle(7)).value == 3
    assert exact_chromatic(complete(6)).value == 6
    assert exact_chromatic(johnson(5, 2, 0)).value == 3  # Petersen
    assert exact_chromatic(hypercube(4)).value == 2


def test_budget_gives_bracket():
    G = exact_distance_graph(hypercube(6), 4)
    res = exact_chromatic(G, budget=10)
    assert res.lower <= res.upper
    assert validate_coloring(G, res.coloring).proper


def test_loops_rejected():
    with pytest.raises(ColoringError):
        exact_chromatic(exact_distance_graph(cycle(4), 0))


def test_validation_reports_conflicts():
    res = validate_coloring(cycle(4), [1, 1, 2, 2])
    assert not res.proper and len(res.violations) == 2
    with pytest.raises(ColoringError):
        validate_coloring(cycle(4), [1, 2, 1])
    with pytest.raises(ColoringError):
        validate_coloring(cycle(4), [1, None, 1, 2])


def test_tabu_and_improve():
    G = johnson(7, 3, 1)
    c = tabu_coloring(G, 9, seed=1)
    assert c is not None and c.count <= 9 and validate_coloring(G, c).proper
    assert tabu_coloring(complete(5), 4, seed=0, max_iters=500) is None
    better = improve_coloring(G, greedy_coloring(G), seed=0)
    assert validate_coloring(G, better).proper and better.count <= greedy_coloring(G).count


@pytest.mark.parametrize("n,k", [(5, 2), (7, 3), (8, 3), (9, 4), (6, 2)])
def test_kneser_formula(n, k):
    c = kneser_coloring(n, k)
    assert c.count == n - 2 * k + 2 == kneser_chi(n, k)
    assert validate_coloring(johnson(n, k, 0), c).proper


def test_k831_rule_is_partition_and_proper():
    for m in subsets(8, 3):
        members = [j + 1 for j in range(8) if m >> j & 1]
        assert len(k831_cases(members)) == 1, members
    G = kneser_general(8, 3, 1)
    c = k831_coloring()
    assert c.count == 12 and validate_coloring(G, c).proper


@pytest.mark.parametrize("p", [1, 2, 3, 4])
def test_grid_pattern(p):
    G, c = grid_pattern_coloring(4 * p + 3, p)
    assert c.count == 4 and validate_coloring(G, c).proper


def test_translation_and_complement_transport():
    n = 6
    G = exact_distance_graph(hypercube(n), 4)
    c = exact_chromatic(G).coloring
    for w in (1, 5, 63):
        assert validate_coloring(G, translate_coloring(n, c, w)).proper
    J = johnson(7, 2, 0)
    k = kneser_coloring(7, 2)
    moved = complement_level_coloring(7, 2, k)
    assert validate_coloring(johnson(7, 5, 3), moved).proper


def test_certificate_and_johnson_coloring():
    c = load_certificate(8, 4, 1)
    assert c.count == 5 and validate_coloring(johnson(8, 4, 1), c).proper
    assert load_certificate(9, 4, 1) is None
    c = johnson_coloring(6, 3, 1)
    assert c.count == 6 and validate_coloring(johnson(6, 3, 1), c).proper


@pytest.mark.parametrize("n,p", [(n, p) for n in range(4, 13) for p in range(2, n + 1, 2)])
def test_bound_records_consistent(n, p):
    rec = chi_bound_formulas(n, p)
    assert isinstance(rec, BoundRecord)
    if rec.lower is not None and rec.upper is not None:
        assert rec.lower <= rec.upper
    if rec.exact is not None:
        assert rec.lower in (None, rec.exact) or rec.lower <= rec.exact


@pytest.mark.parametrize("n,p", [(6, 4), (7, 4), (7, 6), (8, 6), (8, 8)])
def test_bounds_bracket_computed_value(n, p):
    rec = chi_bound_formulas(n, p)
    G = exact_distance_graph(hypercube(n), p)
    res = exact_chromatic(G, budget=200_000)
    lo = rec.exact or rec.lower or 1
    hi = rec.exact or rec.upper or G.order
    assert lo <= res.upper and res.lower <= hi


def test_layered_small():
    rep = layered_coloring(8, 6)
    G = exact_distance_graph(hypercube(8), 6)
    assert rep.proper and validate_coloring(G, rep.coloring).proper
    assert rep.count == rep.coloring.count == 7
    assert rep.to_json()["printed_rule_sufficient"] is False
    with pytest.raises(ValueError):
        layered_coloring(8, 6, variant="third")


def test_printed_table_keys():
    assert {n for n, _ in PRINTED} <= set(range(6, 11))
