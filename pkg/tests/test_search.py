"""
Install:
    pip install pytest hypothesis
Usage:
    python -m pytest tests/test_search.py
    python -m pytest tests/test_search.py -m slow
"""
from itertools import combinations

import pytest

from cghkit.core import complete_cgh
from cghkit.errors import BudgetExhaustedError, PatternDomainError, UniformityError
from cghkit.search import (
    PatternPredicate,
    SymmetryGroup,
    canonical_form,
    edge_orbits,
    extremal_table,
    max_edges_avoiding,
    table_rows,
    write_table_csv,
)
from cghkit.utils import SearchOptions
from cghkit.verify import bound_values, random_cgh


def test_predicate_names():
    assert PatternPredicate("matching", 2).kind == "disjoint_segments"
    assert PatternPredicate("tight-path", 3).label == "tight-path"
    with pytest.raises(PatternDomainError):
        PatternPredicate("zigzag", 3, convex=False)
    with pytest.raises(PatternDomainError):
        PatternPredicate("cycle", 3)
    with pytest.raises(UniformityError):
        PatternPredicate("stack", 2).check_uniformity(3)


def test_dihedral_orbits_by_distance():
    orbits = edge_orbits(SymmetryGroup("dihedral", 6), combinations(range(6), 2))
    assert [len(orbit) for orbit in orbits] == [6, 6, 3]
    assert [orbit[0] for orbit in orbits] == [(0, 1), (0, 2), (0, 3)]
    symmetric = edge_orbits(SymmetryGroup("symmetric", 6), combinations(range(6), 2))
    assert len(symmetric) == 1


def test_group_orders():
    dihedral = SymmetryGroup("dihedral", 6)
    assert dihedral.order == 12
    assert len(set(dihedral.elements())) == 12
    assert SymmetryGroup("symmetric", 4).order == 24


@pytest.mark.parametrize("seed", range(5))
def test_canonical_form_is_invariant(seed):
    H = random_cgh(7, 3, 0.3, seed=seed)
    group = SymmetryGroup("dihedral", 7)
    rotated = H.relabel(lambda v: (v + 3) % 7)
    reflected = H.relabel(H.ground.reflect)
    assert canonical_form(H, group) == canonical_form(rotated, group)
    assert canonical_form(H, group) == canonical_form(reflected, group)


def test_tight_path_of_three_graph_on_five_vertices():
    result = max_edges_avoiding(5, 3, PatternPredicate("tight_path", 4, convex=False))
    assert result.max_edges == 10
    assert result.exact
    assert result.witness == complete_cgh(5, 3)


def test_single_edge_path():
    result = max_edges_avoiding(4, 2, PatternPredicate("tight_path", 1))
    assert result.max_edges == 0 and result.exact


def test_zigzag_graph_bound_is_tight():
    pattern = PatternPredicate("zigzag", 3)
    result = max_edges_avoiding(6, 2, pattern)
    assert result.exact
    assert result.max_edges == 6 == bound_values(6, 2, 3)["convex_graph"]
    assert not pattern.contained_in(result.witness)


def test_symmetry_does_not_change_the_answer():
    pattern = PatternPredicate("disjoint_segments", 2)
    with_group = max_edges_avoiding(6, 2, pattern)
    plain = max_edges_avoiding(6, 2, pattern, options=SearchOptions(use_symmetry=False))
    assert with_group.max_edges == plain.max_edges
    assert not pattern.contained_in(with_group.witness)


def test_budget_exhaustion():
    pattern = PatternPredicate("zigzag", 3)
    partial = max_edges_avoiding(6, 2, pattern, budget=5)
    assert not partial.exact
    assert partial.nodes_explored <= 6
    with pytest.raises(BudgetExhaustedError):
        max_edges_avoiding(6, 2, pattern, budget=5, strict=True)
    with pytest.raises(ValueError):
        max_edges_avoiding(6, 2, pattern, budget=0)


def test_table_skips_cells_outside_domain():
    results = extremal_table([5], [3], [4], ["tight-path", "zigzag"])
    assert len(results) == 1
    (row,) = table_rows(results)
    assert row["max_edges"] == 10
    assert row["bound_general"] == "25"
    assert row["bound_conjectured"] == "10"
    assert row["bound_convex_zigzag"] == ""
    assert write_table_csv(results).startswith("n,r,k,pattern,max_edges,exact,")


def test_exact_values_respect_bounds():
    cells = [(5, 3, 4, "tight_path"), (6, 2, 3, "zigzag"), (6, 2, 2, "tight_path")]
    for n, r, k, kind in cells:
        result = max_edges_avoiding(n, r, PatternPredicate(kind, k))
        bounds = bound_values(n, r, k)
        assert result.max_edges <= bounds["trivial"]
        assert result.max_edges <= bounds["general"]
        if kind == "zigzag":
            assert result.max_edges <= bounds["convex_zigzag"]
        if bounds["link"] is not None:
            assert result.max_edges <= bounds["link"]


@pytest.mark.slow
@pytest.mark.parametrize("n, expected", [(5, 10), (6, 11)])
def test_tight_path_of_three_graphs(n, expected):
    # the closed form C(n, 2) is reached at n = 5 but not at n = 6
    pattern = PatternPredicate("tight_path", 4, convex=False)
    result = max_edges_avoiding(n, 3, pattern)
    assert result.exact
    assert result.max_edges == expected
    assert not pattern.contained_in(result.witness)
    for e in combinations(range(n), 3):
        if e not in result.witness.edges:
            assert pattern.contained_in(result.witness.with_edges([e]))


GRAPH_PATTERNS = [
    (kind, k)
    for kind in ("tight_path", "zigzag", "stack", "disjoint_segments")
    for k in (2, 3)
]


def _assert_maximal(pattern, result):
    assert result.exact
    assert len(result.witness) == result.max_edges
    assert not pattern.contained_in(result.witness)
    for e in combinations(range(result.n), result.r):
        if e not in result.witness.edges:
            assert pattern.contained_in(result.witness.with_edges([e]))


def _graph_values(pattern, sizes):
    values = []
    for n in sizes:
        with_group = max_edges_avoiding(n, 2, pattern)
        plain = max_edges_avoiding(n, 2, pattern, options=SearchOptions(use_symmetry=False))
        assert with_group.max_edges == plain.max_edges
        _assert_maximal(pattern, with_group)
        _assert_maximal(pattern, plain)
        values.append(with_group.max_edges)
    return values


@pytest.mark.parametrize("kind, k", GRAPH_PATTERNS)
def test_graph_search_is_consistent(kind, k):
    values = _graph_values(PatternPredicate(kind, k), range(2, 6))
    # an isolated vertex appended to the circle creates no new copy
    assert values == sorted(values)


@pytest.mark.slow
@pytest.mark.parametrize("kind, k", GRAPH_PATTERNS)
def test_graph_search_on_six_vertices(kind, k):
    pattern = PatternPredicate(kind, k)
    (six,) = _graph_values(pattern, [6])
    assert six >= max_edges_avoiding(5, 2, pattern).max_edges
