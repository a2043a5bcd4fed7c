from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, strategies as st

from cghkit.constructions import (
    clique_union,
    list_constructions,
    lookup_construction,
    lift_odd,
    lift_odd_report,
    partitioned_construction,
    short_pairs_construction,
    stack_free_by_predicate,
    stack_free_construction,
    stack_free_parts,
    stack_witness_report,
)
from cghkit.core import Cgh, neighborhood, shadow
from cghkit.errors import ConstructionParameterError, UniformityError
from cghkit.patterns import contains_tight_path, contains_zigzag
from cghkit.search import PatternPredicate, max_edges_avoiding
from cghkit.verify import random_cgh


def test_registry_lists_every_construction():
    assert set(list_constructions()) == {
        "short-pairs",
        "stack-free",
        "clique-union",
        "partitioned",
        "stack-witness",
        "lift-odd",
    }
    assert lookup_construction("clique-union") is clique_union
    with pytest.raises(RuntimeError):
        lookup_construction("no-such-construction")


def test_short_pairs_graph():
    report = short_pairs_construction(10, 2, 3)
    assert report.edge_count == 20
    assert report.predicted_leading_term == 2
    assert report.leading_ratio == 1


def test_short_pairs_parameters():
    with pytest.raises(ConstructionParameterError):
        short_pairs_construction(10, 2, 4)
    with pytest.raises(ConstructionParameterError):
        short_pairs_construction(4, 2, 3)
    with pytest.raises(ConstructionParameterError):
        short_pairs_construction(10, 3, 3)


@pytest.mark.parametrize("k", [2, 3, 4])
@pytest.mark.parametrize("cyclic", [True, False])
def test_stack_free_matches_predicate(k, cyclic):
    report = stack_free_construction(12, 4, k, cyclic=cyclic)
    assert report.cgh == stack_free_by_predicate(12, 4, k, cyclic=cyclic)
    assert report.details["part_sizes"][0] == report.details["h0_expected"] == comb(11, 3)
    assert report.predicted_leading_term == (k - 1) * 3


def test_stack_free_parts_avoid_vertex_zero_after_first():
    parts = stack_free_parts(12, 4, 3)
    assert len(parts) == 3
    assert all(0 not in e for part in parts[1:] for e in part)
    assert all(e[0] == 0 for e in parts[0])


def test_stack_free_degenerate_k1():
    report = stack_free_construction(8, 4, 1)
    assert report.edge_count == comb(7, 3)
    assert "degenerate" in report.details


@pytest.mark.parametrize("cyclic", [True, False])
def test_stack_free_ratio_approaches_prediction(cyclic):
    ratios = [
        stack_free_construction(n, 4, 3, cyclic=cyclic).leading_ratio for n in (16, 24, 32)
    ]
    # C(n,4) - C(n-6,4) edges against 6 C(n,3)
    assert ratios[0] == Fraction(1610, 6 * 560)
    assert all(ratio < 1 for ratio in ratios)
    assert all(a < b for a, b in zip(ratios, ratios[1:]))


def _components(G):
    seen, blocks = set(), []
    for v in G.ground.vertices:
        if v in seen:
            continue
        block, frontier = {v}, [v]
        while frontier:
            for w in neighborhood(G, frontier.pop()):
                if w not in block:
                    block.add(w)
                    frontier.append(w)
        seen |= block
        blocks.append(sorted(block))
    return blocks


@pytest.mark.parametrize("n, k, edges", [(6, 3, 6), (7, 3, 6), (8, 3, 7), (9, 4, 12)])
def test_clique_union(n, k, edges):
    report = clique_union(n, k)
    assert report.edge_count == report.details["expected_count"] == edges
    assert report.details["tight"] == (n % k == 0)
    assert not contains_zigzag(report.cgh, k, reflection_closed=True)
    # the host is a disjoint union of cliques on consecutive blocks
    blocks = report.details["blocks"]
    assert _components(report.cgh) == blocks
    assert sorted(v for block in blocks for v in block) == list(range(n))
    assert all(len(block) <= k for block in blocks)
    for block in blocks:
        assert all(e in report.cgh for e in combinations(block, 2))


def test_clique_union_is_a_maximizer():
    pattern = PatternPredicate("zigzag", 3)
    result = max_edges_avoiding(6, 2, pattern)
    report = clique_union(6, 3)
    assert result.exact
    assert report.edge_count == result.max_edges == 6
    assert not pattern.contained_in(report.cgh)
    assert report.details["blocks"] == [[0, 1, 2], [3, 4, 5]]


def test_partitioned_is_tight_path_free():
    report = partitioned_construction(16, 4, 5)
    assert report.edge_count == report.details["expected_count"] == 294
    assert report.predicted_leading_term == Fraction(2 * 4 * 6, 64)
    assert not contains_tight_path(report.cgh, 5)


@pytest.mark.parametrize("n, r, k", [(15, 4, 5), (16, 3, 4), (16, 4, 4), (4, 4, 13)])
def test_partitioned_parameters(n, r, k):
    with pytest.raises(ConstructionParameterError):
        partitioned_construction(n, r, k)


def test_stack_witness_report():
    report = stack_witness_report(12, 4, 3)
    assert report.edge_count == 3
    assert report.leading_ratio is None
    assert report.to_json()["claim"] == "none"


@given(st.integers(min_value=0, max_value=10_000), st.integers(min_value=1, max_value=4))
def test_lift_identities(seed, x_count):
    H = random_cgh(6, 3, 0.5, seed=seed)
    lifted = lift_odd(H, x_count)
    assert lifted.n == H.n + x_count and lifted.r == 4
    assert len(lifted) == x_count * len(H)
    assert len(shadow(lifted)) == x_count * len(shadow(H)) + len(H)


def test_lift_parameters():
    with pytest.raises(UniformityError):
        lift_odd(Cgh.from_edges(4, 2, [(0, 1)]), 2)
    with pytest.raises(ConstructionParameterError):
        lift_odd(Cgh.from_edges(4, 3, [(0, 1, 2)]), 0)
    report = lift_odd_report(Cgh.from_edges(4, 3, [(0, 1, 2)]), 2)
    assert report.details == {
        "x_count": 2,
        "host_edges": 1,
        "host_shadow": 3,
        "lifted_shadow": 7,
    }
