from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from cghkit.core import Cgh, Segment, complete_cgh
from cghkit.errors import PatternDomainError, UniformityError
from cghkit.patterns import (
    End,
    brute_force_ends,
    contains_disjoint_segments,
    contains_zigzag,
    enumerate_end_levels,
    enumerate_ends,
    extend_f,
    extension_set,
    find_zigzag,
    interval_of_end,
    is_tight_path,
    is_zigzag,
    mirror,
    project_g,
    stuck_ends,
    zigzag_layout,
    zigzag_witness,
)
from cghkit.verify import random_cgh
from strategies import cghs


def test_layout_reverses_odd_classes():
    assert zigzag_layout([0, 1, 2, 3, 4, 5], 2) == [[0, 2, 4], [5, 3, 1]]
    assert zigzag_layout(list(range(8)), 4) == [[0, 4], [5, 1], [2, 6], [7, 3]]


def test_witness_segments():
    ground = Cgh.from_edges(4, 2).ground
    witness = zigzag_witness(ground, (0, 3, 1, 2), 2)
    assert witness.segments == (Segment(0, 1), Segment(2, 3))
    assert zigzag_witness(ground, (0, 1, 2, 3), 2) is None


def test_is_zigzag_needs_a_path(z_graph):
    assert is_zigzag(z_graph, (0, 3, 1, 2)) is not None
    with pytest.raises(PatternDomainError):
        is_zigzag(z_graph, (0, 1, 2))


def test_odd_uniformity_rejected():
    with pytest.raises(UniformityError):
        enumerate_ends(complete_cgh(5, 3), 2)


def test_interval_alternates():
    assert interval_of_end(End((3, 5), 1)) == Segment(3, 5)
    assert interval_of_end(End((3, 5), 2)) == Segment(5, 3)


def test_first_level_has_r_ends_per_edge():
    H = complete_cgh(6, 4)
    assert len(enumerate_ends(H, 1)) == H.r * len(H)


def test_reflection_closed_detection(z_graph):
    mirrored = mirror(z_graph)
    assert mirror(mirrored) == z_graph
    assert find_zigzag(z_graph, 3) is not None
    assert find_zigzag(mirrored, 3) is None
    witness = find_zigzag(mirrored, 3, reflection_closed=True)
    assert witness is not None
    assert is_tight_path(mirrored, witness.seq)


def test_found_zigzag_is_valid():
    H = random_cgh(9, 4, 0.5, seed=3)
    witness = find_zigzag(H, 2)
    assert witness is not None
    assert is_zigzag(H, witness.seq) is not None


@given(cghs(2, max_n=6), st.integers(min_value=1, max_value=4))
def test_graph_ends_match_oracle(H, k):
    levels = enumerate_end_levels(H, k)
    for level, ends in enumerate(levels, start=1):
        assert ends == brute_force_ends(H, level)


@pytest.mark.parametrize("seed", range(12))
@pytest.mark.parametrize("k", [2, 3])
def test_four_uniform_ends_match_oracle(seed, k):
    H = random_cgh(8, 4, 0.35, seed=[seed, k])
    assert enumerate_ends(H, k) == brute_force_ends(H, k)


@settings(max_examples=40)
@given(cghs(2, max_n=7), st.integers(min_value=1, max_value=3))
def test_extension_lands_in_next_level(H, k):
    following = enumerate_ends(H, k + 1)
    stuck = stuck_ends(H, k)
    for end in enumerate_ends(H, k):
        if end in stuck:
            assert not extension_set(H, end)
            with pytest.raises(PatternDomainError):
                extend_f(H, end)
        else:
            assert extend_f(H, end) in following
            assert project_g(extend_f(H, end))[: H.r - 2] == end.vs[2:]


def test_projection_drops_the_first_vertex():
    assert project_g(End((3, 1, 4, 0), 2)) == (1, 4, 0)


@given(cghs(2, min_n=2, max_n=6), st.data(), st.integers(min_value=1, max_value=4))
def test_containment_survives_added_edges(H, data, k):
    missing = sorted(set(combinations(range(H.n), 2)) - H.edges)
    extra = data.draw(st.lists(st.sampled_from(missing), max_size=3)) if missing else []
    bigger = H.with_edges(extra)
    for reflection_closed in (False, True):
        if contains_zigzag(H, k, reflection_closed=reflection_closed):
            assert contains_zigzag(bigger, k, reflection_closed=reflection_closed)


@given(cghs(2, min_n=2, max_n=7), st.integers(min_value=1, max_value=3))
def test_odd_zigzag_holds_nested_chords(H, k):
    # v_0 v_1, v_2 v_3, ... of a graph zigzag on 2k vertices are nested chords
    if contains_zigzag(H, 2 * k - 1):
        assert contains_disjoint_segments(H, k)


def _all_graphs(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Cgh.from_edges(n, 2, (p for i, p in enumerate(pairs) if mask >> i & 1))


@pytest.mark.slow
@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_ends_match_oracle_on_every_graph(n):
    for H in _all_graphs(n):
        levels = enumerate_end_levels(H, 4)
        for k, level in enumerate(levels, start=1):
            assert level == brute_force_ends(H, k), (sorted(H.edges), k)


@pytest.mark.slow
def test_ends_match_oracle_on_seeded_four_graphs():
    for seed in range(100):
        n = 5 + seed % 5
        H = random_cgh(n, 4, (0.2, 0.35, 0.5)[seed % 3], seed=[n, seed])
        for k, level in enumerate(enumerate_end_levels(H, 3), start=1):
            assert level == brute_force_ends(H, k), (seed, k)
