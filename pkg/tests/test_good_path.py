import pytest
from hypothesis import given, strategies as st

from cghkit.core import complete_cgh
from cghkit.errors import PatternDomainError, UniformityError
from cghkit.patterns import (
    Coloring,
    brute_force_good_ends,
    class_index,
    class_shadow,
    enumerate_end_levels,
    enumerate_good_end_levels,
    enumerate_good_ends,
    extend_good_f,
    find_good_path,
    good_extension_set,
    is_color_regular,
    is_good_path,
    restrict_color_regular,
    stuck_good_ends,
)
from cghkit.verify import coloring_reduction, random_cgh
from strategies import graphs


def test_coloring_validation():
    with pytest.raises(PatternDomainError):
        Coloring((0, 2), 2)
    coloring = Coloring((0, 1, 1, 0), 2)
    assert coloring.members(1) == {1, 2}
    with pytest.raises(PatternDomainError):
        coloring.validate_for(complete_cgh(4, 2))
    with pytest.raises(UniformityError):
        coloring.validate_for(complete_cgh(4, 3))


def test_class_index_pairs_up():
    assert [class_index(j, 2) for j in range(8)] == [0, 0, 1, 1, 0, 0, 1, 1]
    assert [class_index(j, 1) for j in range(4)] == [0, 0, 0, 0]


def test_color_regular_part():
    coloring = Coloring((0, 0, 0, 1, 1, 1), 2)
    G = restrict_color_regular(complete_cgh(6, 4), coloring)
    assert len(G) == 9
    assert is_color_regular(G, coloring)
    # shadow elements with one vertex in B_0 and two in B_1
    assert len(class_shadow(G, coloring, 0)) == 3 * 3


def test_good_path_recognition():
    coloring = Coloring((0, 0, 1, 1, 0, 0, 1, 1), 2)
    G = restrict_color_regular(complete_cgh(8, 4), coloring)
    # class 0 reads v_0, v_4, v_5, v_1 = 0, 1, 4, 5 clockwise
    assert is_good_path(G, coloring, (0, 5, 2, 3, 1, 4))
    assert not is_good_path(G, coloring, (5, 0, 2, 3, 1, 4))


def test_trivial_coloring_for_graphs():
    coloring = Coloring.trivial(5)
    G = restrict_color_regular(complete_cgh(5, 2), coloring)
    assert len(G) == 10
    assert len(enumerate_good_end_levels(G, coloring, 1)[0]) == 2 * len(G)


@given(graphs(max_n=6), st.integers(min_value=1, max_value=3))
def test_trivial_coloring_keeps_every_end(H, k):
    coloring = Coloring.trivial(H.n)
    G = restrict_color_regular(H, coloring)
    assert G == H
    assert enumerate_good_end_levels(G, coloring, k) == enumerate_end_levels(H, k)


def test_irregular_host_rejected():
    coloring = Coloring((0, 0, 0, 1, 1, 1), 2)
    with pytest.raises(PatternDomainError):
        enumerate_good_end_levels(complete_cgh(6, 4), coloring, 2)


@pytest.mark.parametrize("seed", range(10))
@pytest.mark.parametrize("k", [1, 2, 3])
def test_good_ends_match_oracle(seed, k):
    H = random_cgh(8, 4, 0.6, seed=seed)
    coloring, G, _ = coloring_reduction(H, seed=[seed, 1])
    levels = enumerate_good_end_levels(G, coloring, k)
    assert len(levels[0]) == 2 ** coloring.s * len(G)
    for level, ends in enumerate(levels, start=1):
        assert ends == brute_force_good_ends(G, coloring, level)
    assert enumerate_good_ends(G, coloring, k) == levels[-1]


@given(st.integers(min_value=0, max_value=10_000))
def test_found_good_path_is_good(seed):
    H = random_cgh(8, 4, 0.7, seed=seed)
    coloring, G, _ = coloring_reduction(H, seed=seed)
    seq = find_good_path(G, coloring, 2)
    if seq is not None:
        assert is_good_path(G, coloring, seq)
    else:
        assert not enumerate_good_end_levels(G, coloring, 2)[-1]


@pytest.mark.parametrize("seed", range(5))
def test_good_extension_step(seed):
    H = random_cgh(8, 4, 0.7, seed=seed)
    coloring, G, _ = coloring_reduction(H, seed=seed)
    levels = enumerate_good_end_levels(G, coloring, 3)
    stuck = stuck_good_ends(G, coloring, 2)
    for end in levels[1]:
        if end in stuck:
            assert not good_extension_set(G, coloring, end)
        else:
            assert extend_good_f(G, coloring, end) in levels[2]
