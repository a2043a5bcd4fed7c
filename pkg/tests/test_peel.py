import pytest
from hypothesis import given, strategies as st

from cghkit.constructions import clique_union
from cghkit.core import Cgh, complete_cgh
from cghkit.errors import PatternPresentError, UniformityError
from cghkit.patterns import contains_zigzag, first_neighbor_map, mirror, peel_graph
from cghkit.verify import check_peeling
from strategies import graphs


def test_first_clockwise_neighbor():
    G = Cgh.from_edges(5, 2, [(0, 2), (0, 3), (1, 3)])
    assert first_neighbor_map(G) == {0: 2, 1: 3, 2: 0, 3: 0}


def test_peeling_splits_edges():
    G = complete_cgh(6, 2)
    peeled, remainder = peel_graph(G)
    assert peeled.edges | remainder.edges == G.edges
    assert not peeled.edges & remainder.edges
    # every vertex peels its clockwise side
    assert peeled.edges == {tuple(sorted((v, (v + 1) % 6))) for v in range(6)}


def test_peeling_needs_a_graph():
    with pytest.raises(UniformityError):
        peel_graph(complete_cgh(5, 3))


def test_triangles_peel_completely():
    G = clique_union(6, 3).cgh
    reports = check_peeling(G, 1)
    assert all(report.holds for report in reports)
    assert peel_graph(G)[1].edges == frozenset()


def test_zigzag_host_rejected(z_graph):
    with pytest.raises(PatternPresentError):
        check_peeling(z_graph, 1)


@given(graphs(max_n=7), st.integers(min_value=1, max_value=2))
def test_remainder_loses_two_edges_of_zigzag(G, k):
    if contains_zigzag(G, 2 * k + 1):
        with pytest.raises(PatternPresentError):
            check_peeling(G, k)
        return
    reports = check_peeling(G, k)
    assert all(report.holds for report in reports)
    _, remainder = peel_graph(G)
    assert not contains_zigzag(mirror(remainder), 2 * k - 1)
