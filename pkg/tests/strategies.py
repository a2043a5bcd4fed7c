"""Hypothesis strategies for small convex geometric hypergraphs."""
from itertools import combinations

from hypothesis import strategies as st

from cghkit.core import Cgh


@st.composite
def cghs(draw, r, min_n=None, max_n=7):
    n = draw(st.integers(min_value=min_n or r, max_value=max_n))
    candidates = list(combinations(range(n), r))
    mask = draw(
        st.lists(st.booleans(), min_size=len(candidates), max_size=len(candidates))
    )
    return Cgh.from_edges(n, r, (e for e, keep in zip(candidates, mask) if keep))


def graphs(min_n=2, max_n=6):
    return cghs(2, min_n=min_n, max_n=max_n)
