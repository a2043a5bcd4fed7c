"""Brute-force oracles over ordered vertex sequences.

Exponential in ``k``; used to cross-check the extension recurrence on small
hosts, never by the enumeration code itself.
"""
from itertools import permutations
from typing import FrozenSet, Iterator, Tuple

from ..core import Cgh
from ..errors import PatternDomainError
from .good_path import Coloring, is_good_path
from .paths import _grow_forward
from .zigzag import End, _require_even, zigzag_witness

__all__ = ["all_tight_paths", "brute_force_ends", "brute_force_good_ends"]


def all_tight_paths(H: Cgh, k: int) -> Iterator[Tuple[int, ...]]:
    """Every ordered tight k-path of ``H``, each vertex sequence once."""
    if k < 1:
        raise PatternDomainError(f"path length must be >= 1, got {k}")
    for edge in H.sorted_edges:
        for ordering in permutations(edge):
            yield from _grow_forward(H, ordering, k - 1)


def _final_window(seq: Tuple[int, ...], k: int) -> End:
    return End(seq[k - 1 :], k)


def brute_force_ends(H: Cgh, k: int) -> FrozenSet[End]:
    _require_even(H.r)
    return frozenset(
        _final_window(seq, k)
        for seq in all_tight_paths(H, k)
        if zigzag_witness(H.ground, seq, H.r) is not None
    )


def brute_force_good_ends(
    G: Cgh, coloring: Coloring, k: int
) -> FrozenSet[End]:
    coloring.validate_for(G)
    return frozenset(
        _final_window(seq, k)
        for seq in all_tight_paths(G, k)
        if is_good_path(G, coloring, seq)
    )
