"""Tight paths: recognition, exhaustive detection and paths through one edge."""
from itertools import permutations
from typing import Iterator, Optional, Sequence, Tuple

from ..core import Cgh
from ..errors import PatternDomainError

__all__ = [
    "check_sequence",
    "is_tight_path",
    "tight_paths_through",
    "find_tight_path",
    "contains_tight_path",
]


def check_sequence(H: Cgh, seq: Sequence[int]) -> Tuple[int, ...]:
    seq = tuple(seq)
    H.ground.check(*seq)
    if len(set(seq)) != len(seq):
        raise PatternDomainError(f"sequence {seq} repeats a vertex")
    if len(seq) < H.r:
        raise PatternDomainError(
            f"sequence {seq} is shorter than the uniformity r={H.r}"
        )
    return seq


def _key(vertices) -> Tuple[int, ...]:
    return tuple(sorted(vertices))


def _forward(H: Cgh, seq: Tuple[int, ...]):
    tail = seq[len(seq) - (H.r - 1) :] if H.r > 1 else ()
    for x in sorted(H.completions.get(_key(tail), ())):
        if x not in seq:
            yield x


def _backward(H: Cgh, seq: Tuple[int, ...]):
    head = seq[: H.r - 1]
    for x in sorted(H.completions.get(_key(head), ())):
        if x not in seq:
            yield x


def is_tight_path(H: Cgh, seq: Sequence[int]) -> bool:
    seq = check_sequence(H, seq)
    windows = len(seq) - H.r + 1
    return all(H.has_edge(seq[i : i + H.r]) for i in range(windows))


def _grow_forward(H: Cgh, seq, remaining: int):
    if remaining == 0:
        yield seq
        return
    for x in _forward(H, seq):
        yield from _grow_forward(H, seq + (x,), remaining - 1)


def _grow_backward(H: Cgh, seq, remaining: int):
    if remaining == 0:
        yield seq
        return
    for x in _backward(H, seq):
        yield from _grow_backward(H, (x,) + seq, remaining - 1)


def tight_paths_through(H: Cgh, edge: Sequence[int], k: int) -> Iterator[Tuple[int, ...]]:
    """Every tight k-path of ``H`` having ``edge`` as one of its windows.

    Each sequence is produced once: a window set occurs at one position only,
    so (ordering of ``edge``, position) determines the split between the
    backward and forward growth.
    """
    if k < 1:
        raise PatternDomainError(f"path length must be >= 1, got {k}")
    if not H.has_edge(edge):
        return
    for ordering in permutations(sorted(edge)):
        for position in range(k):
            for prefix in _grow_backward(H, ordering, position):
                yield from _grow_forward(H, prefix, k - 1 - position)


def find_tight_path(H: Cgh, k: int) -> Optional[Tuple[int, ...]]:
    if k < 1:
        raise PatternDomainError(f"path length must be >= 1, got {k}")
    if k + H.r - 1 > H.n:
        return None
    for edge in H.sorted_edges:
        for ordering in permutations(edge):
            for seq in _grow_forward(H, ordering, k - 1):
                return seq
    return None


def contains_tight_path(H: Cgh, k: int) -> bool:
    return find_tight_path(H, k) is not None
