"""Zigzag paths, their ends, and the end-extension machinery.

The extension step works on ends only: for a zigzag ending in ``v_k`` the
interval ``I(v_k)`` holds no path vertex besides its two endpoints, so every
vertex of ``X(v_k)`` extends every zigzag with that end.
"""
import dataclasses
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from ..core import Cgh, CyclicGround, Segment
from ..errors import PatternDomainError, UniformityError
from ..utils import cost_time, logger
from .paths import check_sequence, is_tight_path

__all__ = [
    "End",
    "PathWitness",
    "zigzag_layout",
    "zigzag_witness",
    "is_zigzag",
    "interval_of_end",
    "extension_set",
    "enumerate_end_levels",
    "enumerate_ends",
    "stuck_ends",
    "nearest_extension",
    "extend_f",
    "project_g",
    "find_zigzag",
    "contains_zigzag",
    "mirror",
]


@dataclasses.dataclass(frozen=True, order=True)
class End:
    """The ordered last edge ``(v_{k-1}, ..., v_{k+r-2})`` of a k-zigzag."""

    vs: Tuple[int, ...]
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise PatternDomainError(f"end needs k >= 1, got k={self.k}")
        if len(set(self.vs)) != len(self.vs):
            raise PatternDomainError(f"end {self.vs} repeats a vertex")

    @property
    def r(self) -> int:
        return len(self.vs)

    @property
    def first(self) -> int:
        return self.vs[0]

    def shift(self, x: int) -> "End":
        return End(self.vs[1:] + (x,), self.k + 1)


@dataclasses.dataclass(frozen=True)
class PathWitness:
    seq: Tuple[int, ...]
    segments: Tuple[Segment, ...]

    def to_json(self):
        return {"seq": list(self.seq), "segments": [s.as_list() for s in self.segments]}


def _require_even(r: int):
    if r % 2:
        raise UniformityError(f"zigzags are defined for even r only, got r={r}")


def zigzag_layout(seq: Sequence[int], r: int) -> List[List[int]]:
    """Residue classes of ``seq`` in their required clockwise order.

    Class ``j`` is listed by increasing index for even ``j`` and by decreasing
    index for odd ``j``.
    """
    layout = []
    for j in range(r):
        members = list(seq[j::r])
        layout.append(members if j % 2 == 0 else members[::-1])
    return layout


def _cyclically_increasing(ground: CyclicGround, order: Sequence[int]) -> bool:
    if not order:
        return True
    origin = order[0]
    offsets = [ground.offset(origin, v) for v in order]
    return all(a < b for a, b in zip(offsets, offsets[1:]))


def zigzag_witness(
    ground: CyclicGround, seq: Sequence[int], r: int
) -> Optional[PathWitness]:
    """Segment decomposition of ``seq`` as a zigzag, ignoring the host edges."""
    layout = [part for part in zigzag_layout(seq, r) if part]
    flat = [v for part in layout for v in part]
    if not _cyclically_increasing(ground, flat):
        return None
    segments = tuple(Segment(part[0], part[-1]) for part in layout)
    return PathWitness(tuple(seq), segments)


def is_zigzag(H: Cgh, seq: Sequence[int]) -> Optional[PathWitness]:
    _require_even(H.r)
    seq = check_sequence(H, seq)
    if not is_tight_path(H, seq):
        raise PatternDomainError(f"sequence {seq} is not a tight path of the host")
    return zigzag_witness(H.ground, seq, H.r)


def interval_of_end(end: End) -> Segment:
    if end.k % 2:
        return Segment(end.vs[0], end.vs[1])
    return Segment(end.vs[-1], end.vs[0])


def _extensions(
    H: Cgh, end: End, allowed: Optional[FrozenSet[int]] = None
) -> FrozenSet[int]:
    interval = interval_of_end(end)
    candidates = H.completions.get(tuple(sorted(end.vs[1:])), frozenset())
    return frozenset(
        x
        for x in candidates
        if x not in end.vs
        and (allowed is None or x in allowed)
        and interval.contains(H.ground, x)
    )


def extension_set(H: Cgh, end: End) -> FrozenSet[int]:
    return _extensions(H, end)


def _first_ends(H: Cgh) -> FrozenSet[End]:
    # one traversal per choice of first vertex: the rotations of the sorted edge
    return frozenset(
        End(e[i:] + e[:i], 1) for e in H.edges for i in range(H.r)
    )


def _next_level(H: Cgh, level, allowed_for=None, parents=None):
    following = set()
    for end in sorted(level):
        allowed = allowed_for(end) if allowed_for else None
        for x in sorted(_extensions(H, end, allowed)):
            shifted = end.shift(x)
            following.add(shifted)
            if parents is not None:
                parents.setdefault(shifted, end)
    return frozenset(following)


@cost_time(message="enumerate zigzag ends")
def enumerate_end_levels(H: Cgh, k: int) -> List[FrozenSet[End]]:
    """``[S_1(H), ..., S_k(H)]`` by the extension recurrence."""
    _require_even(H.r)
    if k < 1:
        raise PatternDomainError(f"path length must be >= 1, got {k}")
    levels = [_first_ends(H)]
    while len(levels) < k:
        levels.append(_next_level(H, levels[-1]))
    logger.debug(f"end level sizes: {[len(level) for level in levels]}")
    return levels


def enumerate_ends(H: Cgh, k: int) -> FrozenSet[End]:
    return enumerate_end_levels(H, k)[-1]


def stuck_ends(H: Cgh, k: int) -> FrozenSet[End]:
    return frozenset(end for end in enumerate_ends(H, k) if not extension_set(H, end))


def nearest_extension(H: Cgh, end: End, candidates) -> int:
    if not candidates:
        raise PatternDomainError(f"end {end.vs} (k={end.k}) is stuck: X is empty")
    anchor = end.vs[0]
    if end.k % 2:
        return min(candidates, key=lambda x: H.ground.offset(anchor, x))
    return min(candidates, key=lambda x: H.ground.offset(x, anchor))


def extend_f(H: Cgh, end: End) -> End:
    """Shift ``end`` by the extension vertex closest to ``v_{k-1}`` in ``I(end)``."""
    return end.shift(nearest_extension(H, end, extension_set(H, end)))


def project_g(end: End) -> Tuple[int, ...]:
    return end.vs[1:]


def _unwind(end: End, parents: Dict[End, End]) -> Tuple[int, ...]:
    tail = []
    while end.k > 1:
        tail.append(end.vs[-1])
        end = parents[end]
    return end.vs + tuple(reversed(tail))


def mirror(H: Cgh) -> Cgh:
    """Image of ``H`` under the reflection ``v -> -v (mod n)``."""
    return H.relabel(H.ground.reflect)


def _find_clockwise(H: Cgh, k: int) -> Optional[PathWitness]:
    parents: Dict[End, End] = {}
    level = _first_ends(H)
    for _ in range(k - 1):
        if not level:
            return None
        level = _next_level(H, level, parents=parents)
    if not level:
        return None
    seq = _unwind(min(level), parents)
    return zigzag_witness(H.ground, seq, H.r)


def find_zigzag(H: Cgh, k: int, reflection_closed: bool = False) -> Optional[PathWitness]:
    """A k-zigzag of ``H``; with ``reflection_closed`` also counter-clockwise ones."""
    _require_even(H.r)
    if k < 1:
        raise PatternDomainError(f"path length must be >= 1, got {k}")
    witness = _find_clockwise(H, k)
    if witness is not None or not reflection_closed:
        return witness
    mirrored = _find_clockwise(mirror(H), k)
    if mirrored is None:
        return None
    reflect = H.ground.reflect
    return PathWitness(
        tuple(reflect(v) for v in mirrored.seq),
        tuple(Segment(reflect(s.v), reflect(s.u)) for s in mirrored.segments),
    )


def contains_zigzag(H: Cgh, k: int, reflection_closed: bool = False) -> bool:
    return find_zigzag(H, k, reflection_closed=reflection_closed) is not None
