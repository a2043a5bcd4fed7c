"""Good paths in a color-regular subgraph, the even-uniformity reduction.

Vertex ``v_j`` of a good path lies in class ``h(j) = floor(j/2) mod s``; inside
each class the path vertices form a 2-uniform zigzag in the inherited cyclic
order.
"""
import dataclasses
from itertools import product
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from ..core import Cgh, shadow
from ..errors import PatternDomainError, UniformityError
from ..utils import cost_time
from .paths import check_sequence, is_tight_path
from .zigzag import (
    End,
    _cyclically_increasing,
    _extensions,
    _next_level,
    _unwind,
    nearest_extension,
)

__all__ = [
    "Coloring",
    "class_index",
    "is_color_regular",
    "restrict_color_regular",
    "class_shadow",
    "is_good_path",
    "enumerate_good_end_levels",
    "enumerate_good_ends",
    "stuck_good_ends",
    "good_extension_set",
    "extend_good_f",
    "find_good_path",
]


@dataclasses.dataclass(frozen=True)
class Coloring:
    """Assignment of every vertex to one of ``s`` classes ``B_0, ..., B_{s-1}``."""

    classes: Tuple[int, ...]
    s: int

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(int(c) for c in self.classes))
        if self.s < 1:
            raise PatternDomainError(f"coloring needs s >= 1, got s={self.s}")
        for v, c in enumerate(self.classes):
            if not 0 <= c < self.s:
                raise PatternDomainError(f"vertex {v} has class {c} outside [0, {self.s})")

    @classmethod
    def trivial(cls, n: int) -> "Coloring":
        return cls((0,) * n, 1)

    @property
    def n(self) -> int:
        return len(self.classes)

    def class_of(self, v: int) -> int:
        return self.classes[v]

    def members(self, i: int) -> FrozenSet[int]:
        return frozenset(v for v, c in enumerate(self.classes) if c == i)

    def validate_for(self, H: Cgh):
        if H.r % 2:
            raise UniformityError(f"good paths need even r, got r={H.r}")
        if self.s != H.r // 2:
            raise PatternDomainError(f"coloring has s={self.s} classes, r={H.r} needs {H.r // 2}")
        if self.n != H.n:
            raise PatternDomainError(f"coloring covers {self.n} vertices, host has {H.n}")

    def to_json(self):
        return {"s": self.s, "classes": list(self.classes)}


def class_index(j: int, s: int) -> int:
    return (j // 2) % s


def _class_counts(vertices, coloring: Coloring) -> List[int]:
    counts = [0] * coloring.s
    for v in vertices:
        counts[coloring.class_of(v)] += 1
    return counts


def is_color_regular(H: Cgh, coloring: Coloring) -> bool:
    return all(
        all(c == 2 for c in _class_counts(e, coloring)) for e in H.edges
    )


def restrict_color_regular(H: Cgh, coloring: Coloring) -> Cgh:
    """``G = {e in H : |e ∩ B_i| = 2 for every i}``."""
    coloring.validate_for(H)
    return Cgh(
        H.ground,
        H.r,
        frozenset(
            e for e in H.edges if all(c == 2 for c in _class_counts(e, coloring))
        ),
    )


def class_shadow(G: Cgh, coloring: Coloring, i: int) -> Cgh:
    """``∂_i G``: shadow elements meeting ``B_i`` in exactly one vertex."""
    return Cgh(
        G.ground,
        G.r - 1,
        frozenset(
            f for f in shadow(G).edges if _class_counts(f, coloring)[i] == 1
        ),
    )


def is_good_path(H: Cgh, coloring: Coloring, seq: Sequence[int]) -> bool:
    coloring.validate_for(H)
    seq = check_sequence(H, seq)
    if not is_tight_path(H, seq):
        raise PatternDomainError(f"sequence {seq} is not a tight path of the host")
    s, r = coloring.s, H.r
    if any(coloring.class_of(v) != class_index(j, s) for j, v in enumerate(seq)):
        return False
    for i in range(s):
        ascending = list(seq[2 * i :: r])
        descending = list(seq[2 * i + 1 :: r])[::-1]
        if not _cyclically_increasing(H.ground, ascending + descending):
            return False
    return True


def _first_good_ends(G: Cgh, coloring: Coloring) -> FrozenSet[End]:
    ends = set()
    for e in G.edges:
        pairs = [tuple(v for v in e if coloring.class_of(v) == i) for i in range(coloring.s)]
        for flips in product((False, True), repeat=coloring.s):
            vs = ()
            for pair, flip in zip(pairs, flips):
                vs += pair[::-1] if flip else pair
            ends.add(End(vs, 1))
    return frozenset(ends)


def _check_regular(G: Cgh, coloring: Coloring):
    coloring.validate_for(G)
    for e in G.sorted_edges:
        counts = _class_counts(e, coloring)
        if any(c != 2 for c in counts):
            raise PatternDomainError(
                f"edge {e} meets the color classes {counts} times, expected 2 each"
            )


@cost_time(message="enumerate good ends")
def enumerate_good_end_levels(G: Cgh, coloring: Coloring, k: int) -> List[FrozenSet[End]]:
    _check_regular(G, coloring)
    if k < 1:
        raise PatternDomainError(f"path length must be >= 1, got {k}")
    members = [coloring.members(i) for i in range(coloring.s)]

    def allowed_for(end: End):
        return members[class_index(end.k - 1, coloring.s)]

    levels = [_first_good_ends(G, coloring)]
    while len(levels) < k:
        levels.append(_next_level(G, levels[-1], allowed_for=allowed_for))
    return levels


def enumerate_good_ends(G: Cgh, coloring: Coloring, k: int) -> FrozenSet[End]:
    return enumerate_good_end_levels(G, coloring, k)[-1]


def good_extension_set(G: Cgh, coloring: Coloring, end: End) -> FrozenSet[int]:
    return _extensions(G, end, coloring.members(class_index(end.k - 1, coloring.s)))


def stuck_good_ends(G: Cgh, coloring: Coloring, k: int) -> FrozenSet[End]:
    return frozenset(
        end
        for end in enumerate_good_ends(G, coloring, k)
        if not good_extension_set(G, coloring, end)
    )


def extend_good_f(G: Cgh, coloring: Coloring, end: End) -> End:
    return end.shift(nearest_extension(G, end, good_extension_set(G, coloring, end)))


def find_good_path(G: Cgh, coloring: Coloring, k: int) -> Optional[Tuple[int, ...]]:
    """Vertex sequence of a good k-path of ``G``, or ``None``."""
    _check_regular(G, coloring)
    if k < 1:
        raise PatternDomainError(f"path length must be >= 1, got {k}")
    members = [coloring.members(i) for i in range(coloring.s)]
    parents: Dict[End, End] = {}
    level = _first_good_ends(G, coloring)
    for _ in range(k - 1):
        if not level:
            return None
        level = _next_level(
            G,
            level,
            allowed_for=lambda end: members[class_index(end.k - 1, coloring.s)],
            parents=parents,
        )
    if not level:
        return None
    return _unwind(min(level), parents)
