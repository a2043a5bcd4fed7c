"""Cyclic ground set Ω_n, segments and cyclic distance."""
import dataclasses
from typing import Tuple

from ..errors import VertexRangeError

__all__ = ["CyclicGround", "Segment", "in_segment", "ell"]


@dataclasses.dataclass(frozen=True)
class CyclicGround:
    """Vertices ``0..n-1`` in clockwise order; the successor of ``n-1`` is ``0``."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"ground set needs n >= 1, got {self.n!r}")

    def check(self, *vertices):
        for v in vertices:
            if not isinstance(v, int) or not 0 <= v < self.n:
                raise VertexRangeError(v, self.n)

    def successor(self, v: int) -> int:
        self.check(v)
        return (v + 1) % self.n

    def offset(self, u: int, v: int) -> int:
        """Clockwise number of steps from ``u`` to ``v``."""
        return (v - u) % self.n

    def reflect(self, v: int) -> int:
        return (-v) % self.n

    @property
    def vertices(self) -> range:
        return range(self.n)


@dataclasses.dataclass(frozen=True)
class Segment:
    """The clockwise segment [u, v], endpoints included."""

    u: int
    v: int

    def size(self, ground: CyclicGround) -> int:
        ground.check(self.u, self.v)
        return ground.offset(self.u, self.v) + 1

    def members(self, ground: CyclicGround) -> Tuple[int, ...]:
        size = self.size(ground)
        return tuple((self.u + i) % ground.n for i in range(size))

    def contains(self, ground: CyclicGround, w: int) -> bool:
        return in_segment(ground, self.u, w, self.v)

    def as_list(self):
        return [self.u, self.v]


def in_segment(ground: CyclicGround, u: int, w: int, v: int) -> bool:
    ground.check(u, w, v)
    return ground.offset(u, w) <= ground.offset(u, v)


def ell(ground: CyclicGround, u: int, v: int) -> int:
    """Number of sides on a shortest arc between ``u`` and ``v``."""
    ground.check(u, v)
    return min(ground.offset(u, v), ground.offset(v, u))
