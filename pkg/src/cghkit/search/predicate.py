"""Forbidden patterns for the extremal search, with full and incremental checks."""
import dataclasses
from math import comb
from typing import Optional

from ..core import Cgh, Edge
from ..errors import PatternDomainError, UniformityError
from ..patterns import (
    contains_disjoint_segments,
    contains_stack,
    contains_tight_path,
    contains_zigzag,
    find_disjoint_segments,
    find_stack,
    tight_paths_through,
    zigzag_witness,
)

__all__ = ["PatternPredicate", "PATTERN_KINDS"]

PATTERN_KINDS = ("tight_path", "zigzag", "stack", "disjoint_segments")


@dataclasses.dataclass(frozen=True)
class PatternPredicate:
    kind: str
    k: int
    convex: bool = True

    def __post_init__(self):
        kind = self.kind.replace("-", "_")
        if kind == "matching":
            kind = "disjoint_segments"
        object.__setattr__(self, "kind", kind)
        if kind not in PATTERN_KINDS:
            raise PatternDomainError(f"unknown pattern {self.kind!r}, expected one of {PATTERN_KINDS}")
        if self.k < 1:
            raise PatternDomainError(f"pattern size must be >= 1, got k={self.k}")
        if kind != "tight_path" and not self.convex:
            raise PatternDomainError(f"{kind} is an ordered pattern and needs convex=True")

    @property
    def label(self) -> str:
        return self.kind.replace("_", "-")

    def check_uniformity(self, r: int):
        if self.kind in ("zigzag", "stack") and r % 2:
            raise UniformityError(f"{self.label} needs even r, got r={r}")
        if self.kind == "disjoint_segments" and r != 2:
            raise UniformityError(f"{self.label} needs r=2, got r={r}")

    def contained_in(self, H: Cgh) -> bool:
        if self.kind == "tight_path":
            return contains_tight_path(H, self.k)
        if self.kind == "zigzag":
            return contains_zigzag(H, self.k, reflection_closed=True)
        if self.kind == "stack":
            return contains_stack(H, self.k)
        return contains_disjoint_segments(H, self.k)

    def created_by(self, H: Cgh, edge: Edge) -> bool:
        """Whether ``H`` holds a copy of the pattern that uses ``edge``."""
        if self.kind == "tight_path":
            return next(tight_paths_through(H, edge, self.k), None) is not None
        if self.kind == "zigzag":
            ground = H.ground
            for seq in tight_paths_through(H, edge, self.k):
                if zigzag_witness(ground, seq, H.r) is not None:
                    return True
                mirrored = tuple(ground.reflect(v) for v in seq)
                if zigzag_witness(ground, mirrored, H.r) is not None:
                    return True
            return False
        if self.kind == "stack":
            return find_stack(H, self.k, through=edge) is not None
        return find_disjoint_segments(H, self.k, through=edge) is not None

    def edge_cap(self, n: int, r: int) -> Optional[int]:
        """A proven ceiling on the extremal number, when one is cheap to state."""
        if self.kind == "tight_path":
            return min(comb(n, r), (self.k - 1) * comb(n, r - 1))
        return None
