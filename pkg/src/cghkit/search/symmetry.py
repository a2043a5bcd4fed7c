"""Vertex symmetry groups of Ω_n acting on r-sets."""
import dataclasses
from itertools import permutations
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from ..core import Cgh, Edge

__all__ = ["SymmetryGroup", "canonical_form", "edge_orbits"]

Permutation = Tuple[int, ...]

GROUP_KINDS = ("dihedral", "symmetric")


@dataclasses.dataclass(frozen=True)
class SymmetryGroup:
    """The dihedral group of the n-gon or the full symmetric group on its vertices."""

    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in GROUP_KINDS:
            raise ValueError(f"unknown symmetry group {self.kind!r}, expected one of {GROUP_KINDS}")

    @classmethod
    def for_pattern(cls, convex: bool, n: int) -> "SymmetryGroup":
        return cls("dihedral" if convex else "symmetric", n)

    def generators(self) -> List[Permutation]:
        n = self.n
        if n == 1:
            return []
        rotation = tuple((v + 1) % n for v in range(n))
        if self.kind == "dihedral":
            return [rotation, tuple((-v) % n for v in range(n))]
        swap = (1, 0) + tuple(range(2, n))
        return [rotation, swap]

    def elements(self) -> Iterator[Permutation]:
        n = self.n
        if self.kind == "symmetric":
            yield from permutations(range(n))
            return
        for t in range(n):
            yield tuple((v + t) % n for v in range(n))
            yield tuple((t - v) % n for v in range(n))

    @property
    def order(self) -> int:
        if self.kind == "dihedral":
            return 2 * self.n if self.n > 2 else self.n
        size = 1
        for i in range(2, self.n + 1):
            size *= i
        return size


def _apply(g: Permutation, edge: Sequence[int]) -> Edge:
    return tuple(sorted(g[v] for v in edge))


def edge_orbits(group: SymmetryGroup, edges: Iterable[Edge]) -> List[List[Edge]]:
    """Orbits of ``edges`` under ``group``, each sorted, in order of their least member.

    ``edges`` must be closed under the group.
    """
    edges = sorted(set(edges))
    parent: Dict[Edge, Edge] = {e: e for e in edges}

    def find(e: Edge) -> Edge:
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for g in group.generators():
        for e in edges:
            a, b = find(e), find(_apply(g, e))
            if a != b:
                parent[max(a, b)] = min(a, b)

    orbits: Dict[Edge, List[Edge]] = {}
    for e in edges:
        orbits.setdefault(find(e), []).append(e)
    return [orbits[root] for root in sorted(orbits)]


def canonical_form(H: Cgh, group: SymmetryGroup) -> Cgh:
    """The image of ``H`` with the lexicographically least sorted edge list."""
    best = min(
        (tuple(sorted(_apply(g, e) for e in H.edges)) for g in group.elements()),
        default=H.sorted_edges,
    )
    return Cgh(H.ground, H.r, frozenset(best))
