"""The r-uniform convex geometric hypergraph container and its derived graphs."""
import dataclasses
import functools
from collections import defaultdict
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, Set, Tuple

from ..errors import UniformityError, VertexRangeError
from .ground import CyclicGround

__all__ = ["Edge", "Cgh", "shadow", "link", "neighborhood", "complete_cgh"]

Edge = Tuple[int, ...]


def _normalize_edge(vertices: Iterable[int], ground: CyclicGround, r: int) -> Edge:
    edge = tuple(sorted(int(v) for v in vertices))
    if len(edge) != r:
        raise UniformityError(f"edge {edge} does not have exactly {r} vertices")
    if len(set(edge)) != r:
        raise UniformityError(f"edge {edge} has repeated vertices")
    for v in edge:
        if not 0 <= v < ground.n:
            raise VertexRangeError(v, ground.n)
    return edge


@dataclasses.dataclass(frozen=True)
class Cgh:
    """An r-uniform hypergraph on the cyclic ground set; edges are sorted r-tuples.

    Shadows of graphs are 1-uniform, so ``r >= 1`` is accepted here; every
    pattern operation states its own lower bound on ``r``.
    """

    ground: CyclicGround
    r: int
    edges: FrozenSet[Edge] = frozenset()

    def __post_init__(self):
        if self.r < 1:
            raise UniformityError(f"uniformity must be >= 1, got {self.r}")
        normalized = frozenset(
            _normalize_edge(e, self.ground, self.r) for e in self.edges
        )
        object.__setattr__(self, "edges", normalized)

    @classmethod
    def from_edges(cls, n: int, r: int, edges: Iterable[Iterable[int]] = ()) -> "Cgh":
        return cls(CyclicGround(n), r, frozenset(tuple(e) for e in edges))

    @property
    def n(self) -> int:
        return self.ground.n

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.sorted_edges)

    def __contains__(self, vertices) -> bool:
        return self.has_edge(vertices)

    @functools.cached_property
    def sorted_edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def has_edge(self, vertices: Iterable[int]) -> bool:
        return tuple(sorted(vertices)) in self.edges

    @functools.cached_property
    def completions(self) -> Dict[Edge, FrozenSet[int]]:
        """Map each (r-1)-subset of an edge to the vertices completing it to an edge."""
        table: Dict[Edge, Set[int]] = defaultdict(set)
        for e in self.edges:
            for x in e:
                table[tuple(u for u in e if u != x)].add(x)
        return {key: frozenset(value) for key, value in table.items()}

    @functools.cached_property
    def incidence(self) -> Dict[int, Tuple[Edge, ...]]:
        table: Dict[int, list] = defaultdict(list)
        for e in self.sorted_edges:
            for v in e:
                table[v].append(e)
        return {v: tuple(es) for v, es in table.items()}

    def degree(self, v: int) -> int:
        self.ground.check(v)
        return len(self.incidence.get(v, ()))

    def with_edges(self, edges: Iterable[Iterable[int]]) -> "Cgh":
        added = {tuple(sorted(e)) for e in edges}
        return Cgh(self.ground, self.r, self.edges | added)

    def without_edges(self, edges: Iterable[Iterable[int]]) -> "Cgh":
        removed = {tuple(sorted(e)) for e in edges}
        return Cgh(self.ground, self.r, self.edges - removed)

    def relabel(self, mapping) -> "Cgh":
        """Image under a vertex permutation given as a sequence or callable."""
        apply = mapping if callable(mapping) else mapping.__getitem__
        return Cgh(
            self.ground,
            self.r,
            frozenset(tuple(sorted(apply(v) for v in e)) for e in self.edges),
        )


def complete_cgh(n: int, r: int) -> Cgh:
    return Cgh.from_edges(n, r, combinations(range(n), r))


def shadow(H: Cgh) -> Cgh:
    """Distinct (r-1)-sets obtained by deleting one vertex from an edge."""
    if H.r < 2:
        raise UniformityError(f"shadow needs r >= 2, got r={H.r}")
    return Cgh(H.ground, H.r - 1, frozenset(H.completions))


def link(H: Cgh, v: int) -> Cgh:
    H.ground.check(v)
    if H.r < 2:
        raise UniformityError(f"link needs r >= 2, got r={H.r}")
    return Cgh(
        H.ground,
        H.r - 1,
        frozenset(tuple(u for u in e if u != v) for e in H.incidence.get(v, ())),
    )


def neighborhood(H: Cgh, v: int) -> FrozenSet[int]:
    H.ground.check(v)
    return frozenset(u for e in H.incidence.get(v, ()) for u in e if u != v)
