"""Stacks (every r-th edge of a zigzag) and non-crossing segment matchings.

Both detectors reduce to a clique search over a pairwise compatibility graph
on the edges, encoded as integer bitmasks.
"""
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from ..core import Cgh, CyclicGround, Edge, Segment
from ..errors import PatternDomainError, UniformityError
from ..utils import cost_time, logger
from .zigzag import PathWitness

__all__ = [
    "stack_arrangement",
    "find_stack",
    "contains_stack",
    "find_disjoint_segments",
    "contains_disjoint_segments",
]

STACK_MODES = ("exhaustive", "sampled")


def stack_arrangement(
    ground: CyclicGround, edges: Sequence[Edge]
) -> Optional[PathWitness]:
    """Order ``edges`` as ``e_0, ..., e_{k-1}`` of a stack, if possible.

    The returned ``seq`` is ``v_0, ..., v_{kr-1}`` of the underlying zigzag
    with ``e_i = {v_{ir}, ..., v_{ir+r-1}}``; segment ``j`` holds the
    ``j``-th vertex of every edge.
    """
    edges = [tuple(sorted(e)) for e in edges]
    k = len(edges)
    if k == 0:
        return None
    r = len(edges[0])
    owner = {}
    for label, e in enumerate(edges):
        for v in e:
            if v in owner:
                return None
            owner[v] = label
    points = sorted(owner)
    for start in range(k * r):
        rotated = points[start:] + points[:start]
        blocks = [rotated[j * k : (j + 1) * k] for j in range(r)]
        order = [owner[v] for v in blocks[0]]
        if len(set(order)) != k:
            continue
        if all(
            [owner[v] for v in block] == (order if j % 2 == 0 else order[::-1])
            for j, block in enumerate(blocks)
        ):
            position = {label: i for i, label in enumerate(order)}
            seq = [0] * (k * r)
            for j, block in enumerate(blocks):
                for v in block:
                    seq[position[owner[v]] * r + j] = v
            segments = tuple(Segment(block[0], block[-1]) for block in blocks)
            return PathWitness(tuple(seq), segments)
    return None


def _runs_of_two(labels: List[int]) -> bool:
    size = len(labels)
    start = next(i for i in range(size) if labels[i] != labels[i - 1])
    pattern = labels[start:] + labels[:start]
    return all(
        (pattern[i] == pattern[i + 1]) == (i % 2 == 0) for i in range(size - 1)
    )


def _stack_compatible(a: Edge, b: Edge) -> bool:
    # restricted to two edges a stack reads p q q p p q q ... p around the circle
    if set(a) & set(b):
        return False
    labels = [label for _, label in sorted([(v, 0) for v in a] + [(v, 1) for v in b])]
    return _runs_of_two(labels)


def _crossing(ground: CyclicGround, a: Edge, b: Edge) -> bool:
    u, v = a
    inside = [0 < ground.offset(u, w) < ground.offset(u, v) for w in b]
    return inside[0] != inside[1]


def _segments_compatible(ground: CyclicGround, a: Edge, b: Edge) -> bool:
    return not set(a) & set(b) and not _crossing(ground, a, b)


def _adjacency(edges: List[Edge], compatible: Callable[[Edge, Edge], bool]) -> List[int]:
    adjacency = [0] * len(edges)
    for i, a in enumerate(edges):
        for j in range(i + 1, len(edges)):
            if compatible(a, edges[j]):
                adjacency[i] |= 1 << j
                adjacency[j] |= 1 << i
    return adjacency


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _clique_search(
    adjacency: List[int],
    k: int,
    accept: Callable[[List[int]], bool],
    seed_members: Sequence[int] = (),
) -> Optional[List[int]]:
    chosen = list(seed_members)
    candidates = (1 << len(adjacency)) - 1
    for i in chosen:
        candidates &= adjacency[i]

    def extend(candidates: int) -> Optional[List[int]]:
        if len(chosen) == k:
            return list(chosen) if accept(chosen) else None
        while candidates and _popcount(candidates) + len(chosen) >= k:
            low = candidates & -candidates
            i = low.bit_length() - 1
            candidates ^= low
            chosen.append(i)
            found = extend(candidates & adjacency[i])
            chosen.pop()
            if found is not None:
                return found
        return None

    return extend(candidates)


def _check_k(k: int):
    if k < 1:
        raise PatternDomainError(f"pattern size must be >= 1, got k={k}")


def _exhaustive_stack(H: Cgh, k: int, through: Optional[Edge]) -> Optional[PathWitness]:
    edges = list(H.sorted_edges)
    adjacency = _adjacency(edges, _stack_compatible)
    seed_members = ()
    if through is not None:
        through = tuple(sorted(through))
        if through not in H:
            return None
        seed_members = (edges.index(through),)

    def accept(members):
        return stack_arrangement(H.ground, [edges[i] for i in members]) is not None

    found = _clique_search(adjacency, k, accept, seed_members)
    if found is None:
        return None
    return stack_arrangement(H.ground, [edges[i] for i in found])


def _sampled_stack(H: Cgh, k: int, budget: int, seed: int) -> Optional[PathWitness]:
    edges = list(H.sorted_edges)
    if not edges:
        return None
    rng = np.random.default_rng(seed)
    for trial in range(budget):
        picked: List[Edge] = []
        for index in rng.permutation(len(edges)):
            e = edges[int(index)]
            if all(_stack_compatible(e, other) for other in picked):
                picked.append(e)
                if len(picked) == k:
                    break
        if len(picked) == k:
            witness = stack_arrangement(H.ground, picked)
            if witness is not None:
                logger.debug(f"sampled stack found after {trial + 1} trials")
                return witness
    return None


@cost_time(message="stack search")
def find_stack(
    H: Cgh,
    k: int,
    mode: str = "exhaustive",
    budget: Optional[int] = None,
    seed: Optional[int] = None,
    through: Optional[Edge] = None,
) -> Optional[PathWitness]:
    """A k-stack of ``H``.

    ``mode="sampled"`` runs ``budget`` randomized greedy trials; ``None``
    then only means no stack was found. ``through`` restricts the exhaustive
    search to stacks using that edge.
    """
    if H.r % 2:
        raise UniformityError(f"stacks are defined for even r only, got r={H.r}")
    _check_k(k)
    if mode not in STACK_MODES:
        raise PatternDomainError(f"unknown stack mode {mode!r}, expected one of {STACK_MODES}")
    if mode == "exhaustive":
        return _exhaustive_stack(H, k, through)
    if budget is None or budget < 1:
        raise PatternDomainError(f"sampled mode needs a positive budget, got {budget}")
    if seed is None:
        raise PatternDomainError("sampled mode needs an explicit seed")
    return _sampled_stack(H, k, budget, seed)


def contains_stack(H: Cgh, k: int, mode: str = "exhaustive", budget=None, seed=None) -> bool:
    return find_stack(H, k, mode=mode, budget=budget, seed=seed) is not None


def find_disjoint_segments(
    G: Cgh, k: int, through: Optional[Edge] = None
) -> Optional[Tuple[Edge, ...]]:
    """``k`` pairwise disjoint, pairwise non-crossing chords of ``G``."""
    if G.r != 2:
        raise UniformityError(f"segment matchings need r=2, got r={G.r}")
    _check_k(k)
    edges = list(G.sorted_edges)
    seed_members = ()
    if through is not None:
        through = tuple(sorted(through))
        if through not in G:
            return None
        seed_members = (edges.index(through),)
    adjacency = _adjacency(edges, lambda a, b: _segments_compatible(G.ground, a, b))
    found = _clique_search(adjacency, k, lambda members: True, seed_members)
    if found is None:
        return None
    return tuple(edges[i] for i in sorted(found))


def contains_disjoint_segments(G: Cgh, k: int) -> bool:
    return find_disjoint_segments(G, k) is not None
