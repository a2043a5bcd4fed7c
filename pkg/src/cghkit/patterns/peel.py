"""First-neighbor peeling of a convex geometric graph."""
from typing import Dict, Tuple

from ..core import Cgh, neighborhood
from ..errors import UniformityError

__all__ = ["first_neighbor_map", "peel_graph"]


def first_neighbor_map(G: Cgh) -> Dict[int, int]:
    """``f(v)``: the first neighbor of ``v`` met going clockwise from ``v``."""
    if G.r != 2:
        raise UniformityError(f"peeling needs a graph (r=2), got r={G.r}")
    first = {}
    for v in G.ground.vertices:
        neighbors = neighborhood(G, v)
        if neighbors:
            first[v] = min(neighbors, key=lambda w: G.ground.offset(v, w))
    return first


def peel_graph(G: Cgh) -> Tuple[Cgh, Cgh]:
    """Split ``G`` into ``E = {v f(v)}`` and the remainder ``F = G - E``."""
    first = first_neighbor_map(G)
    peeled = frozenset(tuple(sorted((v, w))) for v, w in first.items())
    return (
        Cgh(G.ground, 2, peeled),
        Cgh(G.ground, 2, G.edges - peeled),
    )
