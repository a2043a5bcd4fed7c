"""Extremal constructions, each returned with its exact edge count."""
import dataclasses
from fractions import Fraction
from itertools import combinations
from math import comb, factorial
from typing import Any, Dict, FrozenSet, List, Optional, Set

from ..core import Cgh, CyclicGround, Edge, ell
from ..errors import ConstructionParameterError
from ..utils import logger
from .registry import register_construction

__all__ = [
    "ConstructionReport",
    "short_pairs_construction",
    "stack_free_parts",
    "stack_free_construction",
    "stack_free_by_predicate",
    "clique_union",
    "partitioned_construction",
    "stack_witness",
    "stack_witness_report",
]


@dataclasses.dataclass
class ConstructionReport:
    """A generated host, its size and the pattern it is claimed to avoid.

    ``predicted_leading_term`` is the coefficient of ``C(n, r-1)`` in the
    predicted edge count.
    """

    cgh: Cgh
    edge_count: int
    predicted_leading_term: Optional[Fraction]
    claim: str
    details: Dict[str, Any] = dataclasses.field(default_factory=dict)

    def __post_init__(self):
        assert self.edge_count == len(self.cgh), "edge_count out of sync with cgh"

    @property
    def leading_ratio(self) -> Optional[Fraction]:
        """``edge_count`` over the predicted ``coefficient * C(n, r-1)``."""
        if not self.predicted_leading_term:
            return None
        scale = self.predicted_leading_term * comb(self.cgh.n, self.cgh.r - 1)
        return Fraction(self.edge_count) / scale

    def to_json(self):
        return {
            "n": self.cgh.n,
            "r": self.cgh.r,
            "edge_count": self.edge_count,
            "predicted_leading_term": None
            if self.predicted_leading_term is None
            else str(self.predicted_leading_term),
            "claim": self.claim,
            "details": self.details,
        }


def _report(n: int, r: int, edges, predicted, claim: str, **details) -> ConstructionReport:
    cgh = Cgh.from_edges(n, r, edges)
    logger.debug(f"construction avoiding {claim} n={n} r={r}: {len(cgh)} edges")
    return ConstructionReport(cgh, len(cgh), predicted, claim, details)


def _require(condition: bool, message: str):
    if not condition:
        raise ConstructionParameterError(message)


def _require_even_r(r: int):
    _require(r >= 2 and r % 2 == 0, f"r must be even and >= 2, got r={r}")


@register_construction("short-pairs", tags=("stack",))
def short_pairs_construction(n: int, r: int, k: int) -> ConstructionReport:
    """All r-sets whose pairs are at cyclic distance at most ``k - 1``."""
    _require_even_r(r)
    _require(k >= 3 and k % 2 == 1, f"k must be odd and >= 3, got k={k}")
    _require(n > 2 * (k - 1), f"n must exceed 2(k-1)={2 * (k - 1)}, got n={n}")
    ground = CyclicGround(n)
    edges = [
        e
        for e in combinations(range(n), r)
        if all(ell(ground, u, v) <= k - 1 for u, v in combinations(e, 2))
    ]
    predicted = Fraction(k - 1) if r == 2 else Fraction(0)
    return _report(n, r, edges, predicted, "stack", k=k)


def _arc(lo: int, hi: int) -> List[int]:
    """Vertices strictly between ``lo`` and ``hi``, vertex 0 excluded."""
    return [v for v in range(lo + 1, hi) if v != 0]


def _pair_parts(n: int, r: int, j: int, cyclic: bool) -> Set[Edge]:
    """Sets avoiding 0 with a (cyclically) consecutive pair at distance ``j``."""
    ground = CyclicGround(n)
    found = set()
    for a, b in combinations(range(1, n), 2):
        if ell(ground, a, b) != j:
            continue
        # the remaining r-2 vertices all sit on one side of the chord ab
        outside = _arc(0, a) + _arc(b, n)
        sides = [outside, _arc(a, b)] if cyclic else [outside]
        for side in sides:
            for rest in combinations(side, r - 2):
                found.add(tuple(sorted((a, b) + rest)))
    return found


def _long_pair_part(n: int, r: int, k: int) -> Set[Edge]:
    """Sets avoiding 0 whose pair ``(v_{2h-1}, v_{2h})`` has distance k-1 or k."""
    ground = CyclicGround(n)
    found = set()
    for h in range(1, r // 2):
        for a, b in combinations(range(1, n), 2):
            if ell(ground, a, b) not in (k - 1, k):
                continue
            for below in combinations(range(1, a), 2 * h - 1):
                for above in combinations(range(b + 1, n), r - 1 - 2 * h):
                    found.add(below + (a, b) + above)
    return found


def stack_free_parts(n: int, r: int, k: int, cyclic: bool = True) -> List[FrozenSet[Edge]]:
    """``[H_0, ..., H_{k-1}]``; parts after ``H_0`` exclude the edges of ``H_0``."""
    _require_even_r(r)
    _require(k >= 1, f"k must be >= 1, got k={k}")
    _require(n >= r + k, f"n must be at least r + k = {r + k}, got n={n}")
    parts = [frozenset((0,) + rest for rest in combinations(range(1, n), r - 1))]
    for j in range(1, k - 1):
        parts.append(frozenset(_pair_parts(n, r, j, cyclic)))
    if k >= 2:
        parts.append(frozenset(_long_pair_part(n, r, k)))
    return parts


def _intersections(parts: List[FrozenSet[Edge]]) -> Dict[str, int]:
    return {
        f"{i},{j}": len(parts[i] & parts[j])
        for i, j in combinations(range(len(parts)), 2)
    }


@register_construction("stack-free", tags=("stack",))
def stack_free_construction(n: int, r: int, k: int, cyclic: bool = True) -> ConstructionReport:
    """``H(n, r, k) = H_0 ∪ ... ∪ H_{k-1}``.

    ``cyclic=False`` reads the consecutive pairs of the middle parts without
    the wrap-around pair ``(v_{r-1}, v_0)``.
    """
    parts = stack_free_parts(n, r, k, cyclic=cyclic)
    edges = frozenset().union(*parts)
    details = {
        "k": k,
        "cyclic": cyclic,
        "part_sizes": [len(p) for p in parts],
        "intersections": _intersections(parts),
        "h0_expected": comb(n - 1, r - 1),
    }
    if k == 1:
        details["degenerate"] = "k=1: every nonempty host contains a 1-stack"
    return _report(n, r, edges, Fraction((k - 1) * (r - 1)), "stack", **details)


def _in_stack_free(ground: CyclicGround, e: Edge, k: int, cyclic: bool) -> bool:
    if e[0] == 0:
        return True
    r = len(e)
    pairs = range(r) if cyclic else range(r - 1)
    for h in pairs:
        if 1 <= ell(ground, e[h], e[(h + 1) % r]) <= k - 2:
            return True
    return k >= 2 and any(
        ell(ground, e[2 * h - 1], e[2 * h]) in (k - 1, k) for h in range(1, r // 2)
    )


def stack_free_by_predicate(n: int, r: int, k: int, cyclic: bool = True) -> Cgh:
    """``H(n, r, k)`` by testing the defining predicate on every r-set."""
    _require_even_r(r)
    _require(n >= r + k, f"n must be at least r + k = {r + k}, got n={n}")
    ground = CyclicGround(n)
    return Cgh.from_edges(
        n,
        r,
        (e for e in combinations(range(n), r) if _in_stack_free(ground, e, k, cyclic)),
    )


@register_construction("clique-union", tags=("zigzag",))
def clique_union(n: int, k: int) -> ConstructionReport:
    """Cliques of order ``k`` on consecutive vertices, the last one truncated."""
    _require(k >= 2, f"k must be >= 2, got k={k}")
    _require(n >= 1, f"n must be >= 1, got n={n}")
    blocks = [list(range(start, min(start + k, n))) for start in range(0, n, k)]
    edges = [(u, v) for block in blocks for u, v in combinations(block, 2)]
    expected = (n // k) * comb(k, 2) + comb(n % k, 2)
    return _report(
        n, 2, edges, Fraction(k - 1, 2), "zigzag", k=k, expected_count=expected,
        tight=n % k == 0, blocks=blocks,
    )


@register_construction("partitioned", tags=("tight-path",))
def partitioned_construction(n: int, r: int, k: int) -> ConstructionReport:
    """Union of ``G_i``: one vertex in ``A_i``, one in ``B_i - A_i``, pairs elsewhere."""
    _require_even_r(r)
    s = r // 2
    _require(n % s == 0, f"s = r/2 = {s} must divide n={n}")
    _require(k >= 1 and (k - 1) % r == 0, f"r={r} must divide k-1={k - 1}")
    size, a = n // s, (k - 1) // r
    _require(a <= size, f"(k-1)/r = {a} exceeds the class size n/s = {size}")
    classes = [list(range(i * size, (i + 1) * size)) for i in range(s)]
    transversals = [block[:a] for block in classes]
    rests = [block[a:] for block in classes]

    edges = []
    for i in range(s):
        others = [list(combinations(rests[j], 2)) for j in range(s) if j != i]
        for x in transversals[i]:
            for y in rests[i]:
                partial = [(x, y)]
                for pairs in others:
                    partial = [p + q for p in partial for q in pairs]
                edges.extend(partial)

    exact = s * a * (size - a) * comb(size - a, 2) ** (s - 1)
    leading = Fraction(2 ** (s - 1) * (k - 1))
    per_power = leading * Fraction(n, r) ** (r - 1)
    per_binomial = leading * comb(n, r) ** (r - 1)
    return _report(
        n,
        r,
        edges,
        leading * Fraction(factorial(r - 1), r ** (r - 1)),
        "tight-path",
        k=k,
        expected_count=exact,
        residual_power=str(exact - per_power),
        residual_binomial=str(exact - per_binomial),
    )


def stack_witness(n: int, r: int, k: int) -> Cgh:
    """The k edges of a stack on the first ``kr`` vertices of ``Ω_n``."""
    _require(r >= 1, f"r must be >= 1, got r={r}")
    _require(k >= 1, f"k must be >= 1, got k={k}")
    _require(n >= k * r, f"n must be at least k*r = {k * r}, got n={n}")
    edges = []
    for i in range(k):
        edges.append(
            tuple(j * k + (i if j % 2 == 0 else k - 1 - i) for j in range(r))
        )
    return Cgh.from_edges(n, r, edges)


@register_construction("stack-witness", tags=("stack",))
def stack_witness_report(n: int, r: int, k: int) -> ConstructionReport:
    cgh = stack_witness(n, r, k)
    return ConstructionReport(cgh, len(cgh), None, "none", {"k": k, "contains": "stack"})
