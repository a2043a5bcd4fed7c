"""Exact extremal numbers by edge-by-edge branch and bound.

Root branches follow the edge orbits of the symmetry group: branch ``j``
forces the ``j``-th orbit representative in and every earlier orbit out.
Any nonempty pattern-free host has an image landing in exactly one branch.
"""
import dataclasses
from itertools import combinations
from typing import List, Optional, Sequence

from ..core import Cgh, CyclicGround, Edge
from ..errors import BudgetExhaustedError, UniformityError
from ..utils import SearchOptions, cghkit_config, cost_time, logger
from .predicate import PatternPredicate
from .symmetry import SymmetryGroup, canonical_form, edge_orbits

__all__ = ["ExtremalResult", "max_edges_avoiding"]

BRANCH_ORDERS = ("include", "exclude")


@dataclasses.dataclass
class ExtremalResult:
    n: int
    r: int
    pattern: PatternPredicate
    max_edges: int
    witness: Cgh
    nodes_explored: int
    exact: bool

    def to_json(self):
        return {
            "n": self.n,
            "r": self.r,
            "k": self.pattern.k,
            "pattern": self.pattern.label,
            "convex": self.pattern.convex,
            "max_edges": self.max_edges,
            "nodes_explored": self.nodes_explored,
            "exact": self.exact,
            "witness": [list(e) for e in self.witness.sorted_edges],
        }


class _BranchAndBound:
    def __init__(self, ground: CyclicGround, r: int, pattern: PatternPredicate, options: SearchOptions):
        self.ground = ground
        self.r = r
        self.pattern = pattern
        self.budget = options.budget
        self.include_first = options.branch_order == "include"
        self.cap = pattern.edge_cap(ground.n, r)
        self.best: List[Edge] = []
        self.nodes = 0
        self.exhausted = False

    def done(self) -> bool:
        return self.exhausted or (self.cap is not None and len(self.best) >= self.cap)

    def admits(self, chosen: Sequence[Edge], edge: Edge) -> bool:
        host = Cgh(self.ground, self.r, frozenset(chosen) | {edge})
        return not self.pattern.created_by(host, edge)

    def descend(self, chosen: List[Edge], available: Sequence[Edge], i: int):
        self.nodes += 1
        if self.nodes > self.budget:
            self.exhausted = True
            return
        if len(chosen) > len(self.best):
            self.best = list(chosen)
            logger.info(f"incumbent improved to {len(chosen)} edges after {self.nodes} nodes")
        if self.done() or i == len(available):
            return
        if len(chosen) + len(available) - i <= len(self.best):
            return
        edge = available[i]
        for include in (True, False) if self.include_first else (False, True):
            if include:
                if self.admits(chosen, edge):
                    chosen.append(edge)
                    self.descend(chosen, available, i + 1)
                    chosen.pop()
            else:
                self.descend(chosen, available, i + 1)
            if self.done():
                return

    def run(self, edges: Sequence[Edge], group: Optional[SymmetryGroup]):
        if group is None:
            self.descend([], edges, 0)
            return
        excluded = set()
        for orbit in edge_orbits(group, edges):
            representative = orbit[0]
            if self.admits([], representative):
                available = [e for e in edges if e not in excluded and e != representative]
                self.descend([representative], available, 0)
            if self.done():
                return
            excluded.update(orbit)


@cost_time(message="extremal search")
def max_edges_avoiding(
    n: int,
    r: int,
    pattern: PatternPredicate,
    budget: Optional[int] = None,
    options: Optional[SearchOptions] = None,
    strict: bool = False,
) -> ExtremalResult:
    """Largest r-graph on ``Ω_n`` avoiding ``pattern``.

    On budget exhaustion the best host found so far is returned with
    ``exact=False``, or ``BudgetExhaustedError`` is raised when ``strict``.
    """
    options = dataclasses.replace(options or SearchOptions(budget=cghkit_config.node_budget))
    if budget is not None:
        options.budget = budget
    if options.budget < 1:
        raise ValueError(f"node budget must be positive, got {options.budget}")
    if options.branch_order not in BRANCH_ORDERS:
        raise ValueError(f"unknown branch order {options.branch_order!r}, expected one of {BRANCH_ORDERS}")
    if r < 1 or r > n:
        raise UniformityError(f"need 1 <= r <= n, got n={n} r={r}")
    pattern.check_uniformity(r)

    ground = CyclicGround(n)
    edges = list(combinations(range(n), r))
    group = SymmetryGroup.for_pattern(pattern.convex, n) if options.use_symmetry else None
    search = _BranchAndBound(ground, r, pattern, options)
    search.run(edges, group)

    witness = Cgh(ground, r, frozenset(search.best))
    if group is not None and (group.kind == "dihedral" or n <= 8):
        witness = canonical_form(witness, group)
    exact = not search.exhausted
    if not exact:
        message = (
            f"node budget {options.budget} exhausted for {pattern.label}(k={pattern.k}) "
            f"n={n} r={r}; best found {len(witness)} edges"
        )
        if strict:
            raise BudgetExhaustedError(message)
        logger.warning(message)
    return ExtremalResult(n, r, pattern, len(witness), witness, search.nodes, exact)
