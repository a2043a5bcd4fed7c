"""Exact checks of the counting inequalities behind the extremal bounds."""
from fractions import Fraction
from math import comb, factorial
from typing import List, Optional, Tuple

import numpy as np

from ..constructions import lift_odd
from ..core import Cgh, link, shadow
from ..errors import PatternDomainError, PatternPresentError, UniformityError
from ..patterns import (
    Coloring,
    brute_force_ends,
    brute_force_good_ends,
    class_index,
    class_shadow,
    contains_tight_path,
    contains_zigzag,
    enumerate_end_levels,
    enumerate_good_end_levels,
    enumerate_good_ends,
    extend_f,
    extension_set,
    good_extension_set,
    mirror,
    peel_graph,
    project_g,
    restrict_color_regular,
)
from ..utils import logger
from .bounds import ell_for_k
from .coloring import SampleStatistic, expected_counts_exact
from .reports import BoundReport

__all__ = [
    "check_end_count_inequality",
    "check_injections",
    "check_good_path_inequalities",
    "check_expected_end_count",
    "check_odd_reduction",
    "check_link_recursion",
    "check_peeling",
    "check_recurrence",
]


def _shadow_size(H: Cgh) -> int:
    return len(H.completions) if H.r >= 2 else 0


def _even(H: Cgh):
    if H.r % 2:
        raise UniformityError(f"this check needs even r, got r={H.r}")


def check_end_count_inequality(H: Cgh, k: int) -> BoundReport:
    """``|S_k(H)| >= r|H| - (r-1)(k-1)|∂H|``."""
    _even(H)
    ends = enumerate_end_levels(H, k)[-1]
    lower = H.r * len(H) - (H.r - 1) * (k - 1) * _shadow_size(H)
    return BoundReport.compare("end-count", lower, len(ends), n=H.n, r=H.r, k=k)


def _is_rotation_of_sorted(values: Tuple[int, ...]) -> bool:
    ordered = tuple(sorted(values))
    return any(values[i:] + values[:i] == ordered for i in range(len(values)))


def check_injections(H: Cgh, k: int) -> Tuple[BoundReport, BoundReport]:
    """Extension ``f`` and projection ``g`` checked as injections into their targets.

    The first report compares ``|S_k - T_k|`` with the number of distinct
    ``f``-images that land in ``S_{k+1}``; the second compares ``|T_k|`` with
    the number of distinct ``g``-images that are cyclically ordered shadow
    elements. Both hold exactly when the map is an injection into its target.
    """
    _even(H)
    levels = enumerate_end_levels(H, k + 1)
    current, following = levels[k - 1], levels[k]
    stuck = frozenset(end for end in current if not extension_set(H, end))
    movable = current - stuck

    images = {extend_f(H, end) for end in movable}
    landed = images & following
    context = dict(n=H.n, r=H.r, k=k, next_level=len(following))
    f_report = BoundReport.compare(
        "extension-injection",
        len(movable),
        len(landed),
        injective=len(images) == len(movable),
        **context,
    )

    projections = {project_g(end) for end in stuck}
    valid = {
        t
        for t in projections
        if tuple(sorted(t)) in H.completions and _is_rotation_of_sorted(t)
    }
    g_report = BoundReport.compare(
        "projection-injection",
        len(stuck),
        len(valid),
        injective=len(projections) == len(stuck),
        shadow_bound=(H.r - 1) * _shadow_size(H),
        **context,
    )
    return f_report, g_report


def _class_shadow_sizes(G: Cgh, coloring: Coloring) -> List[int]:
    return [len(class_shadow(G, coloring, i)) for i in range(coloring.s)]


def check_good_path_inequalities(G: Cgh, coloring: Coloring, k: int) -> List[BoundReport]:
    """Stuck good ends against ``∂_i G`` and the resulting lower bound on ``|S_k(G)|``."""
    levels = enumerate_good_end_levels(G, coloring, k)
    s = coloring.s
    ends = levels[-1]
    stuck = [end for end in ends if not good_extension_set(G, coloring, end)]
    sizes = _class_shadow_sizes(G, coloring)
    i = class_index(k - 1, s)
    context = dict(n=G.n, r=G.r, k=k)
    stuck_report = BoundReport.compare(
        "good-stuck-ends", len(stuck), 2 ** (s - 1) * sizes[i], class_index=i, **context
    )
    lower = 2 ** s * len(G) - 2 ** (s - 1) * sum(
        sizes[class_index(j, s)] for j in range(k - 1)
    )
    ends_report = BoundReport.compare("good-end-count", lower, len(ends), **context)
    return [stuck_report, ends_report]


def check_expected_end_count(
    H: Cgh, k: int, samples: int, seed, tolerance_se: float = 3
) -> BoundReport:
    """Sampled ``E|S_k(G)|`` against the exact expectation of its lower bound.

    Every sample satisfies ``|S_k(G)| >= 2^s|G| - 2^{s-1} Σ_j |∂_{h(j)} G|``;
    the report compares the exact expectation of the right-hand side with
    the sampled mean of ``|S_k(G)|`` plus ``tolerance_se`` standard errors of
    the sampled right-hand side.
    """
    _even(H)
    if seed is None:
        raise ValueError("check_expected_end_count needs an explicit seed")
    s = H.r // 2
    rng = np.random.default_rng(seed)
    ends_total = 0
    rhs_total = rhs_squares = 0
    for _ in range(samples):
        coloring = Coloring(tuple(int(c) for c in rng.integers(0, s, size=H.n)), s)
        G = restrict_color_regular(H, coloring)
        sizes = _class_shadow_sizes(G, coloring)
        rhs = 2 ** s * len(G) - 2 ** (s - 1) * sum(sizes[class_index(j, s)] for j in range(k - 1))
        ends_total += len(enumerate_good_ends(G, coloring, k))
        rhs_total += rhs
        rhs_squares += rhs * rhs

    exact = expected_counts_exact(H)
    expected_rhs = 2 ** s * exact.edges - 2 ** (s - 1) * sum(
        exact.shadows[class_index(j, s)] for j in range(k - 1)
    )
    closed_form = _factorial_ratio(H.r, s) * len(H) - _factorial_ratio(
        H.r - 1, s
    ) * (k - 1) * _shadow_size(H)
    spread = SampleStatistic(rhs_total, rhs_squares, samples).standard_error
    return BoundReport.compare(
        "expected-end-count",
        expected_rhs,
        Fraction(ends_total, samples) + Fraction(tolerance_se) * spread,
        n=H.n,
        r=H.r,
        k=k,
        samples=samples,
        closed_form_rhs=str(closed_form),
    )


def _factorial_ratio(m: int, s: int) -> Fraction:
    """``m! / s^m``."""
    return Fraction(factorial(m), s ** m)


def check_odd_reduction(
    H: Cgh, k: int, x_count: Optional[int] = None, detect: bool = True
) -> BoundReport:
    """``|H| <= (k + floor((k-1)/r)) |∂H| / 2`` for an odd-uniform host without tight k-paths.

    The lift ``H+`` uses ``x_count > (ℓ-1)|H|/2`` new vertices; with
    ``detect`` it is also checked to have no tight ``ℓ``-path.
    """
    if H.r % 2 == 0:
        raise UniformityError(f"this check needs odd r, got r={H.r}")
    ell_value = ell_for_k(k, H.r)
    if contains_tight_path(H, k):
        raise PatternPresentError(f"host contains a tight {k}-path")
    minimum = (ell_value - 1) * len(H) // 2 + 1
    x_count = minimum if x_count is None else x_count
    if x_count < minimum:
        raise PatternDomainError(f"x_count must exceed (ell-1)|H|/2, need >= {minimum}, got {x_count}")
    lifted = lift_odd(H, x_count)
    context = dict(
        n=H.n,
        r=H.r,
        k=k,
        ell=ell_value,
        x_count=x_count,
        lift_edges_identity=len(lifted) == x_count * len(H),
        lift_shadow_identity=len(shadow(lifted)) == x_count * _shadow_size(H) + len(H),
    )
    if detect:
        context["lift_path_free"] = not contains_tight_path(lifted, ell_value)
        if not context["lift_path_free"]:
            logger.warning(f"lift of a tight-{k}-path-free host holds a tight {ell_value}-path")
    rhs = Fraction(k + (k - 1) // H.r, 2) * _shadow_size(H)
    return BoundReport.compare("odd-reduction", len(H), rhs, **context)


def check_link_recursion(H: Cgh, k: int) -> BoundReport:
    """``|H| <= k^2/(2r) C(n, r-1)`` through the link of a maximum-degree vertex."""
    if H.r < 2:
        raise UniformityError(f"this check needs r >= 2, got r={H.r}")
    if H.r < k - 1:
        raise PatternDomainError(f"the link bound needs r >= k-1, got r={H.r} k={k}")
    if contains_tight_path(H, k):
        raise PatternPresentError(f"host contains a tight {k}-path")
    v = max(H.ground.vertices, key=lambda u: (H.degree(u), -u))
    link_graph = link(H, v)
    context = dict(
        n=H.n,
        r=H.r,
        k=k,
        vertex=v,
        degree=len(link_graph),
        average_bound=Fraction(H.r * len(H), H.n) <= len(link_graph),
        link_path_free=not contains_tight_path(link_graph, k),
    )
    rhs = Fraction(k * k, 2 * H.r) * comb(H.n, H.r - 1)
    return BoundReport.compare("link-recursion", len(H), rhs, **context)


def check_peeling(G: Cgh, k: int) -> List[BoundReport]:
    """Edge counts of a graph without clockwise ``(2k+1)``-zigzags and of its peeling.

    With ``f(v)`` the first clockwise neighbor, a counter-clockwise
    ``(2k-1)``-zigzag of the remainder extends by ``f`` at both ends to a
    clockwise ``(2k+1)``-zigzag, so the remainder has none.
    """
    if G.r != 2:
        raise UniformityError(f"peeling needs a graph (r=2), got r={G.r}")
    if k < 1:
        raise PatternDomainError(f"k must be >= 1, got {k}")
    if contains_zigzag(G, 2 * k + 1):
        raise PatternPresentError(f"graph contains a {2 * k + 1}-zigzag")
    peeled, remainder = peel_graph(G)
    remainder_free = not contains_zigzag(mirror(remainder), 2 * k - 1)
    context = dict(n=G.n, k=k)
    return [
        BoundReport.compare("zigzag-edge-count", len(G), k * G.n, **context),
        BoundReport.compare("peeled-edges", len(peeled), G.n, **context),
        BoundReport.compare(
            "peeled-remainder",
            len(remainder),
            (k - 1) * G.n,
            remainder_zigzag_free=remainder_free,
            **context,
        ),
    ]


def check_recurrence(H: Cgh, k: int, coloring: Optional[Coloring] = None) -> BoundReport:
    """Ends from the extension recurrence against the sequence oracle, level by level.

    ``lhs`` counts ends found by only one of the two methods.
    """
    if coloring is None:
        _even(H)
        levels = enumerate_end_levels(H, k)
    else:
        levels = enumerate_good_end_levels(H, coloring, k)
    mismatches = 0
    sizes = []
    for level, fast in enumerate(levels, start=1):
        if coloring is None:
            slow = brute_force_ends(H, level)
        else:
            slow = brute_force_good_ends(H, coloring, level)
        mismatches += len(fast ^ slow)
        sizes.append(len(fast))
    return BoundReport.compare(
        "recurrence", mismatches, 0, n=H.n, r=H.r, k=k, level_sizes=sizes,
        good_paths=coloring is not None,
    )
