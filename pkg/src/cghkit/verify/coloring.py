"""Random s-colorings of an even-uniform host and the expected sizes they induce."""
import dataclasses
from fractions import Fraction
from itertools import product
from math import factorial
from typing import List, NamedTuple, Optional, Tuple

import numpy as np

from ..core import Cgh
from ..errors import UniformityError
from ..patterns import Coloring, class_shadow, restrict_color_regular
from ..utils import SamplingOptions, cghkit_config, cost_time, logger
from .bounds import sqrt_upper
from .reports import BoundReport

__all__ = [
    "ColoringReduction",
    "ExpectedCounts",
    "SampleStatistic",
    "ColoringExperiment",
    "coloring_reduction",
    "expected_counts_exact",
    "monte_carlo_counts",
]


class ColoringReduction(NamedTuple):
    coloring: Coloring
    G: Cgh
    shadow_parts: Tuple[int, ...]


@dataclasses.dataclass(frozen=True)
class ExpectedCounts:
    """Exact expectations over a uniform random s-coloring.

    ``shadows[i]`` is ``E|∂_i G|`` by linearity over shadow elements;
    ``shadow_bound`` is the closed form ``(r-1)!/(2^{s-1} s^{r-1}) |∂H|``,
    which ignores whether a completion survives and so bounds every entry
    of ``shadows`` from above.
    """

    edges: Fraction
    shadows: Tuple[Fraction, ...]
    shadow_bound: Fraction
    exhaustive: Optional[Tuple[Fraction, Tuple[Fraction, ...]]] = None

    def to_json(self):
        record = {
            "edges": str(self.edges),
            "shadows": [str(x) for x in self.shadows],
            "shadow_bound": str(self.shadow_bound),
        }
        if self.exhaustive is not None:
            edges, shadows = self.exhaustive
            record["exhaustive"] = {"edges": str(edges), "shadows": [str(x) for x in shadows]}
        return record


def _classes(H: Cgh) -> int:
    if H.r % 2:
        raise UniformityError(f"the coloring reduction needs even r, got r={H.r}")
    return H.r // 2


def coloring_reduction(H: Cgh, seed) -> ColoringReduction:
    """Color vertices uniformly at random and keep the edges with two per class."""
    s = _classes(H)
    if seed is None:
        raise ValueError("coloring_reduction needs an explicit seed")
    classes = np.random.default_rng(seed).integers(0, s, size=H.n)
    coloring = Coloring(tuple(int(c) for c in classes), s)
    return _reduce(H, coloring)


def _reduce(H: Cgh, coloring: Coloring) -> ColoringReduction:
    G = restrict_color_regular(H, coloring)
    parts = tuple(len(class_shadow(G, coloring, i)) for i in range(coloring.s))
    return ColoringReduction(coloring, G, parts)


def _completion_factor(s: int, completions: int) -> Fraction:
    return 1 - Fraction(s - 1, s) ** completions


def expected_counts_exact(H: Cgh, exhaustive_limit: Optional[int] = None) -> ExpectedCounts:
    s = _classes(H)
    r = H.r
    edge_factor = Fraction(factorial(r), 2 ** s * s ** r)
    shadow_factor = Fraction(factorial(r - 1), 2 ** (s - 1) * s ** (r - 1))
    # an (r-1)-set lands in ∂_i G iff it splits 2,..,1 (at i),..,2 and some completion has color i
    per_class = sum(
        (_completion_factor(s, len(xs)) for xs in H.completions.values()),
        Fraction(0),
    ) * shadow_factor
    exhaustive = None
    limit = cghkit_config.exhaustive_colorings if exhaustive_limit is None else exhaustive_limit
    if s ** H.n <= limit:
        exhaustive = _exhaustive_expectation(H, s)
    return ExpectedCounts(
        edge_factor * len(H),
        (per_class,) * s,
        shadow_factor * len(H.completions),
        exhaustive,
    )


def _exhaustive_expectation(H: Cgh, s: int) -> Tuple[Fraction, Tuple[Fraction, ...]]:
    total_edges = 0
    total_shadows = [0] * s
    count = 0
    for classes in product(range(s), repeat=H.n):
        reduction = _reduce(H, Coloring(classes, s))
        total_edges += len(reduction.G)
        for i, size in enumerate(reduction.shadow_parts):
            total_shadows[i] += size
        count += 1
    return Fraction(total_edges, count), tuple(Fraction(x, count) for x in total_shadows)


@dataclasses.dataclass
class SampleStatistic:
    """Mean and an upward-rounded standard error, both exact rationals."""

    total: int
    total_squares: int
    samples: int

    @property
    def mean(self) -> Fraction:
        return Fraction(self.total, self.samples)

    @property
    def standard_error(self) -> Fraction:
        if self.samples < 2:
            return Fraction(0)
        mean = self.mean
        variance = (Fraction(self.total_squares) - self.samples * mean * mean) / (self.samples - 1)
        return sqrt_upper(max(variance, Fraction(0)) / self.samples)

    def within(self, expected: Fraction, tolerance_se: float) -> bool:
        slack = Fraction(tolerance_se) * self.standard_error
        return abs(self.mean - expected) <= slack

    def to_json(self):
        return {"mean": float(self.mean), "standard_error": float(self.standard_error)}


@dataclasses.dataclass
class ColoringExperiment:
    seed: int
    samples: int
    observed_G: SampleStatistic
    observed_shadow_i: List[SampleStatistic]
    exact_expectations: ExpectedCounts

    def within_tolerance(self, tolerance_se: float = 3) -> List[bool]:
        """``[edges, shadow_0, ..., shadow_{s-1}]`` each within ``tolerance_se`` errors."""
        checks = [self.observed_G.within(self.exact_expectations.edges, tolerance_se)]
        for stat, expected in zip(self.observed_shadow_i, self.exact_expectations.shadows):
            checks.append(stat.within(expected, tolerance_se))
        return checks

    def reports(self, tolerance_se: float = 3) -> List[BoundReport]:
        """``|mean - exact| <= tolerance_se * SE`` for |G| and each |∂_i G|."""
        pairs = [("coloring-edges", self.observed_G, self.exact_expectations.edges)]
        for i, (stat, expected) in enumerate(
            zip(self.observed_shadow_i, self.exact_expectations.shadows)
        ):
            pairs.append((f"coloring-shadow-{i}", stat, expected))
        return [
            BoundReport.compare(
                name,
                abs(stat.mean - expected),
                Fraction(tolerance_se) * stat.standard_error,
                samples=self.samples,
                mean=str(stat.mean),
                expected=str(expected),
            )
            for name, stat, expected in pairs
        ]

    def to_json(self):
        return {
            "seed": self.seed,
            "samples": self.samples,
            "observed_G": self.observed_G.to_json(),
            "observed_shadow_i": [stat.to_json() for stat in self.observed_shadow_i],
            "exact_expectations": self.exact_expectations.to_json(),
        }


def _shadow_incidence(H: Cgh):
    """Rows ``(shadow element, edge, dropped vertex)`` sorted by shadow element."""
    keys = sorted(H.completions)
    key_index = {key: i for i, key in enumerate(keys)}
    edges = H.sorted_edges
    rows = []
    for e_index, e in enumerate(edges):
        for p, v in enumerate(e):
            rows.append((key_index[e[:p] + e[p + 1 :]], e_index, v))
    rows.sort()
    incidence = np.array(rows, dtype=np.int64).reshape(-1, 3)
    if not rows:
        return incidence, np.zeros(0, dtype=np.int64)
    boundary = np.r_[True, incidence[1:, 0] != incidence[:-1, 0]]
    return incidence, np.flatnonzero(boundary)


@cost_time(message="coloring monte carlo")
def monte_carlo_counts(
    H: Cgh,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    options: Optional[SamplingOptions] = None,
) -> ColoringExperiment:
    """Sample colorings in numpy batches and tally ``|G|`` and every ``|∂_i G|``."""
    s = _classes(H)
    options = options or SamplingOptions()
    samples = options.samples if samples is None else samples
    if seed is None:
        raise ValueError("monte_carlo_counts needs an explicit seed")
    if samples < 1:
        raise ValueError(f"samples must be positive, got {samples}")
    rng = np.random.default_rng(seed)
    edges = np.array(H.sorted_edges, dtype=np.int64).reshape(-1, H.r)
    incidence, starts = _shadow_incidence(H)

    totals = [0] * (s + 1)
    squares = [0] * (s + 1)
    done = 0
    while done < samples:
        batch = min(options.batch_size, samples - done)
        colors = rng.integers(0, s, size=(batch, H.n))
        counts = np.zeros((batch, s + 1), dtype=np.int64)
        if len(edges):
            edge_colors = colors[:, edges]
            survive = np.all(
                np.stack([(edge_colors == i).sum(axis=2) == 2 for i in range(s)]), axis=0
            )
            counts[:, 0] = survive.sum(axis=1)
            for i in range(s):
                hit = survive[:, incidence[:, 1]] & (colors[:, incidence[:, 2]] == i)
                counts[:, i + 1] = np.maximum.reduceat(hit.astype(np.int8), starts, axis=1).sum(axis=1)
        for j in range(s + 1):
            column = counts[:, j]
            totals[j] += int(column.sum())
            squares[j] += int((column * column).sum())
        done += batch

    stats = [SampleStatistic(totals[j], squares[j], samples) for j in range(s + 1)]
    experiment = ColoringExperiment(seed, samples, stats[0], stats[1:], expected_counts_exact(H))
    logger.debug(f"monte carlo means: {[float(stat.mean) for stat in stats]}")
    return experiment
