"""Seeded random cghs for the verification harness.

``random_cgh`` draws one uniform number per r-set in lexicographic order and
keeps the r-sets whose number is below ``p``; the stream of instance ``i`` of
a harness run is ``default_rng([master_seed, i])``.
"""
from itertools import combinations
from math import comb
from typing import Iterator, Optional, Sequence, Union

import numpy as np

from ..core import Cgh
from ..utils import HarnessOptions

__all__ = ["random_cgh", "random_instances"]

Seed = Union[int, Sequence[int], np.random.Generator]


def _rng(seed: Seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_cgh(n: int, r: int, p: float, seed: Seed) -> Cgh:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    if seed is None:
        raise ValueError("random_cgh needs an explicit seed")
    draws = _rng(seed).random(comb(n, r))
    return Cgh.from_edges(
        n, r, (e for e, u in zip(combinations(range(n), r), draws) if u < p)
    )


def random_instances(
    n: int,
    r: int,
    p: Optional[float] = None,
    count: Optional[int] = None,
    master_seed: Optional[int] = None,
    options: Optional[HarnessOptions] = None,
) -> Iterator[Cgh]:
    """``count`` independent hosts, instance ``i`` seeded by ``(master_seed, i)``."""
    options = options or HarnessOptions()
    p = options.p if p is None else p
    count = options.count if count is None else count
    master_seed = options.master_seed if master_seed is None else master_seed
    if master_seed is None:
        raise ValueError("random_instances needs an explicit master seed")
    for index in range(count):
        yield random_cgh(n, r, p, [master_seed, index])
