"""Named detectors; each returns a JSON-ready witness or ``None``."""
from typing import Optional

from ..core import Cgh
from .good_path import Coloring, find_good_path, restrict_color_regular
from .paths import find_tight_path
from .registry import register_detector
from .stack import find_disjoint_segments, find_stack
from .zigzag import find_zigzag


@register_detector("tight-path")
def detect_tight_path(H: Cgh, k: int, **options) -> Optional[dict]:
    seq = find_tight_path(H, k)
    return None if seq is None else {"seq": list(seq)}


@register_detector("zigzag", tags=("even-r",))
def detect_zigzag(H: Cgh, k: int, reflection_closed: bool = False, **options):
    witness = find_zigzag(H, k, reflection_closed=reflection_closed)
    return None if witness is None else witness.to_json()


@register_detector("stack", tags=("even-r",))
def detect_stack(H: Cgh, k: int, mode="exhaustive", budget=None, seed=None, **options):
    witness = find_stack(H, k, mode=mode, budget=budget, seed=seed)
    if witness is None:
        return None
    record = witness.to_json()
    r = H.r
    record["edges"] = [sorted(witness.seq[i * r : (i + 1) * r]) for i in range(k)]
    return record


@register_detector("matching", tags=("graph",))
def detect_matching(H: Cgh, k: int, **options):
    edges = find_disjoint_segments(H, k)
    return None if edges is None else {"edges": [list(e) for e in edges]}


@register_detector("good-path", tags=("even-r",))
def detect_good_path(H: Cgh, k: int, coloring: Optional[Coloring] = None, **options):
    """Good k-path in the color-regular part of ``H``; needs ``coloring``."""
    if coloring is None:
        raise ValueError("the good-path detector needs a coloring")
    seq = find_good_path(restrict_color_regular(H, coloring), coloring, k)
    if seq is None:
        return None
    return {"seq": list(seq), "coloring": coloring.to_json()}
