"""Odd-uniformity lift: join every edge with each of ``x_count`` new vertices."""
from ..core import Cgh, CyclicGround, shadow
from ..errors import ConstructionParameterError, UniformityError
from .generators import ConstructionReport
from .registry import register_construction

__all__ = ["lift_odd", "lift_odd_report"]


def lift_odd(H: Cgh, x_count: int) -> Cgh:
    """``H+ = {{x} ∪ e : x in X, e in H}`` on ``n + x_count`` vertices.

    The new vertices ``n, ..., n + x_count - 1`` follow the old ones in the
    cyclic order.
    """
    if H.r % 2 == 0:
        raise UniformityError(f"the lift takes an odd-uniform host, got r={H.r}")
    if x_count < 1:
        raise ConstructionParameterError(f"x_count must be >= 1, got {x_count}")
    extra = range(H.n, H.n + x_count)
    return Cgh(
        CyclicGround(H.n + x_count),
        H.r + 1,
        frozenset(e + (x,) for x in extra for e in H.edges),
    )


@register_construction("lift-odd")
def lift_odd_report(H: Cgh, x_count: int) -> ConstructionReport:
    lifted = lift_odd(H, x_count)
    details = {"x_count": x_count, "host_edges": len(H)}
    if H.r >= 2:
        details["host_shadow"] = len(shadow(H))
        details["lifted_shadow"] = len(shadow(lifted))
    return ConstructionReport(lifted, len(lifted), None, "none", details)
