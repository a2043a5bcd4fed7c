import pytest
from hypothesis import HealthCheck, settings

from cghkit.core import Cgh

settings.register_profile(
    "cghkit",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("cghkit")


@pytest.fixture
def z_graph():
    """A single clockwise 3-zigzag 0-3-1-2 on four vertices."""
    return Cgh.from_edges(4, 2, [(0, 3), (1, 3), (1, 2)])


@pytest.fixture
def explicit_stack_edges():
    return [(0, 5, 6, 11), (1, 4, 7, 10), (2, 3, 8, 9)]
