from math import comb

import numpy as np
import pytest

from cghkit.utils import HarnessOptions
from cghkit.verify import random_cgh, random_instances


@pytest.mark.parametrize("p, expected", [(0.0, 0), (1.0, comb(7, 3))])
def test_extreme_probabilities(p, expected):
    assert len(random_cgh(7, 3, p, seed=0)) == expected


def test_same_seed_same_host():
    assert random_cgh(9, 4, 0.4, seed=[3, 1]) == random_cgh(9, 4, 0.4, seed=[3, 1])


def test_generator_seed_is_consumed():
    rng = np.random.default_rng(5)
    first = random_cgh(8, 3, 0.5, seed=rng)
    second = random_cgh(8, 3, 0.5, seed=rng)
    assert first == random_cgh(8, 3, 0.5, seed=5)
    assert second != first or len(first) in (0, comb(8, 3))


@pytest.mark.parametrize("p", [-0.1, 1.5])
def test_bad_probability(p):
    with pytest.raises(ValueError):
        random_cgh(6, 2, p, seed=0)


def test_seed_is_required():
    with pytest.raises(ValueError):
        random_cgh(6, 2, 0.5, seed=None)
    with pytest.raises(ValueError):
        list(random_instances(6, 2, 0.5, count=2))


def test_instance_streams():
    hosts = list(random_instances(8, 3, 0.4, count=4, master_seed=9))
    assert len(hosts) == 4
    for index, H in enumerate(hosts):
        assert H == random_cgh(8, 3, 0.4, seed=[9, index])


def test_harness_defaults_fill_gaps():
    options = HarnessOptions(count=3, p=1.0, master_seed=2)
    hosts = list(random_instances(5, 2, options=options))
    assert [len(H) for H in hosts] == [10, 10, 10]
