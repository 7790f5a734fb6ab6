import random

import pytest

from fmzv.mitm import ZmodN


@pytest.fixture
def rng():
    return random.Random(0xF32A)


def random_relation_instance(rng, max_n=10**6, max_d=6, max_b=5):
    """A random bounded-relation instance over Z/NZ."""
    n = rng.randrange(2, max_n + 1)
    d = rng.randrange(1, max_d + 1)
    b = rng.randrange(0, max_b + 1)
    group = ZmodN(n)
    elements = [rng.randrange(n) for _ in range(d)]
    return group, elements, b
