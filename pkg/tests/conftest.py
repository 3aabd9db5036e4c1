import random

import pytest

from minhit.rows import Hypergraph


@pytest.fixture
def h2() -> Hypergraph:
    # the six-vertex, five-edge workhorse instance used across the suite
    return Hypergraph.from_sets(6, [{1, 2, 5}, {3, 4}, {4, 5, 6}, {1, 3, 5}, {2, 6}])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
