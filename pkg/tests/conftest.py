import random

import pytest
from hypothesis import HealthCheck, settings

from dyncc.graph import DynamicGraph

# Numba-backed kernels pay a one-off JIT cost; hypothesis must not treat the
# first example as slow.
settings.register_profile(
    "dyncc",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("dyncc")


def random_graph(rng: random.Random, n: int, m: int) -> DynamicGraph:
    edges = set()
    cap = n * (n - 1) // 2
    m = min(m, cap)
    while len(edges) < m:
        a, b = rng.randrange(n), rng.randrange(n)
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return DynamicGraph.from_edges(n, sorted(edges))


@pytest.fixture
def path4() -> DynamicGraph:
    return DynamicGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def cycle4() -> DynamicGraph:
    return DynamicGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


@pytest.fixture
def triangle_pendant() -> DynamicGraph:
    # triangle 0-1-2 with pendant 3 on vertex 2; (2, 3) is the unique bridge
    return DynamicGraph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])


@pytest.fixture
def two_region_toy() -> DynamicGraph:
    # path 0-1-2-3 joined to a 5-cycle 3-4-6-7-5-3; inserting (1, 3) closes
    # a triangle 1-2-3 whose component has hanging regions on both sides
    return DynamicGraph.from_edges(
        8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 6), (6, 7), (7, 5), (5, 3)]
    )
