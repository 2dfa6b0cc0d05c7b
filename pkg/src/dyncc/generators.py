"""Seeded random graph generators used by benchmarks and tests.

All generators take an integer seed and are deterministic across runs and
platforms (random.Random, no hash-order dependence).
"""

from __future__ import annotations

import random

from .graph import DynamicGraph

__all__ = [
    "preferential_attachment",
    "random_connected_gnm",
    "random_gnm",
]


def preferential_attachment(n: int, m: int, seed: int) -> DynamicGraph:
    """Growing small-world graph: each new vertex attaches to m earlier
    vertices chosen proportionally to degree. Power-law degree tail, small
    diameter, connected for m >= 1."""
    if n <= m:
        raise ValueError(f"need n > m, got n={n} m={m}")
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = []
    # One endpoint entry per edge side; sampling it uniformly is sampling
    # vertices proportionally to degree.
    ends: list[int] = []
    for v in range(1, n):
        targets: set[int] = set()
        want = min(m, v)
        while len(targets) < want:
            if v <= m or not ends:
                targets.add(rng.randrange(v))
            else:
                targets.add(ends[rng.randrange(len(ends))])
        for t in targets:
            edges.append((t, v))
            ends.append(t)
            ends.append(v)
    return DynamicGraph.from_edges(n, edges)


def random_connected_gnm(n: int, m: int, seed: int) -> DynamicGraph:
    """Uniform random tree plus m - (n-1) extra distinct edges."""
    if m < n - 1:
        raise ValueError(f"connected graph needs m >= n-1, got n={n} m={m}")
    if m > n * (n - 1) // 2:
        raise ValueError("m exceeds the simple-graph maximum")
    rng = random.Random(seed)
    edges: set[tuple[int, int]] = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        a, b = order[rng.randrange(i)], order[i]
        edges.add((a, b) if a < b else (b, a))
    while len(edges) < m:
        a, b = rng.randrange(n), rng.randrange(n)
        if a != b:
            edges.add((a, b) if a < b else (b, a))
    return DynamicGraph.from_edges(n, sorted(edges))


def random_gnm(n: int, m: int, seed: int) -> DynamicGraph:
    """Uniform simple graph with exactly m edges; may be disconnected."""
    if m > n * (n - 1) // 2:
        raise ValueError("m exceeds the simple-graph maximum")
    rng = random.Random(seed)
    edges: set[tuple[int, int]] = set()
    while len(edges) < m:
        a, b = rng.randrange(n), rng.randrange(n)
        if a != b:
            edges.add((a, b) if a < b else (b, a))
    return DynamicGraph.from_edges(n, sorted(edges))
