"""The oracles themselves are checked against direct pure-python
definitions, so engine-vs-oracle tests do not rest on a single code path."""

import random
from collections import deque

import numpy as np

from dyncc.graph import DynamicGraph
from dyncc.oracle import oracle_bcd, oracle_closeness, oracle_identical

from conftest import random_graph


def bfs_far(g: DynamicGraph, s: int) -> int:
    dist = {s: 0}
    q = deque([s])
    while q:
        x = q.popleft()
        for y in g.neighbors(x):
            if y not in dist:
                dist[y] = dist[x] + 1
                q.append(y)
    return sum(dist.values())


def test_closeness_oracle_matches_plain_bfs():
    rng = random.Random(17)
    for _ in range(60):
        n = rng.randint(1, 18)
        g = random_graph(rng, n, rng.randint(0, 2 * n))
        state = oracle_closeness(g)
        for s in range(n):
            far = bfs_far(g, s)
            assert state.far[s] == far
            if far:
                assert state.cc[s] == 1.0 / far
            else:
                assert state.cc[s] == 0.0


def test_closeness_oracle_handles_empty_graph():
    g = DynamicGraph.from_edges(0, [])
    assert oracle_closeness(g).far.shape == (0,)


def test_bcd_oracle_knowns():
    p4 = DynamicGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    pi = oracle_bcd(p4)
    assert sorted(tuple(sorted(es)) for es in pi.edges_of.values()) == [
        ((0, 1),),
        ((1, 2),),
        ((2, 3),),
    ]
    assert pi.articulation == {1, 2}

    c4 = DynamicGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    pi = oracle_bcd(c4)
    assert pi.component_count == 1
    assert pi.articulation == set()

    # two triangles sharing vertex 2
    bowtie = DynamicGraph.from_edges(
        5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]
    )
    pi = oracle_bcd(bowtie)
    assert pi.component_count == 2
    assert pi.articulation == {2}


def test_bcd_oracle_edges_cover_edge_set():
    rng = random.Random(23)
    for _ in range(40):
        n = rng.randint(1, 12)
        g = random_graph(rng, n, rng.randint(0, 2 * n))
        pi = oracle_bcd(g)
        covered = sorted(e for es in pi.edges_of.values() for e in es)
        assert covered == sorted(g.edges())


def test_identical_oracle_pairwise_definition():
    rng = random.Random(41)
    for _ in range(40):
        n = rng.randint(1, 10)
        g = random_graph(rng, n, rng.randint(0, 2 * n))
        for kind in ("type_i", "type_ii"):
            part = oracle_identical(g, kind).as_partition()
            label = {}
            for cls in part:
                for x in cls:
                    label[x] = cls
            for a in range(n):
                for b in range(a + 1, n):
                    na = set(g.neighbors(a))
                    nb = set(g.neighbors(b))
                    if kind == "type_i":
                        same = na == nb
                    else:
                        same = na | {a} == nb | {b}
                    assert (label[a] is label[b]) == same, (kind, a, b)
