import random

from hypothesis import given, strategies as st

import pytest

from dyncc.bcd import (
    build_representatives,
    decompose,
    maintain_on_delete,
    maintain_on_insert,
    representatives_for_scope,
)
from dyncc.errors import MissingEdgeError
from dyncc.graph import DynamicGraph, sssp_distances
from dyncc.oracle import oracle_bcd

from conftest import random_graph


def canon(pi):
    """Partition as a comparable value: component ids are not stable."""
    return sorted(tuple(sorted(es)) for es in pi.edges_of.values())


def test_path_is_all_bridges(path4):
    pi = decompose(path4)
    assert pi.component_count == 3
    assert all(len(es) == 1 for es in pi.edges_of.values())
    assert pi.articulation == {1, 2}


def test_cycle_is_one_component(cycle4):
    pi = decompose(cycle4)
    assert pi.component_count == 1
    assert pi.articulation == set()
    assert pi.vertex_sets[pi.cid_of(0, 1)] == {0, 1, 2, 3}


def test_triangle_pendant(triangle_pendant):
    pi = decompose(triangle_pendant)
    assert pi.component_count == 2
    assert pi.articulation == {2}
    tri = pi.vertex_sets[pi.cid_of(0, 1)]
    assert tri == {0, 1, 2}
    assert pi.vertex_sets[pi.cid_of(2, 3)] == {2, 3}


def test_isolated_vertices_have_no_component():
    g = DynamicGraph.from_edges(5, [(0, 1)])
    pi = decompose(g)
    assert pi.component_count == 1
    covered = set().union(*pi.vertex_sets.values())
    assert covered == {0, 1}


def test_cid_of_missing_edge(path4):
    pi = decompose(path4)
    with pytest.raises(MissingEdgeError):
        pi.cid_of(0, 2)


@given(st.integers(0, 2**31))
def test_decompose_matches_oracle(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 12)
    g = random_graph(rng, n, rng.randint(0, 2 * n))
    pi = decompose(g)
    want = oracle_bcd(g)
    assert canon(pi) == canon(want)
    assert pi.articulation == want.articulation


@given(st.integers(0, 2**31))
def test_insert_maintenance_matches_fresh_decompose(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 12)
    g = random_graph(rng, n, rng.randint(1, 2 * n))
    absent = [
        (a, b) for a in range(n) for b in range(a + 1, n) if not g.has_edge(a, b)
    ]
    if not absent:
        return
    pi = decompose(g)
    u, v = absent[rng.randrange(len(absent))]
    g.add_edge(u, v)
    pi2, cid = maintain_on_insert(g, pi, u, v)
    assert canon(pi2) == canon(decompose(g))
    assert (min(u, v), max(u, v)) in set(pi2.edges_of[cid])


def test_insert_join_branch_reuses_partition():
    # chord into an existing cycle: endpoints already share a component
    g = DynamicGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    pi = decompose(g)
    g.add_edge(0, 2)
    pi2, cid = maintain_on_insert(g, pi, 0, 2)
    assert pi2 is pi
    assert len(pi2.edges_of[cid]) == 5


def test_insert_rebuild_branch():
    # joining two bridges creates a new cycle: no common component
    g = DynamicGraph.from_edges(3, [(0, 1), (1, 2)])
    pi = decompose(g)
    g.add_edge(0, 2)
    pi2, cid = maintain_on_insert(g, pi, 0, 2)
    assert pi2 is not pi
    assert pi2.component_count == 1
    assert len(pi2.edges_of[cid]) == 3


@given(st.integers(0, 2**31))
def test_delete_maintenance_matches_fresh_decompose(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 12)
    g = random_graph(rng, n, rng.randint(1, 2 * n))
    if g.m == 0:
        return
    pi = decompose(g)
    edges = list(g.edges())
    u, v = edges[rng.randrange(len(edges))]
    cid_before = pi.cid_of(u, v)
    g.remove_edge(u, v)
    pi2, cid = maintain_on_delete(g, pi, u, v)
    assert cid == cid_before
    assert canon(pi2) == canon(decompose(g))


# -- representatives --


def test_two_region_toy_numbers(two_region_toy):
    g = two_region_toy
    pi = decompose(g)
    g.add_edge(1, 3)
    pi2, cid = maintain_on_insert(g, pi, 1, 3)
    assert pi2.component_count == 3
    assert pi2.articulation == {1, 3}
    assert pi2.vertex_sets[cid] == {1, 2, 3}

    rep = build_representatives(g, pi2, cid)
    assert {a: rep.r[a] for a in sorted(rep.r)} == {1: 2, 2: 1, 3: 5}
    assert {a: rep.rf[a] for a in sorted(rep.rf)} == {1: 1, 2: 0, 3: 6}
    assert sorted(rep.regions[1]) == [0]
    assert sorted(rep.regions[3]) == [4, 5, 6, 7]
    assert rep.rep[0] == 1
    assert all(rep.rep[x] == 3 for x in (4, 5, 6, 7))
    assert rep.dist_to_rep[0] == 1
    assert rep.dist_to_rep[6] == 2


def test_triangle_pendant_representatives(triangle_pendant):
    pi = decompose(triangle_pendant)
    cid = pi.cid_of(0, 1)
    rep = build_representatives(triangle_pendant, pi, cid)
    assert rep.r == {0: 1, 1: 1, 2: 2}
    assert rep.rf == {0: 0, 1: 0, 2: 1}
    assert rep.rep[3] == 2 and rep.dist_to_rep[3] == 1


def test_representative_counts_partition_all_vertices():
    # sum of represented counts over the scope equals n minus the vertices
    # that reach the scope not at all
    rng = random.Random(9)
    for _ in range(50):
        n = rng.randint(2, 14)
        g = random_graph(rng, n, rng.randint(1, 2 * n))
        if g.m == 0:
            continue
        pi = decompose(g)
        edges = list(g.edges())
        u, v = edges[rng.randrange(len(edges))]
        cid = pi.cid_of(u, v)
        rep = build_representatives(g, pi, cid)
        scope = pi.vertex_sets[cid]
        represented = sum(rep.r[a] - 1 for a in scope)
        unrepresented = sum(1 for x in range(n) if rep.rep[x] < 0 and x not in scope)
        assert represented + len(scope) + unrepresented == n


def test_representative_uniqueness_and_distance_split():
    # every outside vertex reaches the scope through exactly one entry
    # vertex, and distances decompose as d(x, s) = d(x, rep[x]) + d(rep[x], s)
    rng = random.Random(21)
    for _ in range(40):
        n = rng.randint(3, 14)
        g = random_graph(rng, n, rng.randint(2, 2 * n))
        if g.m == 0:
            continue
        pi = decompose(g)
        edges = list(g.edges())
        u, v = edges[rng.randrange(len(edges))]
        cid = pi.cid_of(u, v)
        rep = build_representatives(g, pi, cid)
        scope = pi.vertex_sets[cid]
        dist_from = {s: sssp_distances(g, s) for s in scope}
        for a, region in rep.regions.items():
            for x in region:
                assert rep.rep[x] == a
                for s in scope:
                    dxs = dist_from[s][x]
                    dar = dist_from[a][x]
                    assert dxs == rep.dist_to_rep[x] + dist_from[s][a]
                    assert dar == rep.dist_to_rep[x]


def test_representatives_for_scope_without_candidates(triangle_pendant):
    pi = decompose(triangle_pendant)
    cid = pi.cid_of(0, 1)
    scope = pi.vertex_sets[cid]
    rep = representatives_for_scope(
        triangle_pendant, scope, set(pi.edges_of[cid])
    )
    assert rep.r == {0: 1, 1: 1, 2: 2}
