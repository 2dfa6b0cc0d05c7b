import random

from dyncc.graph import DynamicGraph
from dyncc.identical import (
    build_classes,
    class_representatives,
    maintain_on_edge_change,
)
from dyncc.oracle import oracle_closeness, oracle_identical

from conftest import random_graph


def test_type_ii_twins_in_clique_with_tail():
    # 0-1-2 triangle plus tail on 2: vertices 0 and 1 share the closed
    # neighborhood {0,1,2}
    g = DynamicGraph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    classes = build_classes(g, "type_ii")
    assert classes.as_partition() == {frozenset({0, 1}), frozenset({2}), frozenset({3})}


def test_type_i_twins_in_c4(cycle4):
    # opposite corners of a 4-cycle share the open neighborhood
    classes = build_classes(cycle4, "type_i")
    assert classes.as_partition() == {frozenset({0, 2}), frozenset({1, 3})}


def test_star_leaves_are_type_i():
    g = DynamicGraph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    classes = build_classes(g, "type_i")
    assert frozenset({1, 2, 3, 4}) in classes.as_partition()


def test_isolated_vertices_share_a_class():
    g = DynamicGraph.from_edges(4, [(0, 1)])
    classes = build_classes(g, "type_i")
    assert frozenset({2, 3}) in classes.as_partition()


def test_kinds_differ():
    g = DynamicGraph.from_edges(2, [(0, 1)])
    # K2: closed neighborhoods match, open ones do not
    assert build_classes(g, "type_ii").as_partition() == {frozenset({0, 1})}
    assert build_classes(g, "type_i").as_partition() == {
        frozenset({0}),
        frozenset({1}),
    }


def test_matches_oracle_partition():
    rng = random.Random(13)
    for _ in range(100):
        n = rng.randint(1, 12)
        g = random_graph(rng, n, rng.randint(0, 2 * n))
        for kind in ("type_i", "type_ii"):
            assert (
                build_classes(g, kind).as_partition()
                == oracle_identical(g, kind).as_partition()
            )


def test_members_have_equal_farness():
    rng = random.Random(29)
    for _ in range(60):
        n = rng.randint(2, 14)
        g = random_graph(rng, n, rng.randint(0, 3 * n))
        far = oracle_closeness(g).far
        for kind in ("type_i", "type_ii"):
            for cls in build_classes(g, kind).as_partition():
                vals = {int(far[x]) for x in cls}
                assert len(vals) == 1


def test_maintenance_tracks_rebuild():
    rng = random.Random(31)
    for _ in range(80):
        n = rng.randint(2, 10)
        g = random_graph(rng, n, rng.randint(0, 2 * n))
        c1 = build_classes(g, "type_i")
        c2 = build_classes(g, "type_ii")
        for _ in range(8):
            present = list(g.edges())
            absent = [
                (a, b)
                for a in range(g.n)
                for b in range(a + 1, g.n)
                if not g.has_edge(a, b)
            ]
            if present and (not absent or rng.random() < 0.5):
                u, v = present[rng.randrange(len(present))]
                g.remove_edge(u, v)
            elif absent:
                u, v = absent[rng.randrange(len(absent))]
                g.add_edge(u, v)
            else:
                continue
            maintain_on_edge_change(c1, g, u, v)
            maintain_on_edge_change(c2, g, u, v)
            assert c1.as_partition() == build_classes(g, "type_i").as_partition()
            assert c2.as_partition() == build_classes(g, "type_ii").as_partition()


def test_maintenance_handles_vertex_growth():
    g = DynamicGraph.from_edges(2, [(0, 1)])
    c1 = build_classes(g, "type_i")
    c2 = build_classes(g, "type_ii")
    g.add_edge(1, 2)
    maintain_on_edge_change(c1, g, 1, 2)
    maintain_on_edge_change(c2, g, 1, 2)
    assert c1.as_partition() == build_classes(g, "type_i").as_partition()
    assert c2.as_partition() == build_classes(g, "type_ii").as_partition()
    # 0 and 2 are now path endpoints with the same open neighborhood {1}
    assert frozenset({0, 2}) in c1.as_partition()


def test_twins_split_when_edge_lands_on_one():
    g = DynamicGraph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    c1 = build_classes(g, "type_i")
    assert frozenset({1, 2, 3}) in c1.as_partition()
    g.add_edge(1, 2)
    maintain_on_edge_change(c1, g, 1, 2)
    assert c1.as_partition() == build_classes(g, "type_i").as_partition()
    assert frozenset({3}) in c1.as_partition()


def test_class_representatives_pick_smallest_in_scope():
    g = DynamicGraph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    classes = build_classes(g, "type_i")
    reps = class_representatives(classes, {2, 3, 4})
    leaf_cid = classes.class_of[2]
    assert reps[leaf_cid] == 2
