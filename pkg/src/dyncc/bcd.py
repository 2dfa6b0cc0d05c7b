"""Biconnected component decomposition and the update-scope machinery.

The decomposition is a partition of the edge set: two edges share a component
exactly when they lie on a common simple cycle, bridges sit in singleton
components, and isolated vertices belong to no component. A vertex is an
articulation vertex iff its incident edges span more than one component.

When a single edge changes, only the component containing it can alter any
shortest path, so that component's vertex set is the update scope. Vertices
outside the scope are folded into it through representatives: each one maps
to the unique scope vertex through which all of its routes into the scope
pass (entry is unique, else the component would extend further), with R
counting how many vertices a scope vertex stands for and RF their summed
distances to it.

Component ids are not stable across versions of the partition; callers
compare by edge membership, never by raw id.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .errors import MissingEdgeError
from .graph import DynamicGraph

__all__ = [
    "BcdPartition",
    "RepInfo",
    "decompose",
    "maintain_on_insert",
    "maintain_on_delete",
    "build_representatives",
]

Edge = tuple[int, int]


def _canon(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass
class BcdPartition:
    component_of: dict[Edge, int]
    edges_of: dict[int, list[Edge]]
    vertex_sets: dict[int, set[int]]
    articulation: set[int]

    @property
    def component_count(self) -> int:
        return len(self.edges_of)

    @classmethod
    def from_edge_components(
        cls,
        component_of: dict[Edge, int],
        edges_of: dict[int, list[Edge]],
        articulation: set[int] | None = None,
    ) -> "BcdPartition":
        vertex_sets: dict[int, set[int]] = {}
        for cid, edges in edges_of.items():
            vs = vertex_sets.setdefault(cid, set())
            for a, b in edges:
                vs.add(a)
                vs.add(b)
        if articulation is None:
            counts: dict[int, int] = {}
            for vs in vertex_sets.values():
                for x in vs:
                    counts[x] = counts.get(x, 0) + 1
            articulation = {x for x, c in counts.items() if c > 1}
        return cls(component_of, edges_of, vertex_sets, articulation)

    def cid_of(self, u: int, v: int) -> int:
        try:
            return self.component_of[_canon(u, v)]
        except KeyError:
            raise MissingEdgeError(f"edge ({u}, {v}) not in partition") from None


def decompose(g: DynamicGraph) -> BcdPartition:
    """Hopcroft-Tarjan DFS with an explicit edge stack, iterative."""
    n = g.n
    discovery = [-1] * n
    low = [0] * n
    component_of: dict[Edge, int] = {}
    edges_of: dict[int, list[Edge]] = {}
    next_cid = 0

    def emit(chunk: list[Edge]) -> None:
        nonlocal next_cid
        cid = next_cid
        next_cid += 1
        out = [_canon(a, b) for a, b in chunk]
        edges_of[cid] = out
        for e in out:
            component_of[e] = cid

    for start in range(n):
        if discovery[start] >= 0 or g.degree(start) == 0:
            continue
        discovery[start] = 0
        low[start] = 0
        count = 1
        edge_stack: list[Edge] = []
        edge_index: dict[Edge, int] = {}
        stack = [(start, start, iter(g.neighbors(start)))]
        while stack:
            grandparent, parent, children = stack[-1]
            child = next(children, None)
            if child is not None:
                if child == grandparent:
                    continue
                if discovery[child] >= 0:
                    if discovery[child] <= discovery[parent]:
                        low[parent] = min(low[parent], discovery[child])
                        edge_index[(parent, child)] = len(edge_stack)
                        edge_stack.append((parent, child))
                else:
                    discovery[child] = count
                    low[child] = count
                    count += 1
                    stack.append((parent, child, iter(g.neighbors(child))))
                    edge_index[(parent, child)] = len(edge_stack)
                    edge_stack.append((parent, child))
            else:
                stack.pop()
                if len(stack) > 1:
                    if low[parent] >= discovery[grandparent]:
                        ind = edge_index[(grandparent, parent)]
                        emit(edge_stack[ind:])
                        del edge_stack[ind:]
                    low[grandparent] = min(low[grandparent], low[parent])
                elif stack:
                    ind = edge_index[(grandparent, parent)]
                    emit(edge_stack[ind:])
                    del edge_stack[ind:]
    return BcdPartition.from_edge_components(component_of, edges_of)


def maintain_on_insert(
    g: DynamicGraph, pi: BcdPartition, u: int, v: int
) -> tuple[BcdPartition, int]:
    """Fold the freshly inserted edge (u, v) into the partition.

    `g` already contains the edge; `pi` describes g without it and is
    consumed (mutated in the cheap branch). If u's and v's incident
    components intersect, the new edge joins that unique common component in
    O(deg). Any other insertion can cascade merges, so the partition is
    rebuilt from scratch.
    """
    cset_u = {
        pi.component_of[_canon(u, w)] for w in g.neighbors(u) if w != v
    }
    cset_v = {
        pi.component_of[_canon(v, w)] for w in g.neighbors(v) if w != u
    }
    common = cset_u & cset_v
    if common:
        cid = common.pop()
        e = _canon(u, v)
        pi.component_of[e] = cid
        pi.edges_of[cid].append(e)
        return pi, cid
    pi2 = decompose(g)
    return pi2, pi2.cid_of(u, v)


def maintain_on_delete(
    g: DynamicGraph, pi: BcdPartition, u: int, v: int
) -> tuple[BcdPartition, int]:
    """Fresh decomposition after deleting (u, v), plus the id the edge had
    in `pi` (the caller's update scope). Deletions can split a component
    into arbitrarily many pieces, so no incremental path is attempted."""
    cid_before = pi.cid_of(u, v)
    return decompose(g), cid_before


@dataclass
class RepInfo:
    """Scope-entry representatives for one component's update.

    rep[x] is x for scope members, the unique scope vertex all of x's routes
    into the scope pass through, or -1 when x cannot reach the scope at all.
    dist_to_rep[x] is d(x, rep[x]) (-1 alongside rep -1). r/rf hold, per
    scope vertex, the represented vertex count (itself included) and the
    summed distance to the represented vertices. regions lists, for each
    scope vertex standing for outsiders, those outside vertices.
    """

    rep: np.ndarray
    dist_to_rep: np.ndarray
    r: dict[int, int]
    rf: dict[int, int]
    regions: dict[int, list[int]] = field(default_factory=dict)


def build_representatives(g: DynamicGraph, pi: BcdPartition, cid: int) -> RepInfo:
    scope = pi.vertex_sets[cid]
    scope_edges = set(pi.edges_of[cid])
    return representatives_for_scope(g, scope, scope_edges, pi.articulation & scope)


def representatives_for_scope(
    g: DynamicGraph,
    scope: set[int],
    scope_edges: set[Edge],
    candidates: set[int] | None = None,
) -> RepInfo:
    """Representatives for an explicit (vertex set, edge set) scope.

    Runs one BFS per scope vertex that has edges leaving the scope's edge
    set, walking only non-scope edges. Only the root's adjacency can mix
    scope and non-scope edges, and the reached sets are disjoint across
    roots, so the whole pass costs one traversal of the part of the graph
    that hangs off the scope. `candidates`, when given, restricts the roots
    tried (pass the articulation vertices to skip the interior ones).
    """
    n = g.n
    rep = np.full(n, -1, dtype=np.int64)
    dist_to_rep = np.full(n, -1, dtype=np.int64)
    r = {x: 1 for x in scope}
    rf = {x: 0 for x in scope}
    regions: dict[int, list[int]] = {}
    for x in scope:
        rep[x] = x
        dist_to_rep[x] = 0

    roots = scope if candidates is None else candidates
    dist: dict[int, int] = {}
    for a in sorted(roots):
        out_neighbors = [
            w for w in g.neighbors(a) if _canon(a, w) not in scope_edges
        ]
        if not out_neighbors:
            continue
        region: list[int] = []
        dist.clear()
        dist[a] = 0
        queue = deque()
        for w in out_neighbors:
            if w not in dist:
                dist[w] = 1
                queue.append(w)
        while queue:
            x = queue.popleft()
            dx = dist[x]
            rep[x] = a
            dist_to_rep[x] = dx
            region.append(x)
            r[a] += 1
            rf[a] += dx
            nd = dx + 1
            for w in g.neighbors(x):
                if w not in dist:
                    dist[w] = nd
                    queue.append(w)
        regions[a] = region
    return RepInfo(rep, dist_to_rep, r, rf, regions)
