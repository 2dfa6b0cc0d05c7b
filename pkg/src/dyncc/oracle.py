"""Slow but independent reference implementations used to verify the fast
paths. Nothing here shares code with the incremental engine or the compiled
kernels beyond the graph type itself.

- closeness: all-pairs BFS through scipy's csgraph (an implementation written
  by other people entirely), rows summed over finite entries.
- biconnected components: definitional. Articulation vertices by the
  remove-and-count test; two edges share a component iff they lie on a common
  simple cycle, computed as a union over incident edge pairs (edges ab, cb
  share a cycle iff a reaches c in G - b) and closed transitively.
- identical vertices: O(n^2) pairwise neighborhood comparison.
"""

from __future__ import annotations

from collections import deque

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .bcd import BcdPartition
from .closeness import CentralityState
from .graph import DynamicGraph
from .identical import IdenticalClasses

__all__ = ["oracle_closeness", "oracle_bcd", "oracle_identical"]


def oracle_closeness(g: DynamicGraph) -> CentralityState:
    n = g.n
    if n == 0:
        return CentralityState(np.zeros(0, dtype=np.int64))
    indptr, indices = g.csr()
    mat = csr_matrix(
        (np.ones(indices.shape[0], dtype=np.int8), indices, indptr), shape=(n, n)
    )
    dist = shortest_path(mat, method="D", directed=False, unweighted=True)
    far = np.where(np.isfinite(dist), dist, 0.0).sum(axis=1)
    return CentralityState(far.astype(np.int64))


def _components_without(g: DynamicGraph, banned: int) -> list[int]:
    """Component label per vertex in G - banned (banned labelled -1)."""
    label = [-1] * g.n
    cur = 0
    for s in range(g.n):
        if s == banned or label[s] >= 0:
            continue
        label[s] = cur
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for w in g.neighbors(x):
                if w != banned and label[w] < 0:
                    label[w] = cur
                    queue.append(w)
        cur += 1
    return label


def oracle_bcd(g: DynamicGraph) -> BcdPartition:
    n = g.n
    # Articulation by definition: removing the vertex leaves strictly more
    # components among the survivors. Degree < 2 can never separate anything.
    base_count = len(set(_components_without(g, -1)))
    articulation = set()
    for v in range(n):
        if g.degree(v) < 2:
            continue
        parts = _components_without(g, v)
        alive = {c for x, c in enumerate(parts) if x != v}
        if len(alive) > base_count:
            articulation.add(v)

    edges = list(g.edges())
    parent = list(range(len(edges)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i: int, j: int) -> None:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj

    index = {e: i for i, e in enumerate(edges)}
    for b in range(n):
        nbrs = g.neighbors(b)
        if len(nbrs) < 2:
            continue
        label = _components_without(g, b)
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                a, c = nbrs[i], nbrs[j]
                if label[a] == label[c]:
                    ea = index[(min(a, b), max(a, b))]
                    ec = index[(min(c, b), max(c, b))]
                    union(ea, ec)

    roots: dict[int, int] = {}
    component_of: dict[tuple[int, int], int] = {}
    edges_of: dict[int, list[tuple[int, int]]] = {}
    for i, e in enumerate(edges):
        r = find(i)
        cid = roots.setdefault(r, len(roots))
        component_of[e] = cid
        edges_of.setdefault(cid, []).append(e)
    return BcdPartition.from_edge_components(component_of, edges_of, articulation)


def oracle_identical(g: DynamicGraph, kind: str) -> IdenticalClasses:
    if kind not in ("type_i", "type_ii"):
        raise ValueError(f"kind must be 'type_i' or 'type_ii', got {kind!r}")
    n = g.n
    sigs = []
    for v in range(n):
        nb = g.neighbors(v)
        sigs.append(tuple(sorted(nb + [v])) if kind == "type_ii" else tuple(nb))
    classes = IdenticalClasses.empty(kind, n)
    seen: dict[tuple[int, ...], int] = {}
    for v in range(n):
        cid = seen.get(sigs[v])
        if cid is None:
            cid = classes.new_class(v)
            seen[sigs[v]] = cid
        else:
            classes.attach(v, cid)
    return classes
