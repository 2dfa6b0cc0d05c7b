"""Mutable undirected simple graph with BFS access paths.

The graph stores sorted adjacency lists and mutates in O(deg) per edge change.
Vertex ids are dense, 0-based ints. Inserting an edge whose endpoint equals
``n`` grows the graph by one vertex; ids beyond that are rejected so corrupt
input fails loudly instead of silently allocating.

A CSR snapshot (indptr, indices) is built lazily for the compiled BFS kernels
and invalidated by any mutation. Distance arrays are int64 with
:data:`UNREACHABLE` (-1) marking vertices the source cannot reach.
"""

from __future__ import annotations

from bisect import bisect_left, insort
from collections import deque
from itertools import chain
from typing import Iterable, Iterator

import numpy as np

from . import _kernels
from .errors import (
    DuplicateEdgeError,
    MissingEdgeError,
    SelfLoopError,
    VertexIdError,
)

UNREACHABLE = -1

_MODE_CODES = {
    "top_down": _kernels.TOP_DOWN,
    "bottom_up": _kernels.BOTTOM_UP,
    "hybrid": _kernels.HYBRID,
}

__all__ = [
    "UNREACHABLE",
    "DynamicGraph",
    "choose_direction",
    "is_bridge",
    "sssp_distances",
]


class DynamicGraph:
    __slots__ = ("_adj", "_m", "_csr", "_units")

    def __init__(self, n: int = 0):
        if n < 0:
            raise VertexIdError(f"vertex count must be non-negative, got {n}")
        self._adj: list[list[int]] = [[] for _ in range(n)]
        self._m = 0
        self._csr: tuple[np.ndarray, np.ndarray] | None = None
        self._units: tuple[np.ndarray, np.ndarray] | None = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "DynamicGraph":
        g = cls(n)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    # ---- size ----

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    # ---- lookup ----

    def neighbors(self, v: int) -> list[int]:
        """Sorted neighbor list of v. Callers must not mutate it."""
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        if u == v or u >= self.n or v >= self.n or u < 0 or v < 0:
            return False
        a = self._adj[u]
        i = bisect_left(a, v)
        return i < len(a) and a[i] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        """Each edge once, as (u, v) with u < v, ascending."""
        for u, a in enumerate(self._adj):
            for v in a:
                if v > u:
                    yield (u, v)

    # ---- mutation ----

    def add_vertex(self) -> int:
        self._adj.append([])
        self._invalidate()
        return len(self._adj) - 1

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        for x in sorted((u, v)):
            if x == self.n:
                self._adj.append([])
            elif x > self.n or x < 0:
                raise VertexIdError(
                    f"vertex id {x} out of range for graph of {self.n} vertices"
                )
        a = self._adj[u]
        i = bisect_left(a, v)
        if i < len(a) and a[i] == v:
            raise DuplicateEdgeError(f"edge ({u}, {v}) already present")
        a.insert(i, v)
        insort(self._adj[v], u)
        self._m += 1
        self._invalidate()

    def remove_edge(self, u: int, v: int) -> None:
        """Removes the edge; vertices stay (the graph never shrinks)."""
        if not self.has_edge(u, v):
            raise MissingEdgeError(f"edge ({u}, {v}) not present")
        a = self._adj[u]
        del a[bisect_left(a, v)]
        b = self._adj[v]
        del b[bisect_left(b, u)]
        self._m -= 1
        self._invalidate()

    # ---- snapshots ----

    def copy(self) -> "DynamicGraph":
        g = DynamicGraph.__new__(DynamicGraph)
        g._adj = [list(a) for a in self._adj]
        g._m = self._m
        g._csr = self._csr
        g._units = self._units
        return g

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """(indptr, indices) over int64, rebuilt after any mutation."""
        if self._csr is None:
            counts = np.fromiter(
                (len(a) for a in self._adj), dtype=np.int64, count=self.n
            )
            indptr = np.zeros(self.n + 1, dtype=np.int64)
            np.cumsum(counts, out=indptr[1:])
            indices = np.fromiter(
                chain.from_iterable(self._adj), dtype=np.int64, count=2 * self._m
            )
            self._csr = (indptr, indices)
        return self._csr

    def unit_weights(self) -> tuple[np.ndarray, np.ndarray]:
        """(ones, zeros) int64 arrays sized n, shared across calls."""
        if self._units is None or self._units[0].shape[0] != self.n:
            self._units = (
                np.ones(self.n, dtype=np.int64),
                np.zeros(self.n, dtype=np.int64),
            )
        return self._units

    def _invalidate(self) -> None:
        self._csr = None

    # ---- comparison / repr ----

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DynamicGraph):
            return NotImplemented
        return self._adj == other._adj

    def __repr__(self) -> str:
        return f"DynamicGraph(n={self.n}, m={self.m})"


def sssp_distances(
    g: DynamicGraph, source: int, mode: str = "top_down", alpha: float = 1.0
) -> np.ndarray:
    """Hop distances from `source`; UNREACHABLE (-1) where no path exists.

    All three modes return identical arrays; they differ only in how each
    frontier is expanded.
    """
    if not 0 <= source < g.n:
        raise VertexIdError(f"source {source} out of range")
    indptr, indices = g.csr()
    wr, wrf = g.unit_weights()
    dist, _ = _kernels.sssp_with_far(
        indptr, indices, g.n, source, _mode_code(mode), float(alpha), wr, wrf
    )
    return dist


def choose_direction(
    frontier_edge_sum: int, unvisited_edge_sum: int, alpha: float = 1.0
) -> str:
    """Per-level direction rule: bottom-up iff the frontier's edge endpoints
    outnumber the unvisited side's divided by alpha. Ties stay top-down."""
    if frontier_edge_sum * alpha > unvisited_edge_sum:
        return "bottom_up"
    return "top_down"


def is_bridge(g: DynamicGraph, u: int, v: int) -> bool:
    """True iff removing (u, v) disconnects u from v."""
    if not g.has_edge(u, v):
        raise MissingEdgeError(f"edge ({u}, {v}) not present")
    seen = bytearray(g.n)
    seen[u] = 1
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for w in g.neighbors(x):
            if x == u and w == v:
                continue
            if w == v:
                return False
            if not seen[w]:
                seen[w] = 1
                queue.append(w)
    return True


def _mode_code(mode: str) -> int:
    try:
        return _MODE_CODES[mode]
    except KeyError:
        raise ValueError(
            f"unknown mode {mode!r}, expected one of {sorted(_MODE_CODES)}"
        ) from None
