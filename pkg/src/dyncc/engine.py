"""Incremental closeness maintenance under single-edge changes.

Each update runs in phases, every one of them optional via EngineConfig:

1. Scope (use_bcd): only the biconnected component containing the changed
   edge can see any shortest path change, so the update works on that
   component's vertices; everything hanging off it is folded into per-entry
   representatives (R, RF) and patched afterwards from its representative's
   delta. Without BCD the scope is every vertex with unit weights.
2. Level filter (use_levels): a scope vertex keeps its value exactly when
   its BFS levels for the two endpoints differ by at most one, measured
   with the changed edge absent (pre-insertion / post-deletion form).
3. Identical vertices (use_identical): surviving sources that share a
   type-II or type-I class need one SSSP per class; the others copy.
4. SSSPs (use_hybrid picks the direction-switching kernel) over the scope
   subgraph, accumulating d * R + RF so represented vertices are priced in.
5. Fix: an outside vertex's farness moves exactly as its representative's
   did; when the changed edge is a bridge (the only case reachability
   changes) the newly gained or lost side is corrected through the stored
   distance-to-representative.

far values stay exactly equal to a from-scratch recomputation after every
event, for every configuration; the flags only change how much work is done.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .bcd import (
    BcdPartition,
    RepInfo,
    decompose,
    maintain_on_insert,
    maintain_on_delete,
    representatives_for_scope,
)
from .closeness import CentralityState, closeness_all
from .errors import (
    EventError,
    GraphError,
    MissingEdgeError,
    SelfLoopError,
    VertexIdError,
)
from .graph import DynamicGraph, _mode_code
from .identical import IdenticalClasses, build_classes, maintain_on_edge_change

__all__ = [
    "EngineConfig",
    "EngineState",
    "UpdateReport",
    "insert_and_update",
    "delete_and_update",
    "process_stream",
]

Edge = tuple[int, int]

_PRESETS = {
    "cc": dict(use_bcd=False, use_levels=False, use_identical=False, use_hybrid=False),
    "b": dict(use_bcd=True, use_levels=False, use_identical=False, use_hybrid=False),
    "bl": dict(use_bcd=True, use_levels=True, use_identical=False, use_hybrid=False),
    "bli": dict(use_bcd=True, use_levels=True, use_identical=True, use_hybrid=False),
    "blih": dict(use_bcd=True, use_levels=True, use_identical=True, use_hybrid=True),
}


@dataclass(frozen=True)
class EngineConfig:
    use_bcd: bool = True
    use_levels: bool = True
    use_identical: bool = True
    use_hybrid: bool = True
    alpha: float = 1.0
    threads: int = 1

    @classmethod
    def from_name(cls, name: str, alpha: float = 1.0, threads: int = 1) -> "EngineConfig":
        key = name.lower().removeprefix("cc-").replace("-", "")
        if key not in _PRESETS:
            raise ValueError(
                f"unknown configuration {name!r}, expected one of "
                f"{', '.join(sorted(_PRESETS))}"
            )
        return cls(alpha=alpha, threads=threads, **_PRESETS[key])

    @property
    def name(self) -> str:
        if not (self.use_bcd or self.use_levels or self.use_identical or self.use_hybrid):
            return "CC"
        return "CC-" + "".join(
            c
            for c, on in (
                ("B", self.use_bcd),
                ("L", self.use_levels),
                ("I", self.use_identical),
                ("H", self.use_hybrid),
            )
            if on
        )

    @property
    def mode(self) -> str:
        return "hybrid" if self.use_hybrid else "top_down"


@dataclass
class UpdateReport:
    sources_total: int = 0
    sources_skipped_level: int = 0
    sources_skipped_identical: int = 0
    sssp_count: int = 0
    fix_count: int = 0
    filter_time: float = 0.0
    update_time: float = 0.0
    bcd_rebuilt: bool = False


@dataclass
class EngineState:
    graph: DynamicGraph
    centrality: CentralityState
    partition: BcdPartition | None = None
    type1: IdenticalClasses | None = None
    type2: IdenticalClasses | None = None

    @classmethod
    def initialize(cls, g: DynamicGraph, cfg: EngineConfig | None = None) -> "EngineState":
        cfg = cfg or EngineConfig()
        state = cls(g, closeness_all(g, cfg.mode, cfg.alpha, cfg.threads))
        if cfg.use_bcd:
            state.partition = decompose(g)
        if cfg.use_identical:
            state.type1 = build_classes(g, "type_i")
            state.type2 = build_classes(g, "type_ii")
        return state

    @property
    def farness(self) -> np.ndarray:
        return self.centrality.far

    def _grow_far(self) -> None:
        n, have = self.graph.n, self.centrality.far.shape[0]
        if n > have:
            self.centrality.far = np.concatenate(
                [self.centrality.far, np.zeros(n - have, dtype=np.int64)]
            )


def insert_and_update(
    state: EngineState, u: int, v: int, cfg: EngineConfig | None = None
) -> UpdateReport:
    """Insert edge (u, v) and restore exact far values. An endpoint equal to
    g.n grows the graph by one vertex first."""
    return _apply(state, "insert", u, v, cfg or EngineConfig())


def delete_and_update(
    state: EngineState, u: int, v: int, cfg: EngineConfig | None = None
) -> UpdateReport:
    """Delete edge (u, v) and restore exact far values."""
    return _apply(state, "delete", u, v, cfg or EngineConfig())


def process_stream(
    state: EngineState, events: Iterable, cfg: EngineConfig | None = None
) -> list[UpdateReport]:
    """Apply EdgeEvents in order. A failing event raises EventError carrying
    its zero-based index; the state reflects all events before it."""
    cfg = cfg or EngineConfig()
    reports = []
    for i, ev in enumerate(events):
        try:
            reports.append(_apply(state, ev.op, ev.u, ev.v, cfg))
        except GraphError as exc:
            raise EventError(i, exc) from exc
    return reports


# ---- internals ----


def _apply(state: EngineState, op: str, u: int, v: int, cfg: EngineConfig) -> UpdateReport:
    if op not in ("insert", "delete"):
        raise ValueError(f"unknown op {op!r}")
    # Validate before any phase mutates state, so a failing event is a no-op.
    if u == v:
        raise SelfLoopError(f"self loop ({u}, {v})")
    if u < 0 or v < 0:
        raise VertexIdError(f"negative vertex id in ({u}, {v})")
    if cfg.use_bcd:
        report = _apply_scoped(state, op, u, v, cfg)
    else:
        report = _apply_global(state, op, u, v, cfg)
    return report


def _ensure_classes(state: EngineState) -> None:
    if state.type1 is None:
        state.type1 = build_classes(state.graph, "type_i")
        state.type2 = build_classes(state.graph, "type_ii")


def _maintain_classes(state: EngineState, u: int, v: int) -> None:
    """Bring identical-vertex classes in line with the post-change graph."""
    if state.type1 is None:
        _ensure_classes(state)
    else:
        maintain_on_edge_change(state.type1, state.graph, u, v)
        maintain_on_edge_change(state.type2, state.graph, u, v)


def _apply_scoped(state: EngineState, op: str, u: int, v: int, cfg: EngineConfig) -> UpdateReport:
    g = state.graph
    t0 = time.perf_counter()
    report = UpdateReport()

    if state.partition is None:
        state.partition = decompose(g)

    if op == "insert":
        g.add_edge(u, v)
        state._grow_far()
        pi, cid = maintain_on_insert(g, state.partition, u, v)
        report.bcd_rebuilt = pi is not state.partition
        state.partition = pi
        scope_edges = pi.edges_of[cid]
        scope = pi.vertex_sets[cid]
        rep = representatives_for_scope(
            g, scope, set(scope_edges), pi.articulation & scope
        )
        changed = _canon(u, v)
        filter_edges = [e for e in scope_edges if e != changed]
        update_edges = scope_edges
        bridge_like = len(scope_edges) == 1
        reach_sign = 1
    else:
        if not g.has_edge(u, v):
            raise MissingEdgeError(f"edge ({u}, {v}) not present")
        pi_old = state.partition
        cid_old = pi_old.cid_of(u, v)
        scope = pi_old.vertex_sets[cid_old]
        old_edges = pi_old.edges_of[cid_old]
        roots = pi_old.articulation & scope
        g.remove_edge(u, v)
        state.partition, _ = maintain_on_delete(g, pi_old, u, v)
        report.bcd_rebuilt = True
        changed = _canon(u, v)
        filter_edges = [e for e in old_edges if e != changed]
        update_edges = filter_edges
        rep = representatives_for_scope(g, scope, set(filter_edges), roots)
        bridge_like = len(old_edges) == 1
        reach_sign = -1

    if cfg.use_identical:
        _maintain_classes(state, u, v)

    # Component-local CSR views: the filter always measures with the changed
    # edge absent, the update phase with the post-change edge set.
    vs = np.fromiter(sorted(scope), dtype=np.int64, count=len(scope))
    k = vs.shape[0]
    f_indptr, f_indices = _local_csr(vs, filter_edges, k)
    lu = int(np.searchsorted(vs, u))
    lv = int(np.searchsorted(vs, v))
    wr = np.ones(k, dtype=np.int64)
    wrf = np.zeros(k, dtype=np.int64)
    for a in rep.regions:
        la = int(np.searchsorted(vs, a))
        wr[la] = rep.r[a]
        wrf[la] = rep.rf[a]

    du, _ = _kernels.sssp_with_far(
        f_indptr, f_indices, k, lu, _kernels.TOP_DOWN, 1.0, wr, wrf
    )
    dv, _ = _kernels.sssp_with_far(
        f_indptr, f_indices, k, lv, _kernels.TOP_DOWN, 1.0, wr, wrf
    )
    if cfg.use_levels:
        survive = _update_mask(du, dv)
    else:
        survive = np.ones(k, dtype=bool)
    report.sources_total = k
    report.sources_skipped_level = k - int(survive.sum())
    report.filter_time = time.perf_counter() - t0

    t1 = time.perf_counter()
    far = state.centrality.far
    survivors = vs[survive]
    before = {a: int(far[a]) for a in rep.regions}

    if survivors.shape[0]:
        run, copies = _dedup_sources(state, survivors, cfg)
        report.sssp_count = len(run)
        report.sources_skipped_identical = sum(len(c) for c in copies.values())
        if op == "insert":
            u_indptr, u_indices = _local_csr(vs, update_edges, k)
        else:
            u_indptr, u_indices = f_indptr, f_indices
        run_arr = np.asarray(run, dtype=np.int64)
        local_run = np.searchsorted(vs, run_arr)
        out = _sweep(
            u_indptr, u_indices, k, local_run, cfg.mode, cfg.alpha, wr, wrf, cfg.threads
        )
        far[run_arr] = out
        for s, twins in copies.items():
            far[twins] = far[s]

    # Outside vertices move exactly as their representative did; a bridge
    # insert/delete additionally gains/loses the far side at the stored
    # distance to the representative.
    for a, region in rep.regions.items():
        delta = int(far[a]) - before[a]
        reach = 0
        if bridge_like:
            other = v if a == u else u
            reach = reach_sign * rep.r[other]
        if delta == 0 and reach == 0:
            continue
        members = np.asarray(region, dtype=np.int64)
        far[members] += delta
        if reach:
            far[members] += rep.dist_to_rep[members] * reach
        report.fix_count += members.shape[0]
    report.update_time = time.perf_counter() - t1
    return report


def _apply_global(state: EngineState, op: str, u: int, v: int, cfg: EngineConfig) -> UpdateReport:
    """Unscoped variants: plain recompute-everything (CC) and the level
    filter over the whole vertex set."""
    g = state.graph
    t0 = time.perf_counter()
    report = UpdateReport()

    du = dv = None
    if op == "insert":
        if cfg.use_levels:
            # Pre-insertion distances; grow first so new ids are valid sources.
            for x in sorted((u, v)):
                if x == g.n:
                    g.add_vertex()
                elif x > g.n:
                    raise VertexIdError(f"vertex {x} past the next free id {g.n}")
            state._grow_far()
            du = _full_dist(g, u)
            dv = _full_dist(g, v)
        g.add_edge(u, v)
        state._grow_far()
    else:
        g.remove_edge(u, v)
        if cfg.use_levels:
            du = _full_dist(g, u)
            dv = _full_dist(g, v)

    if cfg.use_identical:
        _maintain_classes(state, u, v)

    n = g.n
    report.sources_total = n
    if cfg.use_levels:
        survive = _update_mask(du, dv)
        survivors = np.flatnonzero(survive).astype(np.int64)
    else:
        survivors = np.arange(n, dtype=np.int64)
    report.sources_skipped_level = n - survivors.shape[0]
    report.filter_time = time.perf_counter() - t0

    t1 = time.perf_counter()
    far = state.centrality.far
    if survivors.shape[0]:
        run, copies = _dedup_sources(state, survivors, cfg)
        report.sssp_count = len(run)
        report.sources_skipped_identical = sum(len(c) for c in copies.values())
        indptr, indices = g.csr()
        wr, wrf = g.unit_weights()
        run_arr = np.asarray(run, dtype=np.int64)
        out = _sweep(indptr, indices, n, run_arr, cfg.mode, cfg.alpha, wr, wrf, cfg.threads)
        far[run_arr] = out
        for s, twins in copies.items():
            far[twins] = far[s]
    report.update_time = time.perf_counter() - t1
    return report


def _canon(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def _full_dist(g: DynamicGraph, s: int) -> np.ndarray:
    indptr, indices = g.csr()
    wr, wrf = g.unit_weights()
    dist, _ = _kernels.sssp_with_far(
        indptr, indices, g.n, s, _kernels.TOP_DOWN, 1.0, wr, wrf
    )
    return dist

def _update_mask(du: np.ndarray, dv: np.ndarray) -> np.ndarray:
    """True where the level gap forces a recompute: exactly one side
    unreachable, or both reachable more than one level apart."""
    un_u = du < 0
    un_v = dv < 0
    both = ~un_u & ~un_v
    return (un_u ^ un_v) | (both & (np.abs(du - dv) > 1))


def _dedup_sources(
    state: EngineState, survivors: np.ndarray, cfg: EngineConfig
) -> tuple[list[int], dict[int, np.ndarray]]:
    """Split surviving sources into (run one SSSP, copy-from map).

    Copies take the smallest surviving member of a type-II class first, then
    type-I; both kinds carry equal closeness, so one hop from an executed
    source is enough."""
    if not cfg.use_identical or survivors.shape[0] < 2:
        return [int(s) for s in survivors], {}
    t1, t2 = state.type1, state.type2
    in_scope = set(int(s) for s in survivors)
    assigned: set[int] = set()
    run: list[int] = []
    copies: dict[int, np.ndarray] = {}
    for s in survivors:
        s = int(s)
        if s in assigned:
            continue
        run.append(s)
        twins = []
        for cls in (t2, t1):
            for t in cls.members[cls.class_of[s]]:
                if t != s and t in in_scope and t not in assigned and t not in twins:
                    twins.append(t)
        if twins:
            for t in twins:
                assigned.add(t)
            copies[s] = np.asarray(sorted(twins), dtype=np.int64)
    return run, copies


def _sweep(
    indptr: np.ndarray,
    indices: np.ndarray,
    n: int,
    sources: np.ndarray,
    mode: str,
    alpha: float,
    wr: np.ndarray,
    wrf: np.ndarray,
    threads: int,
) -> np.ndarray:
    code = _mode_code(mode)
    out = np.empty(sources.shape[0], dtype=np.int64)
    if threads <= 1 or sources.shape[0] < 2 * threads:
        _kernels.far_sweep(indptr, indices, n, sources, code, float(alpha), wr, wrf, out)
        return out
    bounds = np.linspace(0, sources.shape[0], threads + 1).astype(int)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [
            pool.submit(
                _kernels.far_sweep,
                indptr, indices, n, sources[lo:hi], code, float(alpha),
                wr, wrf, out[lo:hi],
            )
            for lo, hi in zip(bounds[:-1], bounds[1:])
            if hi > lo
        ]
        for f in futures:
            f.result()
    return out


def _local_csr(
    vs: np.ndarray, edge_list: Sequence[Edge], k: int
) -> tuple[np.ndarray, np.ndarray]:
    """CSR over the scope subgraph, vertices relabelled to their rank in vs."""
    if not edge_list:
        return np.zeros(k + 1, dtype=np.int64), np.empty(0, dtype=np.int64)
    arr = np.asarray(edge_list, dtype=np.int64)
    heads = np.concatenate([arr[:, 0], arr[:, 1]])
    tails = np.concatenate([arr[:, 1], arr[:, 0]])
    lh = np.searchsorted(vs, heads)
    lt = np.searchsorted(vs, tails)
    order = np.argsort(lh, kind="stable")
    indptr = np.zeros(k + 1, dtype=np.int64)
    np.cumsum(np.bincount(lh, minlength=k), out=indptr[1:])
    return indptr, lt[order]
