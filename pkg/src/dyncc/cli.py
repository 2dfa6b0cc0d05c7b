"""Command-line surface.

    dyncc compute <graph> [--hybrid] [--out cc.csv]
    dyncc stream <graph> <events> --config {cc,b,bl,bli,blih} [--verify] ...
    dyncc bench <graph> --random-k N --seed S --configs b,bl,bli,blih ...
    dyncc stats {dist,cases} <graph> [--samples N] [--edge U V]

Exit codes: 0 success, 1 input error, 2 verification failure. Given the
same seed, config, and thread count, output files are byte-identical across
runs except for wall-clock columns (suffixed `_s`).
"""

from __future__ import annotations

import argparse
import csv
import sys

import numpy as np

from .closeness import closeness_all
from .engine import EngineConfig, EngineState, process_stream
from .errors import EventError, GraphError, InputError, VerificationError
from .graph import DynamicGraph, sssp_distances
from .io import (
    StatsBundle,
    load_events,
    load_graph,
    prepare_random_experiment,
    write_centrality_csv,
    write_stats,
)
from .levels import case_distribution
from .oracle import oracle_closeness

__all__ = ["main"]

_REPORT_FIELDS = [
    "event",
    "op",
    "u",
    "v",
    "sources_total",
    "sources_skipped_level",
    "sources_skipped_identical",
    "sssp_count",
    "fix_count",
    "bcd_rebuilt",
    "filter_time_s",
    "update_time_s",
]


class _Parser(argparse.ArgumentParser):
    # Usage errors are input errors: exit 1, not argparse's default 2.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    p = _Parser(prog="dyncc", description="Exact closeness centrality on dynamic graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="closeness of every vertex, from scratch")
    c.add_argument("graph")
    c.add_argument("--hybrid", action="store_true", help="direction-switching BFS")
    c.add_argument("--alpha", type=float, default=1.0, help="hybrid switch threshold")
    c.add_argument("--threads", type=int, default=1)
    c.add_argument("--out", help="output CSV path (default stdout)")

    s = sub.add_parser("stream", help="replay an edge event stream")
    s.add_argument("graph")
    s.add_argument("events")
    s.add_argument("--config", default="blih", choices=["cc", "b", "bl", "bli", "blih"])
    s.add_argument("--alpha", type=float, default=1.0)
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--report", help="per-event counters CSV")
    s.add_argument("--out", help="final centrality CSV (default stdout)")
    s.add_argument(
        "--verify",
        action="store_true",
        help="cross-check against a from-scratch oracle after every event",
    )

    b = sub.add_parser("bench", help="random delete/re-insert benchmark")
    b.add_argument("graph")
    b.add_argument("--random-k", type=int, required=True, metavar="N")
    b.add_argument("--seed", type=int, required=True, metavar="S")
    b.add_argument("--configs", default="b,bl,bli,blih")
    b.add_argument("--alpha", type=float, default=1.0)
    b.add_argument("--threads", type=int, default=1)
    b.add_argument("--out", help="summary CSV path (default stdout)")

    t = sub.add_parser("stats", help="distance or level-case histograms")
    t.add_argument("kind", choices=["dist", "cases"])
    t.add_argument("graph")
    t.add_argument("--samples", type=int, default=100)
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--edge", type=int, nargs=2, metavar=("U", "V"))
    t.add_argument("--out", help="output CSV path (default stdout)")

    return p


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "compute":
            return _cmd_compute(args)
        if args.command == "stream":
            return _cmd_stream(args)
        if args.command == "bench":
            return _cmd_bench(args)
        return _cmd_stats(args)
    except VerificationError as exc:
        print(f"dyncc: verification failed: {exc}", file=sys.stderr)
        return 2
    except (InputError, GraphError, EventError, OSError) as exc:
        print(f"dyncc: error: {exc}", file=sys.stderr)
        return 1


def _load(args) -> DynamicGraph:
    g, mapping = load_graph(args.graph)
    if mapping is not None:
        sidecar = args.graph + ".ids"
        with open(sidecar, "w", encoding="utf-8", newline="") as f:
            w = csv.writer(f)
            w.writerow(["vertex", "original_id"])
            for i, orig in enumerate(mapping):
                w.writerow([i, orig])
        print(
            f"dyncc: sparse ids compacted to 0..{g.n - 1}; mapping in {sidecar}",
            file=sys.stderr,
        )
    return g


def _cmd_compute(args) -> int:
    g = _load(args)
    mode = "hybrid" if args.hybrid else "top_down"
    state = closeness_all(g, mode, args.alpha, args.threads)
    write_centrality_csv(state, args.out or sys.stdout)
    return 0


def _cmd_stream(args) -> int:
    g = _load(args)
    events = load_events(args.events)
    cfg = EngineConfig.from_name(args.config, alpha=args.alpha, threads=args.threads)
    state = EngineState.initialize(g, cfg)

    rows = []
    for i, ev in enumerate(events):
        try:
            rep = process_stream(state, [ev], cfg)[0]
        except EventError as exc:
            raise EventError(i, exc.cause) from exc.cause
        if args.verify:
            _verify_against_oracle(state, i)
        rows.append(
            [
                i,
                ev.op,
                ev.u,
                ev.v,
                rep.sources_total,
                rep.sources_skipped_level,
                rep.sources_skipped_identical,
                rep.sssp_count,
                rep.fix_count,
                int(rep.bcd_rebuilt),
                format(rep.filter_time, ".6e"),
                format(rep.update_time, ".6e"),
            ]
        )

    if args.report:
        with open(args.report, "w", encoding="utf-8", newline="") as f:
            w = csv.writer(f)
            w.writerow(_REPORT_FIELDS)
            w.writerows(rows)
    write_centrality_csv(state.centrality, args.out or sys.stdout)
    return 0


def _verify_against_oracle(state: EngineState, event_index: int) -> None:
    want = oracle_closeness(state.graph).far
    got = state.centrality.far
    if got.shape != want.shape or not np.array_equal(got, want):
        bad = int(np.flatnonzero(got != want)[0]) if got.shape == want.shape else -1
        raise VerificationError(
            f"event {event_index}: far diverges from oracle"
            + (f" first at vertex {bad}" if bad >= 0 else " (length mismatch)")
        )


def _cmd_bench(args) -> int:
    g = _load(args)
    names = [c.strip() for c in args.configs.split(",") if c.strip()]
    base, events = prepare_random_experiment(g, args.random_k, args.seed)

    header = [
        "config",
        "n",
        "m",
        "events",
        "sssp_total",
        "sssp_mean",
        "sources_mean",
        "skipped_level_mean",
        "skipped_identical_mean",
        "fix_mean",
        "time_mean_s",
        "time_p50_s",
        "time_p90_s",
        "time_p99_s",
        "time_total_s",
    ]
    out_rows = []
    for name in names:
        cfg = EngineConfig.from_name(name, alpha=args.alpha, threads=args.threads)
        state = EngineState.initialize(base.copy(), cfg)
        reports = process_stream(state, events, cfg)
        times = np.array([r.filter_time + r.update_time for r in reports])
        k = len(reports)
        mean = lambda xs: format(sum(xs) / k, ".12g")
        out_rows.append(
            [
                cfg.name,
                state.graph.n,
                state.graph.m,
                k,
                sum(r.sssp_count for r in reports),
                mean([r.sssp_count for r in reports]),
                mean([r.sources_total for r in reports]),
                mean([r.sources_skipped_level for r in reports]),
                mean([r.sources_skipped_identical for r in reports]),
                mean([r.fix_count for r in reports]),
                format(times.mean(), ".6e"),
                format(np.percentile(times, 50), ".6e"),
                format(np.percentile(times, 90), ".6e"),
                format(np.percentile(times, 99), ".6e"),
                format(times.sum(), ".6e"),
            ]
        )

    target = args.out or sys.stdout
    close = isinstance(target, str)
    f = open(target, "w", encoding="utf-8", newline="") if close else target
    try:
        w = csv.writer(f)
        w.writerow(header)
        w.writerows(out_rows)
    finally:
        if close:
            f.close()
    return 0


def _cmd_stats(args) -> int:
    import random

    g = _load(args)
    bundle = StatsBundle()

    if args.kind == "dist":
        rng = random.Random(args.seed)
        n = g.n
        sources = (
            list(range(n)) if args.samples >= n else sorted(rng.sample(range(n), args.samples))
        )
        hist: dict[int, int] = {}
        for s in sources:
            dist = sssp_distances(g, s)
            vals, counts = np.unique(dist[dist > 0], return_counts=True)
            for d, c in zip(vals, counts):
                hist[int(d)] = hist.get(int(d), 0) + int(c)
        bundle.distance_distribution = hist
    else:
        hist: dict[str, int] = {}
        if args.edge:
            u, v = args.edge
            work = g.copy()
            if work.has_edge(u, v):
                # Deletion form: measure levels with the edge absent.
                work.remove_edge(u, v)
            pairs = [(work, u, v)]
        else:
            rng = random.Random(args.seed)
            edges = list(g.edges())
            if not edges:
                raise InputError("graph has no edges to sample")
            take = min(args.samples, len(edges))
            pairs = []
            for u, v in sorted(rng.sample(edges, take)):
                work = g.copy()
                work.remove_edge(u, v)
                pairs.append((work, u, v))
        for work, u, v in pairs:
            for case, cnt in case_distribution(work, u, v).items():
                hist[case.value] = hist.get(case.value, 0) + cnt
        bundle.case_distribution = hist

    write_stats(bundle, args.out or sys.stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
