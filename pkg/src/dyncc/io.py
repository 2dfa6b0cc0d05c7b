"""Edge-list and event-stream parsing, experiment preparation, CSV output.

Text formats are whitespace-separated:

    edge list      "u v"            lines starting '#' or '%' are comments
    event stream   "+ u v [t]"      insert, optional integer timestamp
                   "- u v [t]"      delete

Self-loop and duplicate edge lines are skipped with a logged warning count.
Timestamps, when present, must be non-decreasing; they are carried on the
events but never influence computation.
"""

from __future__ import annotations

import contextlib
import csv
import logging
import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .bcd import decompose
from .errors import (
    DecreasingTimestampError,
    InsufficientNonBridgeEdgesError,
    MalformedLineError,
)
from .graph import DynamicGraph

__all__ = [
    "EdgeEvent",
    "StatsBundle",
    "parse_edge_list",
    "parse_event_stream",
    "load_graph",
    "load_events",
    "relabel_pairs",
    "prepare_random_experiment",
    "write_centrality_csv",
    "write_stats",
    "write_edge_list",
    "write_event_stream",
]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class EdgeEvent:
    op: str  # "insert" or "delete"
    u: int
    v: int
    timestamp: int | None = None


@dataclass
class StatsBundle:
    """Histograms for reporting; keys are distances / case names."""

    distance_distribution: dict[int, int] = field(default_factory=dict)
    case_distribution: dict[str, int] = field(default_factory=dict)
    update_times: list[float] = field(default_factory=list)


def _tokens(stream: Iterable[str]) -> Iterator[tuple[int, list[str]]]:
    for line_no, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line[0] in "#%":
            continue
        yield line_no, line.split()


def parse_edge_list(stream: Iterable[str]) -> DynamicGraph:
    """Parse "u v" lines into a graph with n = max id + 1.

    Ids are taken as-is; gaps become isolated vertices (see relabel_pairs
    for sparse external ids)."""
    return graph_from_pairs(_read_pairs(stream))


def _read_pairs(stream: Iterable[str]) -> list[tuple[int, int]]:
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    self_loops = duplicates = 0
    for line_no, toks in _tokens(stream):
        if len(toks) != 2:
            raise MalformedLineError(line_no, " ".join(toks), "expected two vertex ids")
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise MalformedLineError(line_no, " ".join(toks), "vertex ids must be integers") from None
        if u < 0 or v < 0:
            raise MalformedLineError(line_no, " ".join(toks), "vertex ids must be non-negative")
        if u == v:
            self_loops += 1
            continue
        key = (u, v) if u < v else (v, u)
        if key in seen:
            duplicates += 1
            continue
        seen.add(key)
        pairs.append(key)
    if self_loops or duplicates:
        log.warning(
            "ignored %d self-loop and %d duplicate edge lines", self_loops, duplicates
        )
    return pairs


def graph_from_pairs(pairs: Sequence[tuple[int, int]]) -> DynamicGraph:
    n = max((max(u, v) for u, v in pairs), default=-1) + 1
    return DynamicGraph.from_edges(n, pairs)


def relabel_pairs(
    pairs: Sequence[tuple[int, int]],
) -> tuple[list[tuple[int, int]], list[int]]:
    """Map sparse external ids onto 0..k-1 by rank.

    Returns the relabelled pairs and the mapping as a list where entry i is
    the original id of new vertex i."""
    ids = sorted({x for e in pairs for x in e})
    index = {x: i for i, x in enumerate(ids)}
    return [(index[u], index[v]) for u, v in pairs], ids


def load_graph(path: str, relabel: str = "auto") -> tuple[DynamicGraph, list[int] | None]:
    """Read an edge-list file.

    relabel="auto" compacts ids only when gaps exist, "never" keeps them
    as-is, "always" forces compaction. The second return value is the
    new-to-original id mapping, or None when ids were untouched."""
    with open(path, encoding="utf-8") as f:
        pairs = _read_pairs(f)
    mapping = None
    if pairs and relabel != "never":
        top = max(max(e) for e in pairs)
        distinct = len({x for e in pairs for x in e})
        if relabel == "always" or distinct != top + 1:
            pairs, mapping = relabel_pairs(pairs)
    return graph_from_pairs(pairs), mapping


_EVENT_OPS = {"+": "insert", "-": "delete"}


def parse_event_stream(stream: Iterable[str]) -> list[EdgeEvent]:
    events: list[EdgeEvent] = []
    last_t: int | None = None
    for line_no, toks in _tokens(stream):
        if toks[0] not in _EVENT_OPS or len(toks) not in (3, 4):
            raise MalformedLineError(
                line_no, " ".join(toks), "expected '+ u v [t]' or '- u v [t]'"
            )
        try:
            u, v = int(toks[1]), int(toks[2])
            t = int(toks[3]) if len(toks) == 4 else None
        except ValueError:
            raise MalformedLineError(line_no, " ".join(toks), "fields must be integers") from None
        if u == v:
            raise MalformedLineError(line_no, " ".join(toks), "self loop")
        if t is not None:
            if last_t is not None and t < last_t:
                raise DecreasingTimestampError(line_no, last_t, t)
            last_t = t
        events.append(EdgeEvent(_EVENT_OPS[toks[0]], u, v, t))
    return events


def load_events(path: str) -> list[EdgeEvent]:
    with open(path, encoding="utf-8") as f:
        return parse_event_stream(f)


def prepare_random_experiment(
    g: DynamicGraph, k: int, seed: int
) -> tuple[DynamicGraph, list[EdgeEvent]]:
    """Remove k random non-bridge edges; return the thinned base graph and
    the removals as an insertion stream (replay restores g exactly).

    Sampling draws a uniform vertex, then a uniform neighbour, and discards
    bridge hits, so the connected components of g survive in the base graph.
    The bridge set is refreshed after every removal."""
    work = g.copy()
    rng = random.Random(seed)
    events: list[EdgeEvent] = []
    for _ in range(k):
        pi = decompose(work)
        non_bridge = {e for cid, es in pi.edges_of.items() if len(es) > 1 for e in es}
        if not non_bridge:
            raise InsufficientNonBridgeEdgesError(
                f"needed {k} non-bridge edges, ran out after {len(events)}"
            )
        while True:
            u = rng.randrange(work.n)
            if work.degree(u) == 0:
                continue
            v = rng.choice(work.neighbors(u))
            key = (u, v) if u < v else (v, u)
            if key in non_bridge:
                break
        work.remove_edge(u, v)
        events.append(EdgeEvent("insert", u, v))
    return work, events


def _open_out(path_or_file):
    if isinstance(path_or_file, (str, bytes)) or hasattr(path_or_file, "__fspath__"):
        return open(path_or_file, "w", encoding="utf-8", newline="")
    return contextlib.nullcontext(path_or_file)


def write_centrality_csv(state, path_or_file) -> None:
    """Rows "vertex,far,closeness" with closeness at 12 significant digits."""
    far = state.far
    cc = state.cc
    with _open_out(path_or_file) as f:
        w = csv.writer(f)
        w.writerow(["vertex", "far", "closeness"])
        for i in range(far.shape[0]):
            w.writerow([i, int(far[i]), format(float(cc[i]), ".12g")])


def write_stats(bundle: StatsBundle, path_or_file) -> None:
    """One CSV with a section label column per histogram."""
    with _open_out(path_or_file) as f:
        w = csv.writer(f)
        w.writerow(["section", "key", "value"])
        for d in sorted(bundle.distance_distribution):
            w.writerow(["distance", d, bundle.distance_distribution[d]])
        for name in sorted(bundle.case_distribution):
            w.writerow(["case", name, bundle.case_distribution[name]])
        for i, t in enumerate(bundle.update_times):
            w.writerow(["update_time", i, format(t, ".12g")])


def write_edge_list(g: DynamicGraph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        for u, v in g.edges():
            f.write(f"{u} {v}\n")


def write_event_stream(events: Iterable[EdgeEvent], path: str) -> None:
    sign = {"insert": "+", "delete": "-"}
    with open(path, "w", encoding="utf-8") as f:
        for ev in events:
            tail = f" {ev.timestamp}" if ev.timestamp is not None else ""
            f.write(f"{sign[ev.op]} {ev.u} {ev.v}{tail}\n")
