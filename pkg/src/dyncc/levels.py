"""Level-difference filter for single-edge changes.

For a changed edge (u, v), a source s keeps its closeness exactly when its
BFS levels for u and v differ by at most one, both measured on the graph
without the structural change in effect: the pre-insertion graph for inserts,
the post-deletion graph for deletes. The classification below is exhaustive
and mutually exclusive; only FAR_LEVELS and ONE_SIDE_UNREACHABLE require a
recomputation.
"""

from __future__ import annotations

from collections import Counter
from enum import Enum
from typing import Iterable

from .graph import UNREACHABLE, DynamicGraph, sssp_distances

__all__ = ["LevelCase", "classify_source", "filter_sources", "case_distribution"]


class LevelCase(Enum):
    EQUAL_LEVELS = "equal_levels"
    ADJACENT_LEVELS = "adjacent_levels"
    FAR_LEVELS = "far_levels"
    ONE_SIDE_UNREACHABLE = "one_side_unreachable"
    BOTH_UNREACHABLE = "both_unreachable"

    @property
    def needs_update(self) -> bool:
        return self in (LevelCase.FAR_LEVELS, LevelCase.ONE_SIDE_UNREACHABLE)


def classify_source(du_s: int, dv_s: int) -> LevelCase:
    """Classify one source from its distances to the edge endpoints.

    Either distance may be UNREACHABLE (-1). A source seeing only one
    endpoint is an unbounded level gap; one seeing neither is untouched.
    """
    du_un = du_s == UNREACHABLE
    dv_un = dv_s == UNREACHABLE
    if du_un and dv_un:
        return LevelCase.BOTH_UNREACHABLE
    if du_un or dv_un:
        return LevelCase.ONE_SIDE_UNREACHABLE
    gap = abs(du_s - dv_s)
    if gap == 0:
        return LevelCase.EQUAL_LEVELS
    if gap == 1:
        return LevelCase.ADJACENT_LEVELS
    return LevelCase.FAR_LEVELS


def filter_sources(
    g: DynamicGraph,
    u: int,
    v: int,
    scope: Iterable[int] | None = None,
) -> set[int]:
    """Sources in `scope` (defaults to all vertices) whose closeness will
    change when the edge (u, v) is inserted into g, or was removed to form g.
    """
    du = sssp_distances(g, u)
    dv = sssp_distances(g, v)
    candidates = range(g.n) if scope is None else scope
    return {
        s for s in candidates if classify_source(int(du[s]), int(dv[s])).needs_update
    }


def case_distribution(g: DynamicGraph, u: int, v: int) -> Counter:
    """Histogram of LevelCase over every vertex, for the change (u, v)."""
    du = sssp_distances(g, u)
    dv = sssp_distances(g, v)
    return Counter(classify_source(int(a), int(b)) for a, b in zip(du, dv))
