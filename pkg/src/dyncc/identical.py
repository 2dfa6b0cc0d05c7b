"""Identical-vertex classes.

Two vertices are type-I identical when they have the same open neighborhood
(necessarily non-adjacent) and type-II identical when they have the same
closed neighborhood (necessarily adjacent). Either way they sit at the same
distance from every other vertex, so their closeness values coincide and one
SSSP can serve a whole class.

Classes are built by hashing each neighborhood to the sum of its ids,
grouping by hash, and separating hash collisions with an exact neighborhood
comparison; {1, 4} and {2, 3} both hash to 5 and must not merge. A single
edge change moves only its two endpoints between classes, so maintenance
detaches and re-inserts just those.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable

from .graph import DynamicGraph

__all__ = ["IdenticalClasses", "build_classes", "maintain_on_edge_change",
           "class_representatives"]

KINDS = ("type_i", "type_ii")


class IdenticalClasses:
    __slots__ = ("kind", "class_of", "members", "_next_id")

    def __init__(self, kind: str, class_of: list[int], members: dict[int, set[int]],
                 next_id: int):
        self.kind = kind
        self.class_of = class_of
        self.members = members
        self._next_id = next_id

    @classmethod
    def empty(cls, kind: str, n: int) -> "IdenticalClasses":
        if kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
        return cls(kind, [-1] * n, {}, 0)

    def new_class(self, v: int) -> int:
        cid = self._next_id
        self._next_id += 1
        self.members[cid] = {v}
        self.class_of[v] = cid
        return cid

    def attach(self, v: int, cid: int) -> None:
        self.members[cid].add(v)
        self.class_of[v] = cid

    def detach(self, v: int) -> None:
        cid = self.class_of[v]
        if cid < 0:
            return
        group = self.members[cid]
        group.discard(v)
        if not group:
            del self.members[cid]
        self.class_of[v] = -1

    def as_partition(self) -> set[frozenset[int]]:
        return {frozenset(g) for g in self.members.values()}

    def nontrivial(self) -> list[set[int]]:
        return [g for g in self.members.values() if len(g) > 1]

    def __len__(self) -> int:
        return len(self.members)


def _signature(g: DynamicGraph, v: int, kind: str) -> tuple[int, ...]:
    nb = g.neighbors(v)
    if kind == "type_i":
        return tuple(nb)
    return tuple(sorted([v, *nb]))


def build_classes(g: DynamicGraph, kind: str) -> IdenticalClasses:
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    n = g.n
    classes = IdenticalClasses.empty(kind, n)
    own = 1 if kind == "type_ii" else 0
    buckets: dict[int, list[int]] = defaultdict(list)
    for v in range(n):
        h = sum(g.neighbors(v)) + own * v
        buckets[h].append(v)
    for h, bucket in buckets.items():
        if len(bucket) == 1:
            classes.new_class(bucket[0])
            continue
        exact: dict[tuple[int, ...], int] = {}
        for v in bucket:
            sig = _signature(g, v, kind)
            cid = exact.get(sig)
            if cid is None:
                exact[sig] = classes.new_class(v)
            else:
                classes.attach(v, cid)
    return classes


def _reinsert(classes: IdenticalClasses, g: DynamicGraph, v: int) -> None:
    kind = classes.kind
    nb = g.neighbors(v)
    deg = len(nb)
    if kind == "type_ii":
        candidates: Iterable[int] = nb
    elif deg > 0:
        candidates = g.neighbors(nb[0])
    else:
        # Isolated vertices are all type-I identical to each other.
        candidates = (w for w in range(g.n) if g.degree(w) == 0)
    sig = _signature(g, v, kind)
    for w in candidates:
        if w == v or classes.class_of[w] < 0 or g.degree(w) != deg:
            continue
        if _signature(g, w, kind) == sig:
            classes.attach(v, classes.class_of[w])
            return
    classes.new_class(v)


def maintain_on_edge_change(
    classes: IdenticalClasses, g: DynamicGraph, u: int, v: int
) -> IdenticalClasses:
    """Re-home u and v after the edge (u, v) was inserted or deleted.

    `g` is the post-change graph. Only the endpoints' neighborhoods changed,
    so every other vertex keeps its class. Mutates and returns `classes`;
    the result always equals build_classes(g, kind) as a partition.
    """
    while len(classes.class_of) < g.n:
        classes.class_of.append(-1)
    classes.detach(u)
    classes.detach(v)
    _reinsert(classes, g, u)
    _reinsert(classes, g, v)
    return classes


def class_representatives(
    classes: IdenticalClasses, scope: Iterable[int]
) -> dict[int, int]:
    """Smallest scope member of each class that intersects the scope,
    keyed by class id. One SSSP per entry covers the whole intersection."""
    reps: dict[int, int] = {}
    for s in sorted(scope):
        cid = classes.class_of[s]
        if cid >= 0 and cid not in reps:
            reps[cid] = s
    return reps
