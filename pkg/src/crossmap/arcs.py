"""Arc diagrams of partitions, classical and enhanced.

An arc joins two elements that are consecutive within a block.  Under the
enhanced convention every singleton additionally carries a loop (u, u);
under the classical convention singletons contribute nothing.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import OutOfRange
from .partition import PartialPartition

CLASSICAL = "classical"
ENHANCED = "enhanced"


class Arc(NamedTuple):
    left: int
    right: int

    @property
    def is_loop(self) -> bool:
        return self.left == self.right

    @property
    def distance(self) -> int:
        return self.right - self.left


@dataclass(frozen=True)
class ArcSet:
    """Arcs of one partition, sorted by left endpoint.

    Left endpoints are pairwise distinct and so are right endpoints: within
    a block each element has at most one successor and one predecessor, and
    a loop uses up both roles of its element.
    """

    mode: str
    arcs: tuple[Arc, ...]

    def __post_init__(self):
        if self.mode not in (CLASSICAL, ENHANCED):
            raise OutOfRange(f"unknown arc mode {self.mode!r}")
        lefts = [a.left for a in self.arcs]
        rights = [a.right for a in self.arcs]
        if lefts != sorted(lefts) or len(set(lefts)) != len(lefts):
            raise OutOfRange("arcs must be sorted by distinct left endpoints")
        if len(set(rights)) != len(rights):
            raise OutOfRange("right endpoints must be distinct")
        for a in self.arcs:
            if not 1 <= a.left <= a.right:
                raise OutOfRange(f"bad arc {a}")
            if a.is_loop and self.mode == CLASSICAL:
                raise OutOfRange("classical arc sets cannot contain loops")

    def __iter__(self):
        return iter(self.arcs)

    def __len__(self):
        return len(self.arcs)


def _consecutive_pairs(labels: Iterable[int]) -> list[Arc]:
    last_of: dict[int, int] = {}
    arcs = []
    for j, v in enumerate(labels):
        if v:
            prev = last_of.get(v)
            if prev is not None:
                arcs.append(Arc(prev, j + 1))
            last_of[v] = j + 1
    arcs.sort()
    return arcs


def _loops(labels: Iterable[int]) -> list[Arc]:
    first: dict[int, int] = {}
    count: dict[int, int] = {}
    for j, v in enumerate(labels):
        if v:
            first.setdefault(v, j + 1)
            count[v] = count.get(v, 0) + 1
    return [Arc(u, u) for v, u in first.items() if count[v] == 1]


def arcs_classical(p: PartialPartition) -> ArcSet:
    """One arc per consecutive pair within a block; no loops."""
    return ArcSet(CLASSICAL, tuple(_consecutive_pairs(p.labels)))


def arcs_enhanced(p: PartialPartition) -> ArcSet:
    """Classical arcs plus a loop for every singleton block."""
    arcs = _consecutive_pairs(p.labels) + _loops(p.labels)
    arcs.sort()
    return ArcSet(ENHANCED, tuple(arcs))


def distance_multiset(a: ArcSet) -> list[int]:
    """Sorted multiset of arc spans (right - left); loops contribute 0."""
    return sorted(arc.distance for arc in a)


def partition_from_enhanced_arcs(n: int, arcs: Iterable[Arc]) -> PartialPartition:
    """Reconstruct a partition from its enhanced arc set and ambient n.

    Loops become singleton blocks; chains of shared endpoints merge into
    blocks.  Inverse of :func:`arcs_enhanced`.
    """
    from .partition import from_blocks

    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    present = set()
    for arc in arcs:
        present.add(arc.left)
        present.add(arc.right)
        parent[find(arc.left)] = find(arc.right)
    groups: dict[int, list[int]] = {}
    for e in sorted(present):
        groups.setdefault(find(e), []).append(e)
    return from_blocks(n, list(groups.values()))
