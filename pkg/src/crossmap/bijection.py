"""The bijection between partitions of subsets of [n] and partitions of [n+1].

Forward: every pair v < w consecutive in a block merges v with w+1 in the
image; every singleton u merges u with u+1; untouched vertices of [n+1]
stay singletons.  In arc terms, each enhanced arc (x, y) of the source
becomes the classical arc (x, y+1) of the image, which is why enhanced
k-crossings (and k-nestings) map onto classical ones.
"""
from __future__ import annotations

from .arcs import Arc, CLASSICAL, ENHANCED, arcs_classical, arcs_enhanced
from .crossings import CrossingWitness
from .partition import PartialPartition, from_blocks, require_full


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, x: int, y: int) -> None:
        self.parent[self.find(x)] = self.find(y)


def forward(p: PartialPartition) -> PartialPartition:
    """Map a partition of a subset of [n] to a full partition of [n+1]."""
    n1 = p.n + 1
    uf = _UnionFind(n1 + 1)
    for arc in arcs_enhanced(p):
        uf.union(arc.left, arc.right + 1)
    groups: dict[int, list[int]] = {}
    for e in range(1, n1 + 1):
        groups.setdefault(uf.find(e), []).append(e)
    return from_blocks(n1, list(groups.values()))


def reverse(q: PartialPartition) -> PartialPartition:
    """Map a full partition of [n+1] back to a partition of a subset of [n].

    Raises NotFull when q has absent elements.
    """
    require_full(q)
    n = q.n - 1
    uf = _UnionFind(n + 1)
    present: set[int] = set()
    for arc in arcs_classical(q):
        if arc.right == arc.left + 1:
            present.add(arc.left)  # unit arc collapses to a singleton
        else:
            present.add(arc.left)
            present.add(arc.right - 1)
            uf.union(arc.left, arc.right - 1)
    groups: dict[int, list[int]] = {}
    for e in sorted(present):
        groups.setdefault(uf.find(e), []).append(e)
    return from_blocks(n, list(groups.values()))


def witness_forward(w: CrossingWitness) -> CrossingWitness:
    """Transport an enhanced witness of p to a classical witness of forward(p).

    Each arc (a, b) maps to (a, b+1); kind is preserved.
    """
    arcs = tuple(Arc(a.left, a.right + 1) for a in w.arcs)
    return CrossingWitness(w.kind, CLASSICAL, arcs)


def witness_reverse(w: CrossingWitness) -> CrossingWitness:
    """Inverse of witness_forward: (a, b) maps to (a, b-1), mode to enhanced."""
    arcs = tuple(Arc(a.left, a.right - 1) for a in w.arcs)
    return CrossingWitness(w.kind, ENHANCED, arcs)
