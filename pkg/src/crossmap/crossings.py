"""Detection and counting of k-crossings and k-nestings.

A k-crossing is a set of k arcs that, written in order of left endpoints
(a_1, b_1), ..., (a_k, b_k), satisfies a_1 < ... < a_k and b_1 < ... < b_k
together with a_k <= b_1 (enhanced) or a_k < b_1 (classical).  A k-nesting
instead has b_k < ... < b_1 with a_k <= b_k (enhanced) or a_k < b_k
(classical).  Loops can therefore only ever appear in enhanced witnesses.

The primary detector walks arcs in left-endpoint order with pruning; the
brute-force oracle re-checks the defining inequalities on every k-subset
and exists purely to cross-validate the detector.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .arcs import Arc, ArcSet, CLASSICAL, ENHANCED
from .errors import InvalidK, OutOfRange, TooManyArcs

CROSSING = "crossing"
NESTING = "nesting"

MAX_K = 8
ORACLE_MAX_ARCS = 24


@dataclass(frozen=True)
class CrossingWitness:
    """k arcs certifying one k-crossing or k-nesting."""

    kind: str
    mode: str
    arcs: tuple[Arc, ...]

    @property
    def k(self) -> int:
        return len(self.arcs)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "mode": self.mode,
            "arcs": [[a.left, a.right] for a in self.arcs],
        }

    @staticmethod
    def from_json(obj: dict) -> "CrossingWitness":
        return CrossingWitness(
            obj["kind"], obj["mode"], tuple(Arc(l, r) for l, r in obj["arcs"])
        )


@dataclass(frozen=True)
class CrossingReport:
    """Witness counts per (kind, k), with the maximal orders."""

    max_crossing: int
    max_nesting: int
    counts: dict


def _check_k(k: int) -> None:
    if k < 1:
        raise InvalidK(f"k must be >= 1, got {k}")
    if k > MAX_K:
        raise InvalidK(f"k is capped at {MAX_K}, got {k}")


def _strict(mode: str) -> bool:
    return mode == CLASSICAL


def _find_crossing(arcs: Sequence[Arc], k: int, strict: bool) -> Optional[list[Arc]]:
    n = len(arcs)
    if k > n:
        return None
    chain: list[Arc] = []

    def extend(start: int) -> bool:
        j = len(chain)
        if j == k:
            return True
        for i in range(start, n - (k - j) + 1):
            a = arcs[i]
            if j == 0:
                if strict and a.left == a.right:
                    continue
            else:
                if a.right <= chain[-1].right:
                    continue
                bound = chain[0].right
                if a.left > bound or (strict and a.left == bound):
                    continue
            chain.append(a)
            if extend(i + 1):
                return True
            chain.pop()
        return False

    return list(chain) if extend(0) else None


def _find_nesting(arcs: Sequence[Arc], k: int, strict: bool) -> Optional[list[Arc]]:
    n = len(arcs)
    if k > n:
        return None
    chain: list[Arc] = []

    def extend(start: int) -> bool:
        j = len(chain)
        if j == k:
            last = chain[-1]
            return last.left < last.right or not strict
        for i in range(start, n - (k - j) + 1):
            a = arcs[i]
            if j and a.right >= chain[-1].right:
                continue
            chain.append(a)
            if extend(i + 1):
                return True
            chain.pop()
        return False

    return list(chain) if extend(0) else None


def _count_crossings(arcs: Sequence[Arc], k: int, strict: bool) -> int:
    n = len(arcs)
    total = 0

    def extend(start: int, j: int, first_right: int, last_right: int) -> None:
        nonlocal total
        if j == k:
            total += 1
            return
        for i in range(start, n - (k - j) + 1):
            a = arcs[i]
            if j == 0:
                if strict and a.left == a.right:
                    continue
                extend(i + 1, 1, a.right, a.right)
            else:
                if a.right <= last_right:
                    continue
                if a.left > first_right or (strict and a.left == first_right):
                    continue
                extend(i + 1, j + 1, first_right, a.right)

    extend(0, 0, 0, 0)
    return total


def _count_nestings(arcs: Sequence[Arc], k: int, strict: bool) -> int:
    n = len(arcs)
    total = 0

    def extend(start: int, j: int, last: Optional[Arc]) -> None:
        nonlocal total
        if j == k:
            if last is not None and (last.left < last.right or not strict):
                total += 1
            return
        for i in range(start, n - (k - j) + 1):
            a = arcs[i]
            if last is not None and a.right >= last.right:
                continue
            extend(i + 1, j + 1, a)

    extend(0, 0, None)
    return total


def find_k_crossing(a: ArcSet, k: int, mode: Optional[str] = None) -> Optional[CrossingWitness]:
    """Lexicographically least k-crossing by left endpoints, if any."""
    _check_k(k)
    mode = mode or a.mode
    chain = _find_crossing(a.arcs, k, _strict(mode))
    return CrossingWitness(CROSSING, mode, tuple(chain)) if chain else None


def find_k_nesting(a: ArcSet, k: int, mode: Optional[str] = None) -> Optional[CrossingWitness]:
    """Lexicographically least k-nesting by left endpoints, if any."""
    _check_k(k)
    mode = mode or a.mode
    chain = _find_nesting(a.arcs, k, _strict(mode))
    return CrossingWitness(NESTING, mode, tuple(chain)) if chain else None


def _max_order(a: ArcSet, mode: str, finder) -> int:
    strict = _strict(mode)
    k = 0
    while k < len(a.arcs) and finder(a.arcs, k + 1, strict) is not None:
        k += 1
    return k


def max_crossing_number(a: ArcSet, mode: Optional[str] = None) -> int:
    """Largest k admitting a k-crossing; 0 when no arc qualifies."""
    return _max_order(a, mode or a.mode, _find_crossing)


def max_nesting_number(a: ArcSet, mode: Optional[str] = None) -> int:
    """Largest k admitting a k-nesting; 0 when no arc qualifies."""
    return _max_order(a, mode or a.mode, _find_nesting)


def count_k_witnesses(a: ArcSet, k: int, kind: str, mode: Optional[str] = None) -> int:
    """Number of distinct k-subsets of arcs forming a valid witness."""
    _check_k(k)
    mode = mode or a.mode
    if kind == CROSSING:
        return _count_crossings(a.arcs, k, _strict(mode))
    if kind == NESTING:
        return _count_nestings(a.arcs, k, _strict(mode))
    raise OutOfRange(f"unknown witness kind {kind!r}")


def crossing_report(a: ArcSet, mode: Optional[str] = None) -> CrossingReport:
    """Tabulate witness counts for every k up to the maximal orders."""
    mode = mode or a.mode
    mc = max_crossing_number(a, mode)
    mn = max_nesting_number(a, mode)
    counts = {}
    for k in range(1, mc + 1):
        counts[(CROSSING, k)] = count_k_witnesses(a, k, CROSSING, mode)
    for k in range(1, mn + 1):
        counts[(NESTING, k)] = count_k_witnesses(a, k, NESTING, mode)
    return CrossingReport(mc, mn, counts)


def _is_witness(arcs: Sequence[Arc], kind: str, strict: bool) -> bool:
    lefts = [a.left for a in arcs]
    rights = [a.right for a in arcs]
    if any(x >= y for x, y in zip(lefts, lefts[1:])):
        return False
    if kind == CROSSING:
        if any(x >= y for x, y in zip(rights, rights[1:])):
            return False
        return lefts[-1] < rights[0] if strict else lefts[-1] <= rights[0]
    if any(x <= y for x, y in zip(rights, rights[1:])):
        return False
    return lefts[-1] < rights[-1] if strict else lefts[-1] <= rights[-1]


def oracle_find(a: ArcSet, k: int, kind: str, mode: Optional[str] = None) -> Optional[CrossingWitness]:
    """Unpruned brute-force search over all k-subsets of arcs.

    Independent cross-check for the fast detectors; refuses large inputs.
    """
    _check_k(k)
    if len(a.arcs) > ORACLE_MAX_ARCS:
        raise TooManyArcs(f"oracle handles at most {ORACLE_MAX_ARCS} arcs")
    mode = mode or a.mode
    strict = _strict(mode)
    for combo in combinations(a.arcs, k):
        if _is_witness(combo, kind, strict):
            return CrossingWitness(kind, mode, combo)
    return None


def oracle_count(a: ArcSet, k: int, kind: str, mode: Optional[str] = None) -> int:
    """Brute-force witness count over all k-subsets."""
    _check_k(k)
    if len(a.arcs) > ORACLE_MAX_ARCS:
        raise TooManyArcs(f"oracle handles at most {ORACLE_MAX_ARCS} arcs")
    strict = _strict(mode or a.mode)
    return sum(1 for combo in combinations(a.arcs, k) if _is_witness(combo, kind, strict))
