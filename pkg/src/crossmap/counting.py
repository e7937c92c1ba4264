"""Exact counting and identity verification.

All values are exact integers kept inside the signed 64-bit range; leaving
it raises Overflow instead of wrapping.  Enumeration-backed counts carry a
budget cap (default n <= 12) so a full run stays desk-scale.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .arcs import _consecutive_pairs, _loops
from .bijection import reverse
from .crossings import _find_crossing, _check_k
from .errors import Overflow, OutOfBudget, OutOfRange
from .partition import (
    EnumerationRange,
    _iter_labels,
    enumerate_full,
    split_range,
)

INT64_MAX = 2**63 - 1

DEFAULT_BUDGET = 12
BELL_MAX_N = 25
BINOMIAL_MAX_N = 62

FAMILY_C = "C"
FAMILY_E = "E"
FAMILY_BELL = "Bell"
FAMILY_PARTIAL_E = "partial-E"


def checked(value: int) -> int:
    if value > INT64_MAX:
        raise Overflow(f"value {value} exceeds the signed 64-bit range")
    return value


@dataclass(frozen=True)
class SequenceRow:
    family: str
    k: Optional[int]
    n: int
    value: int


@dataclass
class SequenceTable:
    """Rows (family, k, n, value) with unique keys and 64-bit values."""

    rows: list[SequenceRow] = field(default_factory=list)

    def add(self, family: str, k: Optional[int], n: int, value: int) -> None:
        checked(value)
        if value < 0:
            raise OutOfRange("sequence values are nonnegative")
        if any(r.family == family and r.k == k and r.n == n for r in self.rows):
            raise OutOfRange(f"duplicate row ({family}, {k}, {n})")
        self.rows.append(SequenceRow(family, k, n, value))

    def values(self, family: str, k: Optional[int] = None) -> dict[int, int]:
        return {r.n: r.value for r in self.rows if r.family == family and r.k == k}

    def to_csv(self) -> str:
        lines = ["family,k,n,value"]
        for r in self.rows:
            k = "" if r.k is None else r.k
            lines.append(f"{r.family},{k},{r.n},{r.value}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(
            [
                {"family": r.family, "k": r.k, "n": r.n, "value": r.value}
                for r in self.rows
            ]
        )


def binomial(n: int, i: int) -> int:
    """Exact binomial coefficient, restricted to 0 <= i <= n <= 62."""
    if not 0 <= i <= n:
        raise OutOfRange(f"need 0 <= i <= n, got i={i}, n={n}")
    if n > BINOMIAL_MAX_N:
        raise OutOfRange(f"binomial is capped at n <= {BINOMIAL_MAX_N}")
    return checked(math.comb(n, i))


@lru_cache(maxsize=None)
def _bell_triangle(rows: int) -> tuple[tuple[int, ...], ...]:
    triangle: list[tuple[int, ...]] = [(1,)]
    for _ in range(rows):
        prev = triangle[-1]
        row = [prev[-1]]
        for v in prev:
            row.append(row[-1] + v)
        triangle.append(tuple(row))
    return tuple(triangle)


def bell(n: int) -> int:
    """Bell number via the Bell triangle, independent of enumeration."""
    if not 0 <= n <= BELL_MAX_N:
        raise OutOfRange(f"bell is capped at n <= {BELL_MAX_N}")
    return checked(_bell_triangle(n)[n][0])


def _check_budget(k: int, n: int, budget: int) -> None:
    _check_k(k)
    if n < 0:
        raise OutOfRange(f"n must be >= 0, got {n}")
    if n > budget:
        raise OutOfBudget(f"n={n} exceeds the enumeration budget {budget}")


def _avoids(labels: list[int], k: int, enhanced: bool) -> bool:
    arcs = _consecutive_pairs(labels)
    if enhanced:
        arcs += _loops(labels)
        arcs.sort()
        return _find_crossing(arcs, k, strict=False) is None
    return _find_crossing(arcs, k, strict=True) is None


def count_range(rng: EnumerationRange, k: int, enhanced: bool) -> int:
    """Avoiders within one enumeration sub-range; safe to run in parallel."""
    total = 0
    for labels in rng.label_arrays():
        if _avoids(labels, k, enhanced):
            total += 1
    return total


def _count(k: int, n: int, enhanced: bool, partial: bool, parts: int) -> int:
    if parts == 1 and not partial:
        return _count_cached(k, n, enhanced)
    total = 0
    for rng in split_range(n, parts, partial=partial):
        total = checked(total + count_range(rng, k, enhanced))
    return total


@lru_cache(maxsize=None)
def _count_cached(k: int, n: int, enhanced: bool) -> int:
    total = 0
    for labels in _iter_labels(n, partial=False):
        if _avoids(labels, k, enhanced):
            total += 1
    return checked(total)


def count_C(k: int, n: int, parts: int = 1, budget: int = DEFAULT_BUDGET) -> int:
    """Partitions of [n] with no classical k-crossing."""
    _check_budget(k, n, budget)
    return _count(k, n, enhanced=False, partial=False, parts=parts)


def count_E(k: int, n: int, parts: int = 1, budget: int = DEFAULT_BUDGET) -> int:
    """Partitions of [n] with no enhanced k-crossing."""
    _check_budget(k, n, budget)
    return _count(k, n, enhanced=True, partial=False, parts=parts)


def count_partial_E(k: int, n: int, parts: int = 1, budget: int = DEFAULT_BUDGET) -> int:
    """Partitions of subsets of [n] with no enhanced k-crossing."""
    _check_budget(k, n, budget)
    return _count(k, n, enhanced=True, partial=True, parts=parts)


@dataclass(frozen=True)
class IdentityReport:
    """One instance of a binomial-transform identity check."""

    k: Optional[int]
    n: int
    lhs: int
    rhs_terms: list[int]
    rhs: int
    holds: bool
    rhs_direct: Optional[int] = None
    routes: Optional[dict] = None

    def to_json(self) -> str:
        obj = {
            "k": self.k,
            "n": self.n,
            "lhs": self.lhs,
            "rhs_terms": self.rhs_terms,
            "rhs": self.rhs,
            "holds": self.holds,
        }
        if self.rhs_direct is not None:
            obj["rhs_direct"] = self.rhs_direct
        if self.routes is not None:
            obj["routes"] = self.routes
        return json.dumps(obj)


def verify_identity(
    k: int, n: int, budget: int = DEFAULT_BUDGET, direct: bool = True
) -> IdentityReport:
    """Check that avoiders of [n+1] equal the binomial transform over [n].

    The left side counts full partitions of [n+1] with no classical
    k-crossing.  The right side is computed two independent ways: the
    binomial sum over enhanced avoider counts, and (when ``direct`` is set)
    a straight count of enhanced-avoiding partitions of subsets of [n].
    """
    _check_budget(k, n + 1, budget + 1)
    lhs = count_C(k, n + 1, budget=budget + 1)
    terms = [checked(binomial(n, i) * count_E(k, i, budget=budget)) for i in range(n + 1)]
    rhs = 0
    for t in terms:
        rhs = checked(rhs + t)
    rhs_direct = count_partial_E(k, n, budget=budget) if direct else None
    holds = lhs == rhs and (rhs_direct is None or rhs_direct == lhs)
    return IdentityReport(k, n, lhs, terms, rhs, holds, rhs_direct=rhs_direct)


def verify_eigensequence(n: int, budget: int = DEFAULT_BUDGET) -> IdentityReport:
    """Check the Bell-number fixed point of the binomial transform, three ways.

    Routes: the Bell-triangle recurrence, direct enumeration of partitions
    of [n+1], and counting distinct images of the reverse map over all full
    partitions of [n+1] (which must hit every partition of a subset of [n]
    exactly once).
    """
    if n > budget:
        raise OutOfBudget(f"n={n} exceeds the enumeration budget {budget}")
    lhs = bell(n + 1)
    terms = [checked(binomial(n, i) * bell(i)) for i in range(n + 1)]
    rhs = 0
    for t in terms:
        rhs = checked(rhs + t)

    enumerated = sum(1 for _ in enumerate_full(n + 1))
    images = {reverse(q).labels for q in enumerate_full(n + 1)}
    partial_total = sum(1 for _ in _iter_labels(n, partial=True))
    routes = {
        "triangle": lhs == rhs,
        "enumeration": enumerated == lhs,
        "bijection": len(images) == lhs == partial_total,
    }
    return IdentityReport(
        None, n, lhs, terms, rhs, all(routes.values()), routes=routes
    )


@dataclass(frozen=True)
class DistributionRow:
    kind: str
    k: int
    partial_enhanced: int
    full_classical: int

    @property
    def match(self) -> bool:
        return self.partial_enhanced == self.full_classical


@dataclass(frozen=True)
class DistributionTable:
    """Distribution of maximal crossing/nesting orders on both sides.

    For each k, pairs the number of partitions of subsets of [n] whose
    maximal enhanced order is exactly k with the number of full partitions
    of [n+1] whose maximal classical order is exactly k.
    """

    n: int
    rows: tuple[DistributionRow, ...]

    @property
    def all_match(self) -> bool:
        return all(r.match for r in self.rows)


def distribution_table(n: int, k_max: int, budget: int = 9) -> DistributionTable:
    if n > budget:
        raise OutOfBudget(f"n={n} exceeds the enumeration budget {budget}")
    from .crossings import max_crossing_number, max_nesting_number
    from .arcs import arcs_classical, arcs_enhanced, CLASSICAL, ENHANCED
    from .partition import enumerate_partial

    part_cross: dict[int, int] = {}
    part_nest: dict[int, int] = {}
    for p in enumerate_partial(n):
        a = arcs_enhanced(p)
        kc = max_crossing_number(a, ENHANCED)
        kn = max_nesting_number(a, ENHANCED)
        part_cross[kc] = part_cross.get(kc, 0) + 1
        part_nest[kn] = part_nest.get(kn, 0) + 1
    full_cross: dict[int, int] = {}
    full_nest: dict[int, int] = {}
    for q in enumerate_full(n + 1):
        a = arcs_classical(q)
        kc = max_crossing_number(a, CLASSICAL)
        kn = max_nesting_number(a, CLASSICAL)
        full_cross[kc] = full_cross.get(kc, 0) + 1
        full_nest[kn] = full_nest.get(kn, 0) + 1
    rows = []
    for k in range(0, k_max + 1):
        rows.append(
            DistributionRow("crossing", k, part_cross.get(k, 0), full_cross.get(k, 0))
        )
        rows.append(
            DistributionRow("nesting", k, part_nest.get(k, 0), full_nest.get(k, 0))
        )
    return DistributionTable(n, tuple(rows))


def count_table(family: str, k: Optional[int], n_max: int, budget: int = DEFAULT_BUDGET) -> SequenceTable:
    """Tabulate one counting family for n = 0..n_max."""
    table = SequenceTable()
    for n in range(n_max + 1):
        if family == FAMILY_C:
            value = count_C(k, n, budget=budget)
        elif family == FAMILY_E:
            value = count_E(k, n, budget=budget)
        elif family == FAMILY_PARTIAL_E:
            value = count_partial_E(k, n, budget=budget)
        elif family == FAMILY_BELL:
            value = bell(n)
        else:
            raise OutOfRange(f"unknown family {family!r}")
        table.add(family, k, n, value)
    return table
