"""Canonical set partitions of subsets of [n].

A partition of a subset of [n] is stored as a flat label array: position j
(0-based) holds 0 when element j+1 is absent from the ground subset, and a
positive block id otherwise.  Block ids follow the restricted-growth rule,
so every partition has exactly one encoding and label arrays compare
lexicographically for deterministic enumeration (0 sorts before 1).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import DuplicateElement, EmptyBlock, NotFull, OutOfRange, ParseError

#: Largest ambient ground set the package accepts anywhere.
MAX_N = 20


@dataclass(frozen=True)
class PartialPartition:
    """A set partition of a subset of [n], in restricted-growth form."""

    n: int
    labels: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_N:
            raise OutOfRange(f"ambient n must be in 0..{MAX_N}, got {self.n}")
        if len(self.labels) != self.n:
            raise OutOfRange(
                f"label array has length {len(self.labels)}, expected {self.n}"
            )
        seen_max = 0
        for j, v in enumerate(self.labels):
            if v < 0:
                raise OutOfRange(f"negative label at position {j + 1}")
            if v > seen_max + 1:
                raise OutOfRange(
                    f"label {v} at position {j + 1} breaks restricted growth"
                )
            if v == seen_max + 1:
                seen_max = v

    @property
    def num_blocks(self) -> int:
        return max(self.labels, default=0)

    @property
    def present(self) -> tuple[int, ...]:
        """Elements of [n] that belong to the ground subset."""
        return tuple(j + 1 for j, v in enumerate(self.labels) if v != 0)

    @property
    def is_full(self) -> bool:
        return all(v != 0 for v in self.labels)

    @property
    def is_empty(self) -> bool:
        return self.num_blocks == 0

    def blocks(self) -> list[list[int]]:
        """Blocks as sorted element lists, ordered by minimum element."""
        out: list[list[int]] = [[] for _ in range(self.num_blocks)]
        for j, v in enumerate(self.labels):
            if v:
                out[v - 1].append(j + 1)
        return out

    def singletons(self) -> list[int]:
        return [b[0] for b in self.blocks() if len(b) == 1]

    def to_text(self) -> str:
        """Canonical text form, e.g. ``9:1,4,7,9/2,5/3/6``; empty is ``n:``."""
        body = "/".join(",".join(str(e) for e in b) for b in self.blocks())
        return f"{self.n}:{body}"

    def __str__(self) -> str:
        return self.to_text()


def from_blocks(n: int, blocks: Sequence[Sequence[int]]) -> PartialPartition:
    """Build the canonical partition of a subset of [n] with these blocks."""
    labels = [0] * n if 0 <= n <= MAX_N else None
    if labels is None:
        raise OutOfRange(f"ambient n must be in 0..{MAX_N}, got {n}")
    mins = []
    for block in blocks:
        if not block:
            raise EmptyBlock("blocks must be nonempty")
        for e in block:
            if not 1 <= e <= n:
                raise OutOfRange(f"element {e} outside [1..{n}]")
            if labels[e - 1]:
                raise DuplicateElement(f"element {e} appears twice")
            labels[e - 1] = -1  # provisional mark; real ids assigned below
        mins.append(min(block))
    # Restricted-growth ids: blocks numbered by first (smallest) occurrence.
    order = sorted(range(len(mins)), key=lambda i: mins[i])
    for rank, i in enumerate(order, start=1):
        for e in blocks[i]:
            labels[e - 1] = rank
    return PartialPartition(n, tuple(labels))


def blocks_of(p: PartialPartition) -> list[list[int]]:
    return p.blocks()


def parse_text(text: str) -> PartialPartition:
    """Parse the ``n:elems/elems/...`` grammar used by the CLI and fixtures."""
    head, sep, body = text.strip().partition(":")
    if not sep:
        raise ParseError(f"missing ':' in partition text {text!r}")
    try:
        n = int(head)
    except ValueError:
        raise ParseError(f"bad ambient size {head!r}") from None
    if not body:
        return PartialPartition(n, (0,) * n) if 0 <= n <= MAX_N else from_blocks(n, [])
    try:
        blocks = [[int(e) for e in part.split(",")] for part in body.split("/")]
    except ValueError:
        raise ParseError(f"bad element in partition text {text!r}") from None
    return from_blocks(n, blocks)


def _check_n(n: int) -> None:
    if not 0 <= n <= MAX_N:
        raise OutOfRange(f"n must be in 0..{MAX_N}, got {n}")


def _iter_labels(n: int, partial: bool, prefix: Sequence[int] = ()) -> Iterator[list[int]]:
    """Yield raw label arrays in lexicographic order, extending ``prefix``.

    The same list object is reused between yields; callers must copy if they
    keep a reference.
    """
    labels = list(prefix) + [0] * (n - len(prefix))
    maxes = [0] * (n + 1)  # maxes[i] = max label among positions < i
    for i in range(len(prefix)):
        maxes[i + 1] = max(maxes[i], prefix[i])
    start = len(prefix)
    if start == n:
        yield labels
        return
    lo = 0 if partial else 1
    i = start
    labels[i] = lo
    while True:
        if i == n - 1:
            yield labels
        if i < n - 1 and labels[i] <= maxes[i] + 1:
            maxes[i + 1] = max(maxes[i], labels[i])
            i += 1
            labels[i] = lo
            continue
        # backtrack to the rightmost position (>= start) that can increment
        while i >= start and labels[i] >= maxes[i] + 1:
            i -= 1
        if i < start:
            return
        labels[i] += 1


def enumerate_full(n: int) -> Iterator[PartialPartition]:
    """All partitions of [n], lexicographic in restricted-growth order."""
    _check_n(n)
    for labels in _iter_labels(n, partial=False):
        yield PartialPartition(n, tuple(labels))


def enumerate_partial(n: int) -> Iterator[PartialPartition]:
    """All partitions of all subsets of [n]; Bell(n+1) items in total."""
    _check_n(n)
    for labels in _iter_labels(n, partial=True):
        yield PartialPartition(n, tuple(labels))


def _valid_prefix_extensions(prefix: tuple[int, ...], partial: bool) -> list[int]:
    m = max(prefix, default=0)
    base = list(range(1, m + 2))
    return [0] + base if partial else base


@dataclass(frozen=True)
class EnumerationRange:
    """A disjoint slice of an enumeration stream, fixed by label prefixes.

    Ranges from one :func:`split_range` call cover the stream exactly once
    and share nothing, so they may be consumed concurrently.
    """

    n: int
    partial: bool
    prefixes: tuple[tuple[int, ...], ...]

    def label_arrays(self) -> Iterator[list[int]]:
        for prefix in self.prefixes:
            yield from _iter_labels(self.n, self.partial, prefix)

    def partitions(self) -> Iterator[PartialPartition]:
        for labels in self.label_arrays():
            yield PartialPartition(self.n, tuple(labels))


def split_range(n: int, parts: int, partial: bool = False) -> list[EnumerationRange]:
    """Split the enumeration of [n] into ``parts`` disjoint sub-streams.

    Prefix depth grows until at least ``parts`` prefixes exist (or the whole
    array is fixed); prefixes are then dealt into contiguous chunks, so the
    concatenated sub-streams reproduce the unsplit lexicographic order.
    Chunks beyond the number of prefixes are empty.
    """
    _check_n(n)
    if parts < 1:
        raise OutOfRange(f"parts must be >= 1, got {parts}")
    prefixes: list[tuple[int, ...]] = [()]
    depth = 0
    while len(prefixes) < parts and depth < n:
        prefixes = [
            p + (v,) for p in prefixes for v in _valid_prefix_extensions(p, partial)
        ]
        depth += 1
    q, r = divmod(len(prefixes), parts)
    ranges = []
    pos = 0
    for i in range(parts):
        size = q + (1 if i < r else 0)
        ranges.append(EnumerationRange(n, partial, tuple(prefixes[pos : pos + size])))
        pos += size
    return ranges


def require_full(p: PartialPartition) -> None:
    if not p.is_full:
        raise NotFull(f"partition {p} has absent elements")
