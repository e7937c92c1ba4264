"""Reference integer sequences: bundled snapshots and OEIS b-file fetching.

Snapshots live under ``crossmap/data`` in plain b-file format and are the
default for tests (no network).  ``fetch_bfile`` downloads the live b-file,
caches the raw bytes under ``$CROSSMAP_CACHE_DIR`` (default
``~/.cache/crossmap``), and falls back to the cache when offline.  Both
paths go through the same parser.
"""
from __future__ import annotations

import os
import re
import tempfile
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional

import requests

from .errors import NetworkError, NoOverlap, ParseError, UnknownId
from .counting import SequenceTable

BUNDLED_IDS = ("A000108", "A001006", "A108304", "A108307", "A000110")

_ID_RE = re.compile(r"^A\d{6}$")
_BFILE_URL = "https://oeis.org/{id}/b{digits}.txt"
DEFAULT_TIMEOUT = 10.0


@dataclass(frozen=True)
class RefSequence:
    id: str
    offset: int
    values: tuple[int, ...]
    source: str  # "bundled" or "fetched"

    def value_at(self, n: int) -> Optional[int]:
        i = n - self.offset
        return self.values[i] if 0 <= i < len(self.values) else None


def _check_id(oeis_id: str) -> None:
    if not _ID_RE.match(oeis_id):
        raise UnknownId(f"malformed OEIS id {oeis_id!r}")


def parse_bfile(text: str, oeis_id: str, source: str, limit: Optional[int] = None) -> RefSequence:
    """Parse b-file text: `index value` lines, `#` comments ignored."""
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"{oeis_id} line {lineno}: expected `index value`, got {raw!r}")
        try:
            idx, val = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"{oeis_id} line {lineno}: non-integer field in {raw!r}") from None
        pairs.append((idx, val))
        if limit is not None and len(pairs) >= limit:
            break
    if not pairs:
        raise ParseError(f"{oeis_id}: b-file contains no terms")
    offset = pairs[0][0]
    for j, (idx, _) in enumerate(pairs):
        if idx != offset + j:
            raise ParseError(f"{oeis_id}: non-contiguous index {idx}")
    return RefSequence(oeis_id, offset, tuple(v for _, v in pairs), source)


def bundled(oeis_id: str) -> RefSequence:
    """The snapshot shipped with the package."""
    _check_id(oeis_id)
    if oeis_id not in BUNDLED_IDS:
        raise UnknownId(f"no bundled snapshot for {oeis_id}")
    text = (resources.files("crossmap") / "data" / f"b{oeis_id[1:]}.txt").read_text()
    return parse_bfile(text, oeis_id, source="bundled")


def cache_dir() -> Path:
    env = os.environ.get("CROSSMAP_CACHE_DIR")
    return Path(env) if env else Path.home() / ".cache" / "crossmap"


def _cache_path(oeis_id: str) -> Path:
    return cache_dir() / f"b{oeis_id[1:]}.txt"


def _atomic_write(path: Path, data: bytes) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def fetch_bfile(oeis_id: str, limit: int, timeout: float = DEFAULT_TIMEOUT) -> RefSequence:
    """Download (or serve from cache) the b-file and parse up to ``limit`` terms."""
    _check_id(oeis_id)
    if limit < 1:
        raise ParseError(f"limit must be >= 1, got {limit}")
    url = _BFILE_URL.format(id=oeis_id, digits=oeis_id[1:])
    cache = _cache_path(oeis_id)
    try:
        resp = requests.get(url, timeout=timeout)
        if resp.status_code == 404:
            raise UnknownId(f"OEIS has no b-file for {oeis_id}")
        resp.raise_for_status()
        _atomic_write(cache, resp.content)
        text = resp.text
    except (requests.RequestException, OSError) as exc:
        if cache.exists():
            text = cache.read_text()
        else:
            raise NetworkError(f"cannot fetch {url} and no cache exists: {exc}") from exc
    return parse_bfile(text, oeis_id, source="fetched", limit=limit)


@dataclass(frozen=True)
class SequenceDiff:
    """Mismatches between a computed table column and a reference sequence."""

    id: str
    family: str
    k: Optional[int]
    compared: int
    mismatches: tuple[tuple[int, int, int], ...]  # (n, computed, reference)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def compare(computed: SequenceTable, ref: RefSequence, family: str, k: Optional[int] = None) -> SequenceDiff:
    """Diff one table column against a reference, aligned on n with offsets."""
    column = computed.values(family, k)
    mismatches = []
    compared = 0
    for n, value in sorted(column.items()):
        expected = ref.value_at(n)
        if expected is None:
            continue
        compared += 1
        if value != expected:
            mismatches.append((n, value, expected))
    if compared == 0:
        raise NoOverlap(f"no common indices between table and {ref.id}")
    return SequenceDiff(ref.id, family, k, compared, tuple(mismatches))
