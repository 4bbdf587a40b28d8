"""Zero-ordinate tables: ingestion, caching, and counting functions.

A zero file is plain text, one positive ordinate per line, '#' comments and
blank lines allowed, strictly increasing.  Parsing is strict: anything else
is an error naming the line.  Next to the text file the loader maintains a
binary cache (suffix ".zvzt"):

    magic b"ZVZT" | u16 version (little endian) | u64 count | count f8 LE
    | 32-byte SHA-256 of the source text file

The trailing hash identifies the exact source bytes, so editing the text
file invalidates the cache; the doubles round-trip bit-exactly.

Counting conventions: N(t) counts ordinates <= t, with a half weight exactly
at a jump when `half_weight_at_jump` is set (the default).  The smooth
approximation used throughout is

    smooth_count(t) = (t/2pi) log(t/2pi) - t/2pi + 7/8

and s_of_t is the remainder N(t) - smooth_count(t).
"""

from __future__ import annotations

import hashlib
import os
import struct
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    CountMismatchError,
    CoverageError,
    DataError,
    EmptyTableError,
    MonotonicityError,
    ParseError,
    SeparationError,
)

__all__ = [
    "SourceInfo",
    "CountConvention",
    "ZeroTable",
    "make_table",
    "load_zero_file",
    "count_zeros",
    "smooth_count",
    "s_of_t",
    "select_well_separated",
]

_MAGIC = b"ZVZT"
_CACHE_VERSION = 1
_MAX_GAP = 10.0

_TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class SourceInfo:
    path: str
    sha256: str  # hex digest of the source text bytes ("" for synthetic)


@dataclass(frozen=True)
class CountConvention:
    half_weight_at_jump: bool = True


DEFAULT_CONVENTION = CountConvention()


@dataclass(frozen=True)
class ZeroTable:
    ordinates: np.ndarray  # float64, strictly increasing, all > 0
    count: int
    max_height: float
    source: SourceInfo

    def __post_init__(self):
        self.ordinates.setflags(write=False)


def _validate(arr: np.ndarray, path: str) -> None:
    if arr.size == 0:
        raise EmptyTableError(path)
    if arr[0] <= 0.0:
        raise DataError(f"{path}: ordinates must be positive, first is {arr[0]!r}")
    if not np.all(np.isfinite(arr)):
        raise DataError(f"{path}: non-finite ordinate present")
    diffs = np.diff(arr)
    bad = np.where(diffs <= 0.0)[0]
    if bad.size:
        i = int(bad[0]) + 1
        raise MonotonicityError(path, i, float(arr[i]), float(arr[i - 1]))
    wide = np.where(diffs > _MAX_GAP)[0]
    if wide.size:
        i = int(wide[0])
        raise DataError(
            f"{path}: gap of {diffs[i]:.6g} between ordinates #{i} and #{i+1} "
            f"exceeds {_MAX_GAP:g} (corrupt file?)"
        )


def make_table(ordinates, source_label: str = "synthetic") -> ZeroTable:
    """Build a table from an in-memory sequence (mostly for synthetic data)."""
    arr = np.ascontiguousarray(np.asarray(ordinates, dtype=np.float64))
    _validate(arr, source_label)
    return ZeroTable(
        ordinates=arr,
        count=int(arr.size),
        max_height=float(arr[-1]),
        source=SourceInfo(path=source_label, sha256=""),
    )


def _cache_path(path: Path) -> Path:
    return path.with_name(path.name + ".zvzt")


def _read_cache(cache: Path, digest: bytes) -> np.ndarray | None:
    try:
        blob = cache.read_bytes()
    except OSError:
        return None
    header = struct.calcsize("<4sHQ")
    if len(blob) < header + 32:
        return None
    magic, version, count = struct.unpack_from("<4sHQ", blob, 0)
    if magic != _MAGIC or version != _CACHE_VERSION:
        return None
    need = header + 8 * count + 32
    if len(blob) != need:
        return None
    if blob[-32:] != digest:
        return None  # source text changed; cache is stale
    return np.frombuffer(blob, dtype="<f8", count=count, offset=header).astype(
        np.float64
    )


def _write_cache(cache: Path, arr: np.ndarray, digest: bytes) -> None:
    blob = (
        struct.pack("<4sHQ", _MAGIC, _CACHE_VERSION, arr.size)
        + arr.astype("<f8").tobytes()
        + digest
    )
    tmp = cache.with_name(cache.name + ".tmp")
    try:
        tmp.write_bytes(blob)
        os.replace(tmp, cache)
    except OSError:
        # caching is best-effort; a read-only directory is not an error
        try:
            tmp.unlink()
        except OSError:
            pass


def _parse_text(raw: bytes, path: str) -> np.ndarray:
    values: list[float] = []
    for lineno, line in enumerate(raw.decode("utf-8").splitlines(), start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        try:
            values.append(float(s))
        except ValueError:
            raise ParseError(path, lineno, line) from None
    if not values:
        raise EmptyTableError(path)
    return np.asarray(values, dtype=np.float64)


def load_zero_file(path, expected_count: int | None = None) -> ZeroTable:
    """Load a text zero table, using/refreshing the sidecar binary cache."""
    p = Path(path)
    try:
        raw = p.read_bytes()
    except OSError as exc:
        raise DataError(f"cannot read zero file {p}: {exc}") from exc
    digest = hashlib.sha256(raw).digest()

    cache = _cache_path(p)
    arr = _read_cache(cache, digest)
    if arr is None:
        arr = _parse_text(raw, str(p))
        _validate(arr, str(p))
        _write_cache(cache, arr, digest)
    else:
        _validate(arr, str(p))

    if expected_count is not None and arr.size != expected_count:
        raise CountMismatchError(str(p), expected_count, int(arr.size))

    return ZeroTable(
        ordinates=arr,
        count=int(arr.size),
        max_height=float(arr[-1]),
        source=SourceInfo(path=str(p), sha256=digest.hex()),
    )


def count_zeros(
    table: ZeroTable, t: float, convention: CountConvention = DEFAULT_CONVENTION
) -> float:
    """N(t): ordinates <= t, with an optional half weight exactly at a jump."""
    if t < 0.0:
        raise ValueError(f"count_zeros needs t >= 0, got {t!r}")
    if t > table.max_height:
        raise CoverageError(t, table.max_height, "count_zeros")
    idx = int(np.searchsorted(table.ordinates, t, side="right"))
    if (
        convention.half_weight_at_jump
        and idx > 0
        and table.ordinates[idx - 1] == t
    ):
        return idx - 0.5
    return float(idx)


def smooth_count(t) -> float:
    """(t/2pi) log(t/2pi) - t/2pi + 7/8 for t > 0."""
    t = np.asarray(t, dtype=float)
    if np.any(t <= 0.0):
        raise ValueError("smooth_count requires t > 0")
    x = t / _TWO_PI
    val = x * np.log(x) - x + 0.875
    return val if val.ndim else float(val)


def s_of_t(
    table: ZeroTable, t: float, convention: CountConvention = DEFAULT_CONVENTION
) -> float:
    """Remainder N(t) - smooth_count(t) for 1 <= t <= max_height."""
    if t < 1.0:
        raise ValueError(f"s_of_t needs t >= 1, got {t!r}")
    return count_zeros(table, t, convention) - smooth_count(t)


def select_well_separated(
    table: ZeroTable, n: int, c: float = 0.5
) -> float:
    """Pick T in [n, n+1) maximizing the distance to all ordinates.

    Candidates are n itself, midpoints of consecutive ordinates, and the
    point just below n+1; ties resolve to the smallest T.  Raises
    SeparationError (naming the achieved separation) if even the best T is
    closer than c / log n to some ordinate.
    """
    if n < 4:
        raise ValueError(f"select_well_separated needs n >= 4, got {n!r}")
    if not c > 0.0:
        raise ValueError("separation constant c must be positive")
    required = c / np.log(n)
    ords = table.ordinates
    i0 = int(np.searchsorted(ords, float(n), side="left"))
    i1 = int(np.searchsorted(ords, float(n) + 1.0, side="right"))
    relevant = ords[max(0, i0 - 1): min(ords.size, i1 + 1)]

    if i0 == i1:
        # no ordinate inside [n, n+1]: the conventional answer is the center
        t = n + 0.5
        dist = float(np.min(np.abs(relevant - t))) if relevant.size else np.inf
        if dist < required:
            raise SeparationError(dist, required)
        return t

    hi = np.nextafter(float(n) + 1.0, float(n))
    candidates = [float(n), hi]
    inside = ords[i0:i1]
    neighbors = ords[max(0, i0 - 1): min(ords.size, i1 + 1)]
    mids = 0.5 * (neighbors[:-1] + neighbors[1:])
    candidates.extend(
        float(m) for m in mids if float(n) <= m < float(n) + 1.0
    )
    candidates = sorted(set(candidates))

    best_t, best_d = None, -1.0
    for t in candidates:
        d = float(np.min(np.abs(relevant - t)))
        if d > best_d + 1e-15:
            best_t, best_d = t, d
    if best_d < required:
        raise SeparationError(best_d, required)
    return float(best_t)
