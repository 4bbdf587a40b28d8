"""Tests for zero-table ingestion, caching, and counting functions."""

import struct

import numpy as np
import pytest

from zetavar import zeros as zz
from zetavar.errors import (
    CountMismatchError,
    CoverageError,
    DataError,
    EmptyTableError,
    MonotonicityError,
    ParseError,
    SeparationError,
)

TWO_PI = 2 * np.pi


def write(tmp_path, text, name="zeros.txt"):
    p = tmp_path / name
    p.write_text(text)
    return p


# ----------------------------------------------------------------------------
# parsing
# ----------------------------------------------------------------------------

def test_load_basic_with_comments_and_blanks(tmp_path):
    p = write(tmp_path, "# first three ordinates\n14.134725\n\n21.022040\n25.010858\n")
    t = zz.load_zero_file(p)
    assert t.count == 3
    assert t.max_height == pytest.approx(25.010858)
    assert t.ordinates[0] == pytest.approx(14.134725)
    assert t.source.path == str(p)
    assert len(t.source.sha256) == 64


def test_parse_error_names_line(tmp_path):
    p = write(tmp_path, "14.1\n21.0\nnot-a-number\n")
    with pytest.raises(ParseError) as exc:
        zz.load_zero_file(p)
    assert exc.value.line_number == 3
    assert "not-a-number" in str(exc.value)


def test_empty_file_is_an_error(tmp_path):
    p = write(tmp_path, "# only comments\n\n")
    with pytest.raises(EmptyTableError):
        zz.load_zero_file(p)


def test_monotonicity_error_names_index(tmp_path):
    p = write(tmp_path, "14.1\n21.0\n20.9\n")
    with pytest.raises(MonotonicityError) as exc:
        zz.load_zero_file(p)
    assert exc.value.index == 2


def test_oversized_gap_rejected(tmp_path):
    p = write(tmp_path, "14.1\n30.0\n")
    with pytest.raises(DataError, match="gap"):
        zz.load_zero_file(p)


def test_expected_count(tmp_path):
    p = write(tmp_path, "14.1\n21.0\n")
    with pytest.raises(CountMismatchError):
        zz.load_zero_file(p, expected_count=3)
    assert zz.load_zero_file(p, expected_count=2).count == 2


def test_nonpositive_ordinate_rejected(tmp_path):
    p = write(tmp_path, "-3.0\n14.1\n")
    with pytest.raises(DataError):
        zz.load_zero_file(p)


# ----------------------------------------------------------------------------
# binary cache
# ----------------------------------------------------------------------------

def test_cache_roundtrip_bit_exact(tmp_path):
    vals = 14.0 + np.cumsum(np.abs(np.sin(np.arange(50))) + 0.05)
    p = write(tmp_path, "\n".join(repr(float(v)) for v in vals))
    t1 = zz.load_zero_file(p)
    cache = tmp_path / "zeros.txt.zvzt"
    assert cache.exists()
    t2 = zz.load_zero_file(p)  # served from cache
    assert np.array_equal(t1.ordinates, t2.ordinates)
    assert t1.ordinates.tobytes() == t2.ordinates.tobytes()


def test_cache_layout(tmp_path):
    p = write(tmp_path, "14.1\n21.0\n")
    t = zz.load_zero_file(p)
    blob = (tmp_path / "zeros.txt.zvzt").read_bytes()
    magic, version, count = struct.unpack_from("<4sHQ", blob, 0)
    assert magic == b"ZVZT"
    assert version == 1
    assert count == 2
    doubles = np.frombuffer(blob, dtype="<f8", count=2, offset=14)
    assert np.array_equal(doubles, t.ordinates)
    assert len(blob) == 14 + 16 + 32
    assert blob[-32:] == bytes.fromhex(t.source.sha256)


def test_cache_invalidated_when_source_changes(tmp_path):
    p = write(tmp_path, "14.1\n21.0\n")
    zz.load_zero_file(p)
    p.write_text("14.1\n21.0\n25.0\n")
    t = zz.load_zero_file(p)
    assert t.count == 3


def test_corrupt_cache_falls_back_to_text(tmp_path):
    p = write(tmp_path, "14.1\n21.0\n")
    zz.load_zero_file(p)
    cache = tmp_path / "zeros.txt.zvzt"
    cache.write_bytes(b"ZVZT" + b"\x00" * 10)
    t = zz.load_zero_file(p)
    assert t.count == 2


def test_stale_cache_not_used_for_changed_source(tmp_path):
    # keep the old cache but corrupt the text: the loader must reparse (and
    # therefore notice the corruption), not silently serve stale ordinates
    p = write(tmp_path, "14.1\n21.0\n")
    zz.load_zero_file(p)
    p.write_text("14.1\nbroken\n")
    with pytest.raises(ParseError):
        zz.load_zero_file(p)


# ----------------------------------------------------------------------------
# counting
# ----------------------------------------------------------------------------

def table123():
    return zz.make_table([1.0, 2.0, 3.0])


def test_count_zeros_half_weight():
    t = table123()
    assert zz.count_zeros(t, 2.0) == 1.5
    assert zz.count_zeros(t, 2.5) == 2.0
    assert zz.count_zeros(t, 0.0) == 0.0
    assert zz.count_zeros(t, 3.0) == 2.5


def test_count_zeros_full_weight_convention():
    t = table123()
    conv = zz.CountConvention(half_weight_at_jump=False)
    assert zz.count_zeros(t, 2.0, conv) == 2.0
    assert zz.count_zeros(t, 3.0, conv) == 3.0


def test_count_zeros_domain():
    t = table123()
    with pytest.raises(CoverageError):
        zz.count_zeros(t, 3.5)
    with pytest.raises(ValueError):
        zz.count_zeros(t, -0.1)


def test_count_zeros_matches_naive_on_random_tables():
    rng = np.random.default_rng(7)
    for _ in range(10):
        ords = np.cumsum(rng.uniform(0.05, 2.0, size=60)) + 0.5
        t = zz.make_table(ords)
        for q in rng.uniform(0.0, t.max_height, size=20):
            naive = float(np.sum(ords <= q))
            assert zz.count_zeros(t, q) == naive  # q never hits an ordinate


def test_smooth_count_reference_points():
    assert zz.smooth_count(TWO_PI) == pytest.approx(-0.125, abs=1e-12)
    assert zz.smooth_count(TWO_PI * np.e) == pytest.approx(0.875, abs=1e-12)


def test_smooth_count_increasing_beyond_2pi():
    t = np.linspace(TWO_PI, 1000.0, 500)
    v = zz.smooth_count(t)
    assert np.all(np.diff(v) > 0)


def test_smooth_count_domain():
    with pytest.raises(ValueError):
        zz.smooth_count(0.0)
    with pytest.raises(ValueError):
        zz.smooth_count(-5.0)


def test_s_of_t():
    t = table123()
    q = 2.5
    assert zz.s_of_t(t, q) == pytest.approx(
        zz.count_zeros(t, q) - zz.smooth_count(q)
    )
    with pytest.raises(ValueError):
        zz.s_of_t(t, 0.5)


# ----------------------------------------------------------------------------
# select_well_separated
# ----------------------------------------------------------------------------

def test_select_conventions():
    # single ordinate exactly at the center: the left edge wins the tie
    t = zz.make_table([4.5])
    assert zz.select_well_separated(t, 4) == 4.0
    # nothing inside [7, 8]: the center is returned by convention
    t2 = zz.make_table([5.0, 6.5, 9.0])
    assert zz.select_well_separated(t2, 7) == 7.5


def test_select_requires_n_at_least_4():
    t = zz.make_table([4.5])
    with pytest.raises(ValueError):
        zz.select_well_separated(t, 3)


def test_select_separation_error_reports_achieved():
    # ordinates packed 0.1 apart across [6, 7]: best gap is ~0.05
    ords = np.arange(5.95, 7.1, 0.1)
    t = zz.make_table(ords)
    with pytest.raises(SeparationError) as exc:
        zz.select_well_separated(t, 6, c=0.5)
    assert 0.0 < exc.value.achieved < 0.5 / np.log(6)


def test_select_invariant_on_random_tables():
    rng = np.random.default_rng(42)
    for _ in range(20):
        n = int(rng.integers(4, 40))
        ords = np.cumsum(rng.uniform(0.3, 1.2, size=80)) + 1.0
        t = zz.make_table(ords)
        try:
            T = zz.select_well_separated(t, n, c=0.4)
        except SeparationError:
            continue
        assert n <= T < n + 1
        assert np.min(np.abs(t.ordinates - T)) >= 0.4 / np.log(n) - 1e-12
