"""Tests for the sign-scan zero generator (small heights only)."""

import numpy as np
import pytest

from zetavar._zerogen import generate_ordinates, write_table
from zetavar.zeros import load_zero_file

FIRST_TEN = [
    14.134725142,
    21.022039639,
    25.010857580,
    30.424876126,
    32.935061588,
    37.586178159,
    40.918719012,
    43.327073281,
    48.005150881,
    49.773832478,
]


def test_first_ten(tmp_path):
    g = generate_ordinates(t_max=52.0, n_stop=10, block=20.0)
    assert g.size == 10
    assert np.allclose(g, FIRST_TEN, atol=5e-9)
    # round-trip through the table format
    path = tmp_path / "ten.txt"
    write_table(path, g)
    tab = load_zero_file(path)
    assert np.array_equal(tab.ordinates, np.round(g, 10))


def test_n_stop_truncates():
    g = generate_ordinates(t_max=60.0, n_stop=3, block=60.0)
    assert g.size == 3


def test_strictly_increasing():
    g = generate_ordinates(t_max=120.0, n_stop=10**9, block=40.0)
    assert np.all(np.diff(g) > 0.0)
    # count up to 100 is a classical tally
    assert np.count_nonzero(g <= 100.0) == 29
