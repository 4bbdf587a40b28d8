"""Shared fixtures: the large generated zero table and prime tables."""

import pathlib

import numpy as np
import pytest

from zetavar.primes import sieve_mangoldt
from zetavar.zeros import load_zero_file

_REPO = pathlib.Path(__file__).resolve().parent.parent
_ZERO_FILE = _REPO / "var" / "zeros_100k.txt"

_FIRST_THREE = (14.134725142, 21.022039639, 25.010857580)


@pytest.fixture(scope="session")
def riemann_table():
    """First ~1e5 zero ordinates, generated once and cached on disk."""
    if not _ZERO_FILE.exists():
        from zetavar._zerogen import generate_ordinates, write_table

        _ZERO_FILE.parent.mkdir(exist_ok=True)
        write_table(_ZERO_FILE, generate_ordinates())
    table = load_zero_file(_ZERO_FILE)
    assert table.count >= 100_000
    assert np.allclose(table.ordinates[:3], _FIRST_THREE, atol=5e-9)
    return table


@pytest.fixture(scope="session")
def mangoldt_1e5():
    return sieve_mangoldt(100_000)


@pytest.fixture(scope="session")
def mangoldt_1e6():
    return sieve_mangoldt(1_000_000)
