"""Generate tables of zeta-zero ordinates by scanning Z(t) for sign changes.

Internal support for tests, demos and the command line: not part of the
library's documented surface.  The scan step is a fixed fraction of the
local mean spacing; every block's crossing count is checked against the
smooth counting function (the scan is rerun at a much finer step whenever
the two disagree by more than the plausible fluctuation), and crossings
are then sharpened by vectorized bisection.
"""

from __future__ import annotations

import math

import numpy as np

from .zeta import rs_theta, rs_z, zeta_em

_TWO_PI = 2.0 * math.pi
_EM_CUTOFF = 200.0  # below this, Riemann-Siegel corrections are weak


def z_on_grid(t: np.ndarray) -> np.ndarray:
    """Z(t) with the evaluator picked per point (Euler-Maclaurin low,
    Riemann-Siegel high)."""
    t = np.asarray(t, dtype=np.float64)
    out = np.empty_like(t)
    hi = t >= _EM_CUTOFF
    if hi.any():
        out[hi] = rs_z(t[hi], n_corrections=3)
    if (~hi).any():
        tt = t[~hi]
        out[~hi] = np.real(np.exp(1j * rs_theta(tt)) * zeta_em(0.5 + 1j * tt))
    return out


def _scan(a: float, b: float, per_spacing: int):
    """Sign-change brackets of Z on [a, b], step = spacing(b)/per_spacing."""
    step = (_TWO_PI / math.log(b / _TWO_PI)) / per_spacing
    n = max(2, int(math.ceil((b - a) / step)))
    grid = np.linspace(a, b, n + 1)
    z = z_on_grid(grid)
    flip = np.flatnonzero(np.signbit(z[:-1]) != np.signbit(z[1:]))
    return grid[flip], grid[flip + 1], z[flip]


def _expected_count(a: float, b: float) -> float:
    return (float(rs_theta(b)) - float(rs_theta(a))) / math.pi


def _bisect(lows, highs, z_low, iterations: int = 36):
    lows = lows.copy()
    highs = highs.copy()
    neg_l = z_low < 0.0
    for _ in range(iterations):
        mids = 0.5 * (lows + highs)
        zm = z_on_grid(mids)
        neg_m = zm < 0.0
        move_high = neg_l != neg_m
        highs[move_high] = mids[move_high]
        keep = ~move_high
        lows[keep] = mids[keep]
        neg_l[keep] = neg_m[keep]
    return 0.5 * (lows + highs)


def generate_ordinates(
    t_max: float = 74_930.0,
    n_stop: int | None = 100_000,
    block: float = 2_000.0,
    per_spacing: int = 64,
) -> np.ndarray:
    """Ordinates of the zeros of Z up to t_max (at most n_stop of them)."""
    if t_max <= 15.0:
        raise ValueError("t_max too small to contain any zeros")
    edges = [12.0]
    while edges[-1] < t_max:
        edges.append(min(edges[-1] + block, t_max))
    all_lo, all_hi, all_zl = [], [], []
    for a, b in zip(edges[:-1], edges[1:]):
        lo, hi, zl = _scan(a, b, per_spacing)
        expected = _expected_count(a, b)
        if abs(len(lo) - expected) > 1.0:
            lo, hi, zl = _scan(a, b, per_spacing * 8)
            if abs(len(lo) - expected) > 2.5:
                raise RuntimeError(
                    f"zero scan on [{a:g}, {b:g}] found {len(lo)} crossings "
                    f"but the counting function promises ~{expected:.2f}"
                )
        all_lo.append(lo)
        all_hi.append(hi)
        all_zl.append(zl)
    lows = np.concatenate(all_lo)
    highs = np.concatenate(all_hi)
    z_low = np.concatenate(all_zl)
    ordinates = _bisect(lows, highs, z_low)
    if np.any(np.diff(ordinates) <= 0.0):
        raise RuntimeError("bisection produced a non-increasing sequence")
    if n_stop is not None:
        ordinates = ordinates[:n_stop]
    return ordinates


def write_table(path, ordinates: np.ndarray) -> None:
    """Plain text, one ordinate per line, '#' header (no timestamps)."""
    with open(path, "w") as fh:
        fh.write("# zeta zero ordinates, sign-scan + bisection on Z(t)\n")
        fh.write(f"# count = {len(ordinates)}\n")
        fh.write(f"# max = {ordinates[-1]:.10f}\n")
        for g in ordinates:
            fh.write(f"{g:.10f}\n")
