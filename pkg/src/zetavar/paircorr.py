"""Pair-correlation sums over zeros: F(alpha), its shifted variant, tails.

The central object is the windowed pair sum

    (2 pi / (T log T)) * sum_{0 < gamma, gamma' <= T, |u| <= window}
        T^(i alpha u) w(u),      u = gamma - gamma' - delta,

with w(u) = 4/(4+u^2) (or the sigma0 variant).  Dropped pairs with
|u| > window are bounded rigorously from the table itself: the first 16
unit bands past the window edge are counted exactly, and everything beyond
is bounded by (max zeros in any unit interval) * (integrated weight tail).

The engine partitions the zero indices into fixed 512-wide blocks.  Each
block builds its pair set once and sweeps all alphas of a uniform grid by
phase recurrence (one complex multiply per pair per alpha); block partials
are combined in index order, so results are bit-identical for any worker
count (ZETAVAR_THREADS).
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import CoverageError
from .special import sine_integral
from .zeros import ZeroTable

__all__ = [
    "PairCorrelationEstimate",
    "weight_w",
    "f_delta",
    "f_sigma0",
    "gm_asymptotic",
    "chan_approx",
    "chan_error_budget",
    "chan_conjecture",
    "tail_integral",
    "tail_conjectural",
    "fujii_reduction_check",
]

_BLOCK = 512
_SPLIT = 134217729.0  # 2^27 + 1 (Veltkamp)


@dataclass(frozen=True)
class PairCorrelationEstimate:
    alpha: float
    delta: float
    T: float
    value: complex
    truncation_bound: float
    pairs_used: int
    window: float


def weight_w(u):
    """Montgomery's weight w(u) = 4/(4+u^2)."""
    u = np.asarray(u, dtype=np.float64)
    val = 4.0 / (4.0 + u * u)
    return val if val.ndim else float(val)


def _thread_count() -> int:
    try:
        return max(1, int(os.environ.get("ZETAVAR_THREADS", "1")))
    except ValueError:
        return 1


def _phase(scale: float, u: np.ndarray, compensated: bool) -> np.ndarray:
    """exp(i * scale * u), with a two-product correction when requested."""
    if not compensated:
        return np.exp(1j * (scale * u))
    hi = scale * u
    ah = _SPLIT * scale
    ah = ah - (ah - scale)
    al = scale - ah
    bh = _SPLIT * u
    bh = bh - (bh - u)
    bl = u - bh
    lo = ((ah * bh - hi) + ah * bl + al * bh) + al * bl
    return np.exp(1j * hi) * (1.0 + 1j * lo)


def _pair_sweep(
    g: np.ndarray,
    logT: float,
    delta: float,
    window: float,
    weight_a: float,
    alphas: np.ndarray,
    compensated: bool,
) -> tuple[np.ndarray, int]:
    """Sum T^(i alpha u) w(u) over in-window ordered pairs, all alphas."""
    n = g.size
    n_alpha = alphas.size
    dalpha = float(alphas[1] - alphas[0]) if n_alpha > 1 else 0.0

    def block(i0: int) -> tuple[np.ndarray, int]:
        i1 = min(i0 + _BLOCK, n)
        centers = g[i0:i1] - delta
        lo = np.searchsorted(g, centers - window, side="left")
        hi = np.searchsorted(g, centers + window, side="right")
        counts = hi - lo
        m = int(counts.sum())
        out = np.zeros(n_alpha, dtype=np.complex128)
        if m == 0:
            return out, 0
        reps = np.repeat(np.arange(counts.size), counts)
        starts = np.concatenate(([0], np.cumsum(counts[:-1])))
        jj = np.arange(m) - np.repeat(starts, counts) + np.repeat(lo, counts)
        u = centers[reps] - g[jj]
        ph = _phase(float(alphas[0]) * logT, u, compensated)
        ph *= weight_a / (weight_a + u * u)
        out[0] = ph.sum()
        if n_alpha > 1:
            step = _phase(dalpha * logT, u, compensated)
            for k in range(1, n_alpha):
                ph *= step
                out[k] = ph.sum()
        return out, m

    offsets = list(range(0, n, _BLOCK))
    workers = _thread_count()
    if workers > 1 and len(offsets) > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(block, offsets))
    else:
        results = [block(i0) for i0 in offsets]

    total = np.zeros(n_alpha, dtype=np.complex128)
    pairs = 0
    for part, m in results:  # fixed order: deterministic for any pool size
        total += part
        pairs += m
    return total, pairs


def _truncation_bound(
    g: np.ndarray,
    delta: float,
    window: float,
    weight_a: float,
    prefactor: float,
    n_exact: int = 16,
) -> float:
    """Rigorous bound on the dropped |u| > window contribution.

    Unit bands [window+k, window+k+1) on both sides are counted exactly
    for k < n_exact; beyond that, any unit interval holds at most `dmax`
    zeros (the max is attained at an interval starting at a zero), and the
    band weights are dominated by the integral of weight_a/u^2.
    """
    n = g.size
    if n == 0:
        return 0.0
    dmax = int(np.max(np.searchsorted(g, g + 1.0, side="left") - np.arange(n)))
    centers = g - delta
    total = 0.0
    for k in range(n_exact):
        b = window + k
        wmax = weight_a / (weight_a + b * b)
        right = int(
            np.sum(
                np.searchsorted(g, centers + b + 1.0, side="left")
                - np.searchsorted(g, centers + b, side="left")
            )
        )
        left = int(
            np.sum(
                np.searchsorted(g, centers - b, side="right")
                - np.searchsorted(g, centers - b - 1.0, side="right")
            )
        )
        total += (right + left) * wmax
    total += 2.0 * n * dmax * weight_a / (window + n_exact - 1.0)
    return prefactor * total


def _prepare(table: ZeroTable, T: float, window: float | None):
    T = float(T)
    if T < 4.0:
        raise ValueError("requires T >= 4")
    if T > table.max_height:
        raise CoverageError(
            required=T, available=table.max_height, what="zero table height"
        )
    g = table.ordinates[: int(np.searchsorted(table.ordinates, T, "right"))]
    logT = math.log(T)
    if window is None:
        window = 200.0 * 2.0 * math.pi / math.log(T / (2.0 * math.pi))
    window = float(window)
    if window <= 2.0:
        raise ValueError("window must exceed 2 (diagonal band)")
    return g, T, logT, window


def _estimate(
    table: ZeroTable,
    alphas: np.ndarray,
    delta: float,
    T: float,
    window: float | None,
    weight_a: float,
) -> tuple[np.ndarray, float, int, float]:
    g, T, logT, window = _prepare(table, T, window)
    prefactor = 2.0 * math.pi / (T * logT)
    sums, pairs = _pair_sweep(
        g, logT, float(delta), window, weight_a, alphas, compensated=T >= 1e6
    )
    bound = _truncation_bound(g, float(delta), window, weight_a, prefactor)
    return prefactor * sums, bound, pairs, window


def f_delta(
    table: ZeroTable,
    alpha: float,
    delta: float,
    T: float,
    window: float | None = None,
) -> PairCorrelationEstimate:
    """Windowed pair-correlation sum; delta = 0 is Montgomery's F(alpha).

    Satisfies conj(F_delta(alpha)) = F_delta(-alpha) = F_(-delta)(alpha)
    up to truncation, and F_0 is real and nonnegative.
    """
    vals, bound, pairs, window = _estimate(
        table, np.array([float(alpha)]), delta, T, window, weight_a=4.0
    )
    return PairCorrelationEstimate(
        alpha=float(alpha),
        delta=float(delta),
        T=float(T),
        value=complex(vals[0]),
        truncation_bound=bound,
        pairs_used=pairs,
        window=window,
    )


def f_sigma0(
    table: ZeroTable,
    alpha: float,
    T: float,
    sigma0: float,
    window: float | None = None,
) -> PairCorrelationEstimate:
    """Pair sum with weight 4 sigma0^2/(4 sigma0^2 + u^2); sigma0 = 1
    reproduces f_delta(..., delta=0, ...) exactly.  Real and nonnegative
    up to truncation, and even in alpha."""
    sigma0 = float(sigma0)
    if not 0.5 < sigma0 < 1.5:
        raise ValueError("sigma0 must lie in (1/2, 3/2)")
    vals, bound, pairs, window = _estimate(
        table,
        np.array([float(alpha)]),
        0.0,
        T,
        window,
        weight_a=4.0 * sigma0 * sigma0,
    )
    return PairCorrelationEstimate(
        alpha=float(alpha),
        delta=0.0,
        T=float(T),
        value=complex(vals[0]),
        truncation_bound=bound,
        pairs_used=pairs,
        window=window,
    )


# ----------------------------------------------------------------------------
# closed-form approximations
# ----------------------------------------------------------------------------

def gm_asymptotic(alpha: float, T: float) -> float:
    """Main term T^(-2 alpha) log T + alpha, valid for 0 <= alpha <= 1."""
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise ValueError("gm_asymptotic requires 0 <= alpha <= 1")
    if T <= 1.0:
        raise ValueError("requires T > 1")
    return T ** (-2.0 * alpha) * math.log(T) + alpha


def chan_approx(alpha: float, delta: float, T: float) -> complex:
    """Main terms T^(-2 alpha) log T + alpha w(delta) T^(-i alpha delta),
    for 0 <= alpha <= 1 (see chan_error_budget for the dropped terms)."""
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise ValueError("chan_approx requires 0 <= alpha <= 1")
    if T <= 1.0:
        raise ValueError("requires T > 1")
    logT = math.log(T)
    rot = np.exp(-1j * alpha * delta * logT)
    return T ** (-2.0 * alpha) * logT + alpha * weight_w(delta) * rot


def chan_error_budget(
    alpha: float,
    delta: float,
    T: float,
    epsilon: float = 0.05,
    constants: tuple[float, float, float] = (1.0, 1.0, 1.0),
) -> tuple[float, float, float]:
    """Shapes of the three dropped terms in chan_approx, with configurable
    constants: (1/sqrt(log T), T^(-2 alpha), (|delta|+1) T^(-alpha(1/2-eps))
    / log T).  Not rigorous - the true constants are unspecified."""
    logT = math.log(T)
    c1, c2, c3 = constants
    return (
        c1 / math.sqrt(logT),
        c2 * T ** (-2.0 * alpha),
        c3 * (abs(delta) + 1.0) * T ** (-alpha * (0.5 - epsilon)) / logT,
    )


def chan_conjecture(alpha: float, delta: float, T: float) -> complex:
    """Conjectural plateau T^(-i alpha delta) w(delta) for |alpha| >= 1.

    Diagnostic only; delta = 0 recovers the classical plateau F ~ 1.
    """
    alpha = float(alpha)
    if abs(alpha) < 1.0:
        raise ValueError("chan_conjecture requires |alpha| >= 1")
    return complex(
        weight_w(delta) * np.exp(-1j * alpha * delta * math.log(T))
    )


# ----------------------------------------------------------------------------
# tail integrals over alpha > 1
# ----------------------------------------------------------------------------

def _simpson(y: np.ndarray, h: float) -> float:
    return h / 3.0 * float(y[0] + y[-1] + 4.0 * y[1::2].sum() + 2.0 * y[2:-1:2].sum())


def _grid(alpha_max: float, n_grid: int) -> np.ndarray:
    if alpha_max <= 1.0:
        raise ValueError("alpha_max must exceed 1")
    n = int(n_grid)
    if n < 16:
        raise ValueError("n_grid must be at least 16")
    if n % 2 == 0:
        n += 1  # composite Simpson needs an odd point count
    return np.linspace(1.0, float(alpha_max), n)


def _tail_pieces(
    table: ZeroTable,
    delta: float,
    T: float,
    alpha_max: float,
    n_grid: int,
    window: float | None,
):
    alphas = _grid(alpha_max, n_grid)
    h = float(alphas[1] - alphas[0])
    vals_d, bound_d, _, _ = _estimate(table, alphas, delta, T, window, 4.0)
    vals_0, bound_0, _, _ = _estimate(table, alphas, 0.0, T, window, 4.0)
    return alphas, h, vals_d, vals_0, bound_d + bound_0


def _simpson_with_err(y: np.ndarray, h: float) -> tuple[float, float]:
    val = _simpson(y, h)
    if (y.size - 1) % 4 == 0:
        disc = abs(val - _simpson(y[::2], 2.0 * h))
    else:
        disc = abs(val - float(np.trapezoid(y, dx=h)))
    return val, disc


def tail_integral(
    table: ZeroTable,
    delta: float,
    T: float,
    alpha_max: float,
    n_grid: int = 65,
    window: float | None = None,
) -> tuple[float, float]:
    """(1/2) int_1^alpha_max (2F(alpha) - 2 Re F_delta(alpha))/alpha^2
    d alpha, with err_est combining pair-truncation bounds (the phase has
    unit modulus, so the per-point bound is alpha-independent) and a
    Simpson refinement estimate.  The integrand is nonnegative up to
    truncation error; delta = 0 gives 0 identically.  The conjectural
    alpha > alpha_max remainder is NOT included (see tail_conjectural).
    """
    alphas, h, vals_d, vals_0, bound = _tail_pieces(
        table, delta, T, alpha_max, n_grid, window
    )
    y = (vals_0.real - vals_d.real) / alphas**2
    val, disc = _simpson_with_err(y, h)
    err = disc + bound * (1.0 - 1.0 / float(alpha_max))
    return val, err


def f_tail_estimate(
    table: ZeroTable,
    T: float,
    alpha_max: float = 4.0,
    n_grid: int = 65,
    window: float | None = None,
) -> tuple[float, float]:
    """int_1^alpha_max F(alpha)/alpha^2 dalpha from the data, with err_est.

    This is the quantity the second-moment coefficient consumes; under
    the plateau conjecture the missing alpha > alpha_max remainder is
    exactly 1/alpha_max (add it yourself if you want the conjectural
    completion).
    """
    alphas = _grid(alpha_max, n_grid)
    h = float(alphas[1] - alphas[0])
    vals, bound, _, _ = _estimate(table, alphas, 0.0, T, window, 4.0)
    y = vals.real / alphas**2
    val, disc = _simpson_with_err(y, h)
    err = disc + bound * (1.0 - 1.0 / float(alpha_max))
    return val, err


def tail_conjectural(delta: float, T: float, alpha_max: float) -> float:
    """Estimate of the alpha > alpha_max remainder ASSUMING the plateau
    conjecture F_delta ~ T^(-i alpha delta) w(delta) for |alpha| >= 1:

        int_A^inf (1 - cos(alpha delta log T) w(delta))/alpha^2 d alpha.

    Conjectural; reported separately from tail_integral's rigorous parts.
    """
    A = float(alpha_max)
    if A <= 1.0:
        raise ValueError("alpha_max must exceed 1")
    if delta == 0.0:
        return 0.0
    c = abs(delta) * math.log(T)
    cos_part = math.cos(c * A) / A - c * (
        math.pi / 2.0 - sine_integral(c * A)
    )
    return 1.0 / A - float(weight_w(delta)) * cos_part


def fujii_reduction_check(
    table: ZeroTable,
    delta: float,
    T: float,
    alpha_max: float,
    window: float | None = None,
    n_grid: int = 65,
) -> tuple[float, float]:
    """Compare the tail integral against its F-only reduction

        rhs = int_1^alpha_max F(alpha)(1 - cos(delta alpha log T))/alpha^2,

    on the same grid; their gap is O(delta) for bounded delta (enforced
    |delta| <= 10).  Returns (lhs, rhs)."""
    if abs(delta) > 10.0:
        raise ValueError("fujii_reduction_check expects |delta| <= 10")
    alphas, h, vals_d, vals_0, _ = _tail_pieces(
        table, delta, T, alpha_max, n_grid, window
    )
    lhs = _simpson((vals_0.real - vals_d.real) / alphas**2, h)
    logT = math.log(float(T))
    rhs = _simpson(
        vals_0.real * (1.0 - np.cos(delta * alphas * logT)) / alphas**2, h
    )
    return lhs, rhs
