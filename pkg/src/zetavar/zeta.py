"""Critical-line evaluation: theta(t), Z(t), and log|zeta(1/2+it)|.

The hot path is the Riemann-Siegel formula

    Z(t) = 2 sum_{n <= a} cos(theta(t) - t log n)/sqrt(n)
           + (-1)^{N+1} (t/2pi)^{-1/4} sum_{j<=n_corr} C_j(z) (t/2pi)^{-j/2}

with a = sqrt(t/2pi), N = floor(a), z = 2(a - N) - 1, and correction
functions C0..C4 evaluated from frozen Taylor tables (_rs_coeffs.py).  The
truncation envelope after n corrections scales like (t/2pi)^{-(2n+3)/4}.

theta(t) is computed from the Stirling series of log Gamma(1/4 + it/2);
with seven Bernoulli terms the remainder is below 1e-12 for t >= 10.

An Euler-Maclaurin zeta(s) is also provided: it is the independent test
oracle for Z, covers t < 10 where the Riemann-Siegel expansion is invalid,
and supplies zeta on vertical lines Re(s) >= 2 for prime-side constants.
It is never used on the t >= 10 hot path.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import bernoulli

from . import _rs_coeffs
from .errors import ZeroProximityError
from .zeros import ZeroTable

__all__ = [
    "CriticalLineSample",
    "rs_theta",
    "rs_z",
    "rs_z_envelope",
    "log_abs_zeta_half",
    "critical_line_sample",
    "zeta_em",
    "log_abs_zeta_em",
]

_TWO_PI = 2.0 * np.pi

# B_2, B_4, ..., B_28
_B2K = bernoulli(28)[2::2]

# growing caches of log n and 1/sqrt(n) for the main sum
_LOG_N = np.log(np.arange(1, 64, dtype=np.float64))
_RSQRT_N = 1.0 / np.sqrt(np.arange(1, 64, dtype=np.float64))


def _ensure_n_cache(nmax: int) -> None:
    global _LOG_N, _RSQRT_N
    if nmax > _LOG_N.size:
        n = np.arange(1, max(nmax, 2 * _LOG_N.size) + 1, dtype=np.float64)
        _LOG_N = np.log(n)
        _RSQRT_N = 1.0 / np.sqrt(n)


@dataclass(frozen=True)
class CriticalLineSample:
    t: float
    z_value: float
    log_abs_zeta: float
    correction_terms_used: int


def rs_theta(t):
    """theta(t) = Im log Gamma(1/4 + i t/2) - (t/2) log pi, for t >= 10.

    Increasing on [10, inf); theta'(t) = (1/2) log(t/2pi) + O(1/t^2) > 0.
    """
    t_arr = np.asarray(t, dtype=np.float64)
    if np.any(t_arr < 10.0):
        raise ValueError("rs_theta requires t >= 10")
    z = 0.25 + 0.5j * t_arr
    series = np.zeros_like(z)
    zpow = z  # z^(2n-1)
    z2 = z * z
    for n, b in enumerate(_B2K[:7], start=1):
        series += b / ((2 * n) * (2 * n - 1) * zpow)
        zpow = zpow * z2
    logg = (z - 0.5) * np.log(z) - z + series
    val = logg.imag - 0.5 * t_arr * np.log(np.pi)
    return val if val.ndim else float(val)


def _rs_blocks(t_arr: np.ndarray, n_corrections: int) -> np.ndarray:
    a = np.sqrt(t_arr / _TWO_PI)
    N = np.floor(a).astype(np.int64)
    z = 2.0 * (a - N) - 1.0
    nmax = int(N.max())
    _ensure_n_cache(nmax)

    theta = rs_theta(t_arr)
    out = np.zeros_like(t_arr)
    # main sum, blocked to bound the (len block) x nmax matrices
    block = max(1, int(2_000_000 // max(nmax, 1)))
    for lo in range(0, t_arr.size, block):
        hi = min(lo + block, t_arr.size)
        nm = int(N[lo:hi].max())
        logn = _LOG_N[:nm][None, :]
        args = theta[lo:hi, None] - t_arr[lo:hi, None] * logn
        terms = np.cos(args) * _RSQRT_N[:nm][None, :]
        mask = np.arange(1, nm + 1)[None, :] <= N[lo:hi, None]
        out[lo:hi] = 2.0 * np.sum(terms, axis=1, where=mask)

    # correction terms
    x = t_arr / _TWO_PI
    corr = np.zeros_like(t_arr)
    for j in range(n_corrections + 1):
        cj = np.polynomial.polynomial.polyval(z, _rs_coeffs.TABLES[j])
        corr += cj * x ** (-0.5 * j)
    sign = np.where(N % 2 == 1, 1.0, -1.0)  # (-1)^(N+1)
    out += sign * x ** (-0.25) * corr
    return out


def rs_z(t, n_corrections: int = 4):
    """Riemann-Siegel Z(t) for t >= 10 with 0..4 correction terms.

    Z(t) = exp(i theta(t)) zeta(1/2 + it) is real; its sign changes exactly
    at the ordinates of the critical-line zeros.
    """
    if not 0 <= int(n_corrections) <= 4:
        raise ValueError("n_corrections must be between 0 and 4")
    t_arr = np.atleast_1d(np.asarray(t, dtype=np.float64))
    if np.any(t_arr < 10.0):
        raise ValueError("rs_z requires t >= 10 (use zeta_em below that)")
    out = _rs_blocks(t_arr, int(n_corrections))
    return out if np.asarray(t).ndim else float(out[0])


def rs_z_envelope(t, n_corrections: int = 4):
    """Shape of the truncation error after n corrections: (t/2pi)^-(2n+3)/4.

    The proportionality constant is of order one; the envelope is reported
    for scaling decisions, not as a certified bound.
    """
    t = np.asarray(t, dtype=float)
    val = (t / _TWO_PI) ** (-(2 * int(n_corrections) + 3) / 4.0)
    return val if val.ndim else float(val)


def log_abs_zeta_half(
    t: float,
    table: ZeroTable | None = None,
    n_corrections: int = 4,
) -> float:
    """log |zeta(1/2 + it)| = log |Z(t)| for t >= 10.

    If a zero table is supplied, requests within 1e-8 of a tabulated
    ordinate raise ZeroProximityError (the value is -inf there); without a
    table only an exactly vanishing Z is rejected.
    """
    t = float(t)
    if t < 10.0:
        raise ValueError("log_abs_zeta_half requires t >= 10")
    if table is not None and table.count:
        ords = table.ordinates
        i = int(np.searchsorted(ords, t))
        near = min(
            abs(t - ords[j]) for j in (max(0, i - 1), min(ords.size - 1, i))
        )
        if near <= 1e-8:
            raise ZeroProximityError(t, f"within {near:.2e} of an ordinate")
    z = rs_z(t, n_corrections)
    if z == 0.0:
        raise ZeroProximityError(t, "Z(t) vanished at float precision")
    return float(np.log(abs(z)))


def critical_line_sample(
    t: float,
    table: ZeroTable | None = None,
    n_corrections: int = 4,
) -> CriticalLineSample:
    la = log_abs_zeta_half(t, table=table, n_corrections=n_corrections)
    return CriticalLineSample(
        t=float(t),
        z_value=rs_z(t, n_corrections),
        log_abs_zeta=la,
        correction_terms_used=int(n_corrections),
    )


# ----------------------------------------------------------------------------
# Euler-Maclaurin zeta (oracle; also the t < 10 evaluator and the
# vertical-line zeta used by prime-side constants)
# ----------------------------------------------------------------------------

def zeta_em(s, n_terms: int | None = None, n_bernoulli: int = 12):
    """zeta(s) by Euler-Maclaurin summation.

        zeta(s) = sum_{n<N} n^-s + N^-s/2 + N^(1-s)/(s-1)
                  + sum_{k<=K} B_2k/(2k)! (s)_{2k-1} N^(-s-2k+1)

    Accurate to ~1e-13 for Re(s) > -1 once N >~ 1.3 |Im s| + 20; the
    remainder falls off like ((|s|+2K)/(2 pi N))^(2K).
    """
    s_arr = np.atleast_1d(np.asarray(s, dtype=np.complex128))
    if np.any(np.abs(s_arr - 1.0) < 1e-12):
        raise ValueError("zeta_em: pole at s = 1")
    K = int(n_bernoulli)
    if not 1 <= K <= 14:
        raise ValueError("n_bernoulli must be in [1, 14]")
    if n_terms is None:
        n_terms = int(np.ceil(20 + 1.3 * float(np.max(np.abs(s_arr.imag)))))
    N = max(int(n_terms), K + 2)

    n = np.arange(1, N, dtype=np.float64)
    # sum over n < N of n^-s, vectorized over the s batch
    out = np.sum(np.exp(-np.multiply.outer(s_arr, np.log(n))), axis=-1)
    Nf = float(N)
    out += 0.5 * Nf ** (-s_arr)
    out += Nf ** (1.0 - s_arr) / (s_arr - 1.0)

    poch = s_arr.copy()  # (s)_1
    fact = 1.0
    npow = Nf ** (-s_arr - 1.0)
    for k in range(1, K + 1):
        fact *= (2 * k) * (2 * k - 1)
        out += _B2K[k - 1] / fact * poch * npow
        if k < K:
            poch = poch * (s_arr + 2 * k - 1) * (s_arr + 2 * k)
            npow = npow / (Nf * Nf)
    return out if np.asarray(s).ndim else complex(out[0])


def log_abs_zeta_em(t):
    """log |zeta(1/2 + it)| via Euler-Maclaurin; any t >= 0 off the zeros."""
    t_arr = np.atleast_1d(np.asarray(t, dtype=np.float64))
    vals = zeta_em(0.5 + 1j * t_arr)
    mag = np.abs(vals)
    out = np.log(np.maximum(mag, 1e-300))
    return out if np.asarray(t).ndim else float(out[0])
