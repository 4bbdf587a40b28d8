"""Auxiliary special functions and quadrature helpers.

The pair-correlation and variance formulas repeatedly use four auxiliary
functions built from integrals against 1/cosh:

    f(u) = u * int_0^inf sinh(y*(1-u)) / cosh(y) dy        (0 < u < 2)
    g(u) = int_0^inf exp(-y) * cosh(u*y) / cosh(y) dy      (|u| < 2)
    h(u) = cos(u) * int_0^inf y / ((y^2 + u^2) cosh y) dy  (u != 0)
    h_hat(a) = pi * g(2*pi*a)   if 2*pi*|a| <= 1,  else  1 / (2*|a|)

with the Fourier convention h_hat(a) = int h(u) exp(-2*pi*i*a*u) du and
k(xi) = h_hat(xi)^2 / pi^2.  They satisfy u*g(u) + f(u) = 1, g(0) = log 2,
g(1) = 1, f(1) = 0, h(pi/2) = 0, |h(u)| <= 2*G/u^2 (G = Catalan's constant),
and the Plancherel identity

    int h^2 = int h_hat^2 = pi * int_0^1 g(v)^2 dv + pi.

f and g are evaluated in closed form.  Expanding 1/cosh(y) as an
alternating geometric series in exp(-2y) and integrating termwise gives

    f(u) = (u/2) * (beta(u/2) - beta(1 - u/2))
    g(u) = (1/2) * (beta(1 - u/2) + beta(1 + u/2))

where beta(x) = sum_{k>=0} (-1)^k / (x + k)
             = (psi((x+1)/2) - psi(x/2)) / 2.

The telescoping identity beta(x) + beta(x + 1) = 1/x makes u*g + f = 1 exact.
The defining integrals are retained as independent test oracles.

h has no elementary closed form and is integrated numerically; it is smooth
away from u = 0, where it has an integrable logarithmic singularity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np
from scipy.integrate import quad
from scipy.special import digamma, sici

from .errors import QuadratureError

__all__ = [
    "EULER_GAMMA",
    "CATALAN",
    "QuadratureSpec",
    "integrate",
    "sine_integral",
    "cosine_integral",
    "cin",
    "f_weight",
    "g_weight",
    "h_weight",
    "h_weight_many",
    "h_hat",
    "k_of",
]

EULER_GAMMA = float(np.euler_gamma)

# Catalan's constant G = sum (-1)^k / (2k+1)^2 = int_0^inf y / (2 cosh y) dy... * 2
CATALAN = 0.9159655941772190150546035149324

_TWO_PI = 2.0 * np.pi


# ----------------------------------------------------------------------------
# generic 1-D quadrature with declared endpoint singularities
# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances and singularity declarations for `integrate`.

    singular_endpoints lists (location, kind) pairs; kind is "logarithmic"
    for an integrable log singularity (handled by the substitution
    t = location +/- exp(-u)) or "none".
    """

    abs_tol: float = 1e-10
    rel_tol: float = 1e-10
    max_subdivisions: int = 200
    singular_endpoints: tuple[tuple[float, str], ...] = field(default=())

    def singularity_at(self, x: float) -> str:
        for loc, kind in self.singular_endpoints:
            if x == loc or abs(x - loc) <= 1e-12 * max(1.0, abs(loc)):
                return kind
        return "none"


def _quad_checked(fn, a, b, spec: QuadratureSpec, what: str):
    with np.errstate(all="ignore"):
        out = quad(
            fn,
            a,
            b,
            epsabs=spec.abs_tol,
            epsrel=spec.rel_tol,
            limit=max(spec.max_subdivisions, 1),
            full_output=1,
        )
    value, err = out[0], out[1]
    if len(out) > 3:  # QUADPACK appended a warning message
        raise QuadratureError(
            f"quadrature failed on {what}: {out[3].splitlines()[0]}",
            best_estimate=value,
            err_est=err,
        )
    return value, err


def integrate(
    fn: Callable[[float], float],
    a: float,
    b: float,
    spec: QuadratureSpec = QuadratureSpec(),
) -> tuple[float, float]:
    """Integrate fn over [a, b] (b may be inf), honoring declared singularities.

    Returns (value, err_est).  Raises QuadratureError (carrying the best
    estimate) if the subdivision budget is exhausted before the tolerance is
    met.  Declared logarithmic endpoints are removed by the substitution
    t = endpoint +/- exp(-u) rather than left for the sampler to discover.
    """
    if not (b > a):
        raise ValueError(f"need b > a, got [{a!r}, {b!r}]")
    sing_a = spec.singularity_at(a) == "logarithmic"
    sing_b = np.isfinite(b) and spec.singularity_at(b) == "logarithmic"
    # After t = endpoint +/- exp(-u) the integrand grows at most like
    # u * exp(-u), so truncating at large u is harmless.  The cap must also
    # keep endpoint +/- exp(-u) representably distinct from the endpoint
    # itself: for a nonzero endpoint L the closest representable neighbor is
    # ~|L|*eps away, which limits u to about -log(8*|L|*eps) (~35 for L of
    # order 1, dropping a tail < 1e-14).
    def _u_cap(endpoint: float) -> float:
        if endpoint == 0.0:
            return 600.0
        return min(600.0, -np.log(8.0 * abs(endpoint) * np.finfo(float).eps))

    pieces: list[tuple[float, float]] = []
    lo, hi = a, b
    if sing_a:
        m = a + min(1.0, (b - a) / 2.0) if np.isfinite(b) else a + 1.0
        u0 = -np.log(m - a)
        pieces.append(
            _quad_checked(
                lambda u: fn(a + np.exp(-u)) * np.exp(-u),
                u0,
                _u_cap(a),
                spec,
                f"[{a:g}, {m:g}] (log endpoint at {a:g})",
            )
        )
        lo = m
    if sing_b:
        m = b - min(1.0, (b - lo) / 2.0)
        u0 = -np.log(b - m)
        pieces.append(
            _quad_checked(
                lambda u: fn(b - np.exp(-u)) * np.exp(-u),
                u0,
                _u_cap(b),
                spec,
                f"[{m:g}, {b:g}] (log endpoint at {b:g})",
            )
        )
        hi = m
    if hi > lo:
        pieces.append(_quad_checked(fn, lo, hi, spec, f"[{lo:g}, {hi:g}]"))

    value = float(sum(p[0] for p in pieces))
    err = float(sum(p[1] for p in pieces))
    return value, err


# ----------------------------------------------------------------------------
# sine / cosine integrals
# ----------------------------------------------------------------------------

def sine_integral(x):
    """Si(x) = int_0^x sin(t)/t dt.  Odd; Si(inf) = pi/2."""
    si, _ = sici(x)
    return si


def cosine_integral(x):
    """Ci(x) = -int_x^inf cos(t)/t dt for x > 0."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0.0):
        raise ValueError("cosine_integral requires x > 0")
    _, ci = sici(x)
    return ci if ci.ndim else float(ci)


def cin(x):
    """Cin(x) = int_0^x (1 - cos t)/t dt = euler_gamma + log x - Ci(x) (x > 0),
    extended evenly through Cin(0) = 0."""
    x = np.abs(np.asarray(x, dtype=float))
    out = np.zeros_like(x)
    nz = x > 0
    if np.any(nz):
        out[nz] = EULER_GAMMA + np.log(x[nz]) - sici(x[nz])[1]
    return out if out.ndim else float(out)


# ----------------------------------------------------------------------------
# the auxiliary weights f, g, h and the transform h_hat
# ----------------------------------------------------------------------------

def _beta_alt(x):
    """beta(x) = sum_{k>=0} (-1)^k/(x+k), via the digamma reflection."""
    return 0.5 * (digamma((x + 1.0) / 2.0) - digamma(x / 2.0))


def f_weight(u):
    """f(u) = u * int_0^inf sinh((1-u) y)/cosh(y) dy for 0 < u < 2.

    f(1) = 0, f(0+) = 1, and u*g(u) + f(u) = 1.
    """
    u = np.asarray(u, dtype=float)
    if np.any((u <= 0.0) | (u >= 2.0)):
        raise ValueError("f_weight requires 0 < u < 2")
    val = 0.5 * u * (_beta_alt(u / 2.0) - _beta_alt(1.0 - u / 2.0))
    return val if val.ndim else float(val)


def g_weight(u):
    """g(u) = int_0^inf e^{-y} cosh(u y)/cosh(y) dy for |u| < 2.

    Even; g(0) = log 2; g(1) = 1.
    """
    u = np.asarray(u, dtype=float)
    if np.any(np.abs(u) >= 2.0):
        raise ValueError("g_weight requires |u| < 2")
    val = 0.5 * (_beta_alt(1.0 - u / 2.0) + _beta_alt(1.0 + u / 2.0))
    return val if val.ndim else float(val)


def _h_y_integral(v: float, spec: QuadratureSpec) -> float:
    """int_0^inf y / ((y^2 + v^2) cosh y) dy for v > 0."""
    # The integrand decays like e^{-y}; beyond y = 60 the tail is < 1e-25.
    cut = 60.0
    if v >= 0.1:
        fn = lambda y: y / ((y * y + v * v) * np.cosh(y))
        pts = [min(v, cut / 2.0)]
    else:
        # For small v the y ~ v turnover is unresolvable directly; integrate
        # by parts instead:  I(v) = -log v + (1/2) int log(y^2+v^2) sech tanh,
        # whose integrand is bounded (log-singular derivative only at 0).
        fn = lambda y: 0.5 * np.log(y * y + v * v) * np.tanh(y) / np.cosh(y)
        pts = [max(v, 1e-8), 0.5]
    with np.errstate(under="ignore"):
        out = quad(
            fn,
            0.0,
            cut,
            points=pts,
            epsabs=spec.abs_tol * 0.1,
            epsrel=spec.rel_tol * 0.1,
            limit=max(spec.max_subdivisions, 50),
            full_output=1,
        )
    if len(out) > 3:
        raise QuadratureError(
            f"h_weight inner integral failed at v={v:g}",
            best_estimate=out[0],
            err_est=out[1],
        )
    return out[0] if v >= 0.1 else out[0] - np.log(v)


def h_weight(u, spec: QuadratureSpec = QuadratureSpec()):
    """h(u) = cos(u) * int_0^inf y / ((y^2 + u^2) cosh y) dy for u != 0.

    Even, with an integrable logarithmic singularity at u = 0;
    h(pi/2) = 0 and |h(u)| <= 2*CATALAN/u^2.
    """
    u_arr = np.atleast_1d(np.asarray(u, dtype=float))
    if np.any(u_arr == 0.0):
        raise ValueError("h_weight is singular at u = 0")
    vals = np.array(
        [np.cos(v) * _h_y_integral(abs(v), spec) for v in u_arr]
    )
    return vals if np.asarray(u).ndim else float(vals[0])


def h_weight_many(u: Sequence[float], tol: float = 1e-10) -> np.ndarray:
    """Vectorized h over an array of nonzero u, sharing one adaptive pass.

    Useful when h is needed at hundreds of points (e.g. summing over zero
    ordinates); the inner y-integral is evaluated for all u simultaneously.
    """
    from scipy.integrate import quad_vec

    u = np.asarray(u, dtype=float)
    if np.any(u == 0.0):
        raise ValueError("h_weight_many is singular at u = 0")
    v2 = u * u

    def integrand(y: float) -> np.ndarray:
        return (y / np.cosh(y)) / (y * y + v2)

    val, _ = quad_vec(integrand, 0.0, 60.0, epsabs=tol, epsrel=tol)
    return np.cos(u) * val


def h_hat(a):
    """Fourier transform of h:  pi*g(2*pi*a) on 2*pi*|a| <= 1, else 1/(2|a|).

    Continuous across the seam (both branches give pi there).
    """
    a = np.asarray(a, dtype=float)
    scalar = a.ndim == 0
    a = np.atleast_1d(a)
    out = np.empty_like(a)
    inner = _TWO_PI * np.abs(a) <= 1.0
    out[inner] = np.pi * g_weight(_TWO_PI * a[inner])
    out[~inner] = 0.5 / np.abs(a[~inner])
    return float(out[0]) if scalar else out


def k_of(xi):
    """k(xi) = h_hat(xi)^2 / pi^2;  k(0) = log(2)^2."""
    v = h_hat(xi)
    return (v * v) / (np.pi * np.pi)


# ----------------------------------------------------------------------------
# Gauss-Legendre panel helper (shared by the variance sweeps)
# ----------------------------------------------------------------------------

@lru_cache(maxsize=None)
def leggauss_cached(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights for n-point Gauss-Legendre on [-1, 1]."""
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w
