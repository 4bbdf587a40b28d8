"""Prime-side quantities: von Mangoldt sums, prime-power constants, c(v).

Everything here is driven by a sieved table of Lambda(n).  The slowly
convergent sums over primes (prime_square_constant, c_tilde) are evaluated
through the prime zeta function P(s) = sum_p p^-s = sum_k mu(k)/k log
zeta(ks), which converges geometrically; direct double sums over sieved
primes remain available to the tests as independent oracles.

c(v) arises from writing the variance prime sum as a Stieltjes integral
against psi2(y) = sum_{n<=y} Lambda^2(n) and integrating the remainder
E(y) = psi2(y) - y log y + y by parts:

    sum_{n<=T} Lambda^2(n)/(n log^2 n) (1 - cos(v log n))
        = Cin(v log T) + c(v) + o(1),
    c(v) = int_1^inf E(y)/(y^2 log^3 y)
               * [-vL sin(vL) + (1 - cos(vL))(L + 2)] dy  -  v^2/2,

with L = log y.  On [1, 2) the closed form E(y) = y - y log y makes the
integrand analytic at y = 1 (limit v^2/2); the module integrates that
segment in the variable u = log y with a series-stabilised bracket.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .errors import CoverageError
from .special import EULER_GAMMA, QuadratureSpec, integrate, leggauss_cached
from .zeta import zeta_em

__all__ = [
    "MangoldtTable",
    "sieve_mangoldt",
    "prime_variance_sum",
    "mertens_sum",
    "prime_square_constant",
    "c_tilde",
    "e_of",
    "c_of",
    "goldston_a",
    "log_deriv_zeta_one_line",
    "one_line_error_budget",
    "keating_bracket",
]


@dataclass(frozen=True)
class MangoldtTable:
    """Immutable table of Lambda(n) for 1 <= n <= n_max.

    `lam[n]` is Lambda(n) (index 0 unused); the prime-power arrays list the
    support of Lambda in increasing n, with pp_n = pp_p ** pp_m.
    """

    n_max: int
    lam: np.ndarray
    pp_n: np.ndarray
    pp_p: np.ndarray
    pp_m: np.ndarray

    def __post_init__(self) -> None:
        for a in (self.lam, self.pp_n, self.pp_p, self.pp_m):
            a.setflags(write=False)

    @property
    def prime_powers(self) -> list[tuple[int, int, int]]:
        """Sorted (n, p, m) triples with Lambda(n) != 0."""
        return list(
            zip(self.pp_n.tolist(), self.pp_p.tolist(), self.pp_m.tolist())
        )

    @cached_property
    def lam2_cumsum(self) -> np.ndarray:
        """lam2_cumsum[n] = sum_{k<=n} Lambda^2(k)."""
        c = np.cumsum(self.lam * self.lam)
        c.setflags(write=False)
        return c

    def _require(self, n: int, what: str) -> None:
        if n > self.n_max:
            raise CoverageError(required=n, available=self.n_max, what=what)


def _primes_upto(n: int) -> np.ndarray:
    mask = np.ones(n + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, int(math.isqrt(n)) + 1):
        if mask[p]:
            mask[p * p:: p] = False
    return np.flatnonzero(mask)


def sieve_mangoldt(n_max: int) -> MangoldtTable:
    """Exact Lambda(n) for n <= n_max by an Eratosthenes sieve."""
    n_max = int(n_max)
    if not 2 <= n_max <= 10**9:
        raise ValueError("n_max must be between 2 and 1e9")
    primes = _primes_upto(n_max)
    lam = np.zeros(n_max + 1, dtype=np.float64)
    parts_n, parts_p, parts_m = [], [], []
    m = 1
    while 2**m <= n_max:
        # largest p with p^m <= n_max, robust to float rounding
        r = int(round(n_max ** (1.0 / m)))
        while (r + 1) ** m <= n_max:
            r += 1
        while r**m > n_max:
            r -= 1
        ps = primes[primes <= r]
        ns = ps.astype(np.int64) ** m
        lam[ns] = np.log(ps)
        parts_n.append(ns)
        parts_p.append(ps.astype(np.int64))
        parts_m.append(np.full(ps.size, m, dtype=np.int64))
        m += 1
    pp_n = np.concatenate(parts_n)
    order = np.argsort(pp_n, kind="stable")
    return MangoldtTable(
        n_max=n_max,
        lam=lam,
        pp_n=pp_n[order],
        pp_p=np.concatenate(parts_p)[order],
        pp_m=np.concatenate(parts_m)[order],
    )


# ----------------------------------------------------------------------------
# direct sums over the table
# ----------------------------------------------------------------------------

def _pv_terms(table: MangoldtTable, T: float) -> tuple[np.ndarray, np.ndarray]:
    hi = int(np.searchsorted(table.pp_n, math.floor(T), side="right"))
    n = table.pp_n[:hi].astype(np.float64)
    logn = np.log(n)
    base = table.lam[table.pp_n[:hi]] ** 2 / (n * logn**2)
    return base, logn


def prime_variance_sum(delta: float, T: float, table: MangoldtTable) -> float:
    """sum_{n<=T} Lambda^2(n)/(n log^2 n) * (1 - cos(delta log n))."""
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    table._require(math.floor(T), "Mangoldt table for prime variance sum")
    base, logn = _pv_terms(table, T)
    return math.fsum(base * (1.0 - np.cos(delta * logn)))


def mertens_sum(T: float, table: MangoldtTable) -> float:
    """sum_{n<=T} Lambda^2(n)/(n log^2 n); grows like log log T + gamma0 + K."""
    table._require(math.floor(T), "Mangoldt table for Mertens-type sum")
    base, _ = _pv_terms(table, T)
    return math.fsum(base)


def e_of(y: float, table: MangoldtTable) -> float:
    """E(y) = sum_{n<=y} Lambda^2(n) - y log y + y, for y >= 1."""
    y = float(y)
    if y < 1.0:
        raise ValueError("e_of requires y >= 1")
    table._require(math.floor(y), "Mangoldt table for E(y)")
    return float(table.lam2_cumsum[math.floor(y)]) - y * math.log(y) + y


# ----------------------------------------------------------------------------
# prime-power constants via the prime zeta function
# ----------------------------------------------------------------------------

def _mobius(k: int) -> int:
    mu, rest = 1, k
    d = 2
    while d * d <= rest:
        if rest % d == 0:
            rest //= d
            if rest % d == 0:
                return 0
            mu = -mu
        d += 1
    if rest > 1:
        mu = -mu
    return mu


def _prime_zeta(s: complex) -> complex:
    """P(s) = sum_p p^-s = sum_k mu(k)/k * log zeta(ks), Re s >= 2."""
    sigma = float(np.real(s))
    if sigma < 2.0:
        raise ValueError("_prime_zeta requires Re s >= 2")
    # log zeta(ks) ~ 2^(-k sigma); stop once below double precision
    kmax = max(1, min(40, int(math.ceil(56.0 / sigma))))
    total = 0.0 + 0.0j
    for k in range(1, kmax + 1):
        mu = _mobius(k)
        if mu:
            total += mu / k * np.log(zeta_em(k * s))
    return complex(total)


def _weight(m: int) -> float:
    return 1.0 / m**2 - 1.0 / m


@lru_cache(maxsize=16)
def prime_square_constant(tol: float = 1e-10) -> float:
    """K = sum_{m>=2} sum_p (1/m^2 - 1/m) p^-m; negative, about -0.175.

    The m-tail is bounded by sum_{m>M} P(m) <= 3 * 2^-M.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    M = max(2, int(math.ceil(math.log2(3.0 / tol))))
    return math.fsum(
        _weight(m) * _prime_zeta(m).real for m in range(2, M + 1)
    )


def c_tilde(delta: float, tol: float = 1e-10) -> float:
    """sum_{m>=2} sum_p (1/m^2 - 1/m) p^-m (1 - cos(delta m log p)).

    Evaluated as Re sum_m w_m [P(m) - P(m(1 + i delta))]; the |1-cos| <= 2
    bound gives an m-tail below 6 * 2^-M.
    """
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if delta == 0.0:
        return 0.0
    M = max(2, int(math.ceil(math.log2(6.0 / tol))))
    return math.fsum(
        _weight(m) * (_prime_zeta(m) - _prime_zeta(m * (1 + 1j * delta))).real
        for m in range(2, M + 1)
    )


def goldston_a(f_tail: float) -> float:
    """a = (1 + gamma0 + K)/2 when f_tail = 1; generally (gamma0 + K + f_tail)/2.

    f_tail is the assumed value of the pair-correlation tail integral
    int_1^inf F(alpha)/alpha^2 d alpha (equal to 1 under the strong
    pair-correlation conjecture).
    """
    return 0.5 * (EULER_GAMMA + prime_square_constant(1e-12) + float(f_tail))


# ----------------------------------------------------------------------------
# c(v)
# ----------------------------------------------------------------------------

def _d_stable(w: np.ndarray) -> np.ndarray:
    """2(1 - cos w) - w sin w, accurate for small w (leading term w^4/12)."""
    w = np.asarray(w, dtype=np.float64)
    w2 = w * w
    series = w2 * w2 * (1.0 / 12.0 - w2 / 180.0 + w2 * w2 / 6720.0)
    direct = 4.0 * np.sin(0.5 * w) ** 2 - w * np.sin(w)
    return np.where(np.abs(w) < 0.1, series, direct)


def _c_head(v: float, spec: QuadratureSpec) -> float:
    """Integral over y in [1, 2), where E(y) = y - y log y exactly.

    In u = log y the integrand is (1-u)/u^3 * [D(vu) + u(1 - cos(vu))]
    with D as in _d_stable; it extends continuously to v^2/2 at u = 0.
    """

    def fn(u):
        u = np.asarray(u, dtype=np.float64)
        w = v * u
        half = 2.0 * np.sin(0.5 * w) ** 2
        out = np.where(
            u > 0.0,
            (1.0 - u) * (_d_stable(w) / np.maximum(u, 1e-300) ** 3
                         + half / np.maximum(u, 1e-300) ** 2),
            0.5 * v * v,
        )
        return out if out.ndim else float(out)

    val, _ = integrate(fn, 0.0, math.log(2.0), spec)
    return val


def c_of(
    v: float,
    table: MangoldtTable,
    spec: QuadratureSpec | None = None,
    y_max: float | None = None,
    with_error: bool = False,
):
    """c(v) = int_1^inf E(y)/(y^2 L^3) [-vL sin(vL) + (1-cos vL)(L+2)] dy - v^2/2.

    The [2, Y] body uses exact E from the table with unit panels at the
    integers (E is smooth between consecutive integers) and 6-point Gauss
    points per panel; Y defaults to min(n_max, 1e7).  The y > Y tail is
    estimated from the empirical bound |E(y)| <= C y / log^3 y and reported
    through `with_error`, never asserted.
    """
    v = float(v)
    if v < 0:
        raise ValueError("c_of requires v >= 0")
    if spec is None:
        spec = QuadratureSpec()
    Y = int(min(table.n_max, 1e7 if y_max is None else y_max))
    table._require(Y, "Mangoldt table for c(v) integral")
    if Y < 2:
        raise ValueError("y_max must be at least 2")

    head = _c_head(v, spec)

    nodes, wts = leggauss_cached(6)
    offs = 0.5 * (nodes + 1.0)
    wts = 0.5 * wts
    cum = table.lam2_cumsum
    body_parts = []
    c_emp = 0.0
    chunk = 200_000
    for lo in range(2, Y, chunk):
        hi = min(lo + chunk, Y)
        n = np.arange(lo, hi, dtype=np.float64)
        y = n[:, None] + offs[None, :]
        L = np.log(y)
        E = cum[lo:hi][:, None] - y * L + y
        w = v * L
        bracket = -w * np.sin(w) + 2.0 * np.sin(0.5 * w) ** 2 * (L + 2.0)
        vals = E / (y * y * L**3) * bracket
        body_parts.append(float(np.sum(vals @ wts)))
        c_emp = max(c_emp, float(np.max(np.abs(E) * L**3 / y)))
    body = math.fsum(body_parts)

    value = head + body - 0.5 * v * v
    if not with_error:
        return value
    tail_est = c_emp * (v + 3.0) / (4.0 * math.log(Y) ** 4)
    return value, tail_est


# ----------------------------------------------------------------------------
# zeta'/zeta on the 1-line and the Keating-type bracket
# ----------------------------------------------------------------------------

def log_deriv_zeta_one_line(
    t: float, x: float, table: MangoldtTable
) -> complex:
    """-zeta'/zeta(1+it) ~ sum_{n<=x} Lambda(n) n^(-1-it) + x^(-it)/(it).

    Valid for 0 < |t| <= sqrt(x); the truncation error is
    O(log^2 x / sqrt(x)) (see one_line_error_budget).
    """
    t = float(t)
    x = float(x)
    if t == 0.0 or abs(t) > math.sqrt(x):
        raise ValueError("log_deriv_zeta_one_line requires 0 < |t| <= sqrt(x)")
    table._require(math.floor(x), "Mangoldt table for 1-line log-derivative")
    hi = int(np.searchsorted(table.pp_n, math.floor(x), side="right"))
    n = table.pp_n[:hi].astype(np.float64)
    coef = table.lam[table.pp_n[:hi]] / n
    s = complex(np.sum(coef * np.exp(-1j * t * np.log(n))))
    return s + np.exp(-1j * t * math.log(x)) / (1j * t)


def one_line_error_budget(x: float, constant: float = 10.0) -> float:
    """Budget constant * log^2 x / sqrt(x) for log_deriv_zeta_one_line."""
    return constant * math.log(x) ** 2 / math.sqrt(x)


def keating_bracket(
    delta: float,
    T: float,
    x: float,
    table: MangoldtTable,
    spec: QuadratureSpec | None = None,
    cutoff: float = 1e-3,
) -> float:
    """(1/2i) int_0^delta [z'/z(1+it) - z'/z(1-it) - 2i cos(t log T)/t] dt
    + c_tilde(delta), with zeta'/zeta taken from the x-truncated 1-line sum.

    By conjugate symmetry the integrand is i times the real function
        g(t) = sum_{n<=x} Lambda(n) sin(t log n)/n
               + (cos(t log x) - cos(t log T))/t,
    which vanishes linearly at t = 0; below `cutoff` the integral uses the
    exact cubic Taylor expansion of g, so nothing is evaluated at t = 0.
    """
    delta = float(delta)
    if delta <= 0:
        raise ValueError("delta must be positive")
    if delta > math.sqrt(x):
        raise ValueError("requires delta <= sqrt(x)")
    table._require(math.floor(x), "Mangoldt table for Keating-type bracket")
    if spec is None:
        spec = QuadratureSpec()

    hi = int(np.searchsorted(table.pp_n, math.floor(x), side="right"))
    n = table.pp_n[:hi].astype(np.float64)
    coef = table.lam[table.pp_n[:hi]] / n
    logn = np.log(n)
    lx, lT = math.log(x), math.log(T)

    def g(t):
        return float(
            np.sum(coef * np.sin(t * logn))
            + (math.cos(t * lx) - math.cos(t * lT)) / t
        )

    a_lin = float(np.sum(coef * logn)) + 0.5 * (lT**2 - lx**2)
    b_cub = -float(np.sum(coef * logn**3)) / 6.0 + (lx**4 - lT**4) / 24.0

    t0 = min(cutoff, delta)
    total = a_lin * t0**2 / 2.0 + b_cub * t0**4 / 4.0
    if delta > t0:
        val, _ = integrate(g, t0, delta, spec)
        total += val
    return total + c_tilde(delta, tol=1e-10)
