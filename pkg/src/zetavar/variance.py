"""Empirical fluctuation statistics and the matching closed-form predictions.

Empirical side: exact sweep evaluation of the zero-count variance (the
integrand is piecewise constant between ordinate-driven breakpoints),
Gauss-Legendre segment quadrature for the S(t)-based variant, and
singularity-aware per-gap quadrature for moments of log|zeta| on the
critical line.

Prediction side: the three equivalent shifted-increment formulations
(Keating-type integral route, cosine-integral + c(v) route, prime-power
route), the Fujii-style pair-correlation route, and Berry's universal /
non-universal variance formulas.  Every prediction is returned as a
PredictionBreakdown whose named terms sum to the total and whose
assumption labels flag any conjectural content.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import CoverageError, QuadratureError
from .paircorr import (
    _estimate,
    _grid,
    _simpson,
    tail_conjectural,
    tail_integral,
)
from .primes import (
    MangoldtTable,
    c_of,
    c_tilde,
    goldston_a,
    keating_bracket,
    prime_variance_sum,
)
from .special import (
    QuadratureSpec,
    cin,
    cosine_integral,
    f_weight,
    h_weight_many,
    integrate,
    leggauss_cached,
    sine_integral,
)
from .zeros import ZeroTable, smooth_count
from .zeta import log_abs_zeta_em, rs_z

_PI = math.pi
_PI2 = math.pi**2
_EULER = float(np.euler_gamma)

# Assumption labels used in breakdowns.
RH = "RH"
CHAN = "Chan conjecture"
STRONG_PC = "Montgomery strong PC"


# ---------------------------------------------------------------------------
# report types


@dataclass(frozen=True)
class PredictionBreakdown:
    """A per-T prediction split into named additive terms.

    `terms` is an ordered (name, value) tuple; names containing
    "conjectural" mark contributions that rest on an unproved hypothesis
    and force `assumptions` to be nonempty.  `err_est` carries whatever
    quantitative error accompanies data-driven terms (tail quadrature,
    pair truncation); it is informational, not part of the total.
    """

    total: float
    terms: tuple[tuple[str, float], ...]
    assumptions: tuple[str, ...]
    T: float
    delta: float
    label: str = ""
    err_est: float = 0.0

    def __post_init__(self):
        s = math.fsum(v for _, v in self.terms)
        if abs(self.total - s) > 1e-12 * max(1.0, abs(self.total)):
            raise ValueError(
                f"breakdown total {self.total!r} != sum of terms {s!r}"
            )
        conjectural = any(
            "conjectural" in name and v != 0.0 for name, v in self.terms
        )
        if conjectural and not self.assumptions:
            raise ValueError(
                "nonzero conjectural term requires an assumption label"
            )

    @property
    def terms_dict(self) -> dict[str, float]:
        return dict(self.terms)

    def term(self, name: str) -> float:
        for key, value in self.terms:
            if key == name:
                return value
        raise KeyError(name)


def _breakdown(label, terms, assumptions, T, delta, err_est=0.0):
    return PredictionBreakdown(
        total=math.fsum(v for _, v in terms),
        terms=tuple((str(k), float(v)) for k, v in terms),
        assumptions=tuple(assumptions),
        T=float(T),
        delta=float(delta),
        label=str(label),
        err_est=float(err_est),
    )


@dataclass(frozen=True)
class ComparisonReport:
    """Empirical value against one or more predictions.

    `empirical` is stored as given (the raw integral over [0, T]);
    `empirical_compared` is the value actually set against the
    predictions -- divided by T exactly once when normalization is
    "per_T", untouched for "raw" (then the predictions are scaled up
    by T instead).
    """

    empirical: float
    empirical_compared: float
    predictions: tuple[PredictionBreakdown, ...]
    normalization: str
    T: float
    differences: tuple[float, ...]
    rel_errors: tuple[float, ...]
    tolerance: float | None = None
    params: tuple[tuple[str, float], ...] = field(default=())

    def lines(self) -> list[str]:
        out = [
            f"empirical ({self.normalization}): {self.empirical_compared!r}",
            f"tolerance used: "
            f"{'none stated' if self.tolerance is None else repr(self.tolerance)}",
        ]
        for p, d, r in zip(self.predictions, self.differences, self.rel_errors):
            tag = f" [{', '.join(p.assumptions)}]" if p.assumptions else ""
            out.append(
                f"  {p.label or 'prediction'}: total {p.total!r} "
                f"diff {d!r} rel {r!r}{tag}"
            )
        return out


def compare(
    empirical: float,
    predictions: list[PredictionBreakdown],
    T: float,
    normalization: str = "per_T",
    tolerance: float | None = None,
    params: dict[str, float] | None = None,
) -> ComparisonReport:
    """Join a raw empirical integral with per-T prediction breakdowns."""
    if normalization not in ("raw", "per_T"):
        raise ValueError(
            f"normalization must be 'raw' or 'per_T', got {normalization!r}"
        )
    if not predictions:
        raise ValueError("need at least one prediction")
    T = float(T)
    if T <= 0.0:
        raise ValueError("T must be positive")
    for p in predictions:
        if p.T != T:
            raise ValueError(
                f"normalization mismatch: prediction built at T={p.T!r} "
                f"compared at T={T!r}"
            )
    empirical = float(empirical)
    if normalization == "per_T":
        emp_cmp = empirical / T  # the one and only division by T
        targets = [p.total for p in predictions]
    else:
        emp_cmp = empirical
        targets = [p.total * T for p in predictions]
    diffs = tuple(emp_cmp - t for t in targets)
    rels = tuple(
        d / abs(t) if t != 0.0 else math.inf if d != 0.0 else 0.0
        for d, t in zip(diffs, targets)
    )
    return ComparisonReport(
        empirical=empirical,
        empirical_compared=emp_cmp,
        predictions=tuple(predictions),
        normalization=normalization,
        T=T,
        differences=diffs,
        rel_errors=rels,
        tolerance=tolerance,
        params=tuple(sorted((params or {}).items())),
    )


def window_for_delta(delta: float, T: float) -> float:
    """Window h = 2 pi delta / log T pairing count windows with delta."""
    if T <= 1.0:
        raise ValueError("T must exceed 1")
    return 2.0 * _PI * float(delta) / math.log(float(T))


# ---------------------------------------------------------------------------
# exact sweep statistics


def _count_breakpoints(table: ZeroTable, T: float, h: float) -> np.ndarray:
    g = table.ordinates
    pts = np.concatenate([g, g - h])
    pts = pts[(pts > 0.0) & (pts < T)]
    return np.unique(pts)


def _segment_counts(g, lo_edges, hi_edges, h):
    mids = 0.5 * (lo_edges + hi_edges)
    return (
        np.searchsorted(g, mids + h, side="right")
        - np.searchsorted(g, mids, side="right")
    ).astype(np.float64)


def empirical_number_variance(
    table: ZeroTable,
    T: float,
    h: float,
    delta_expected: float,
    require_coverage: bool = True,
) -> float:
    """Exact integral over [0, T] of (N(t+h) - N(t) - delta_expected)^2.

    The integrand is piecewise constant with breakpoints at ordinates and
    at ordinates shifted down by h, so the integral is a finite sum; terms
    are accumulated with math.fsum.  Set require_coverage=False only for
    tables that genuinely list every zero up to T + h (then counts past
    max_height are correctly zero rather than unknown).
    """
    T = float(T)
    h = float(h)
    if not h > 0.0:
        raise ValueError("window h must be positive")
    if T <= 0.0:
        raise ValueError("T must be positive")
    if require_coverage and table.max_height < T + h:
        raise CoverageError(T + h, table.max_height, "empirical_number_variance")
    delta = float(delta_expected)
    bp = _count_breakpoints(table, T, h)
    edges = np.concatenate([[0.0], bp, [T]])
    lo, hi = edges[:-1], edges[1:]
    counts = _segment_counts(table.ordinates, lo, hi, h)
    contrib = (counts - delta) ** 2 * (hi - lo)
    return math.fsum(contrib.tolist())


def empirical_s_variance(
    table: ZeroTable,
    T: float,
    h: float,
    require_coverage: bool = True,
) -> float:
    """Integral over [0, T] of (S(t+h) - S(t))^2.

    S(t+h) - S(t) = [N(t+h) - N(t)] - [smooth(t+h) - smooth(t)]: a constant
    minus a slowly varying drift on each breakpoint segment, integrated
    per segment with 8-point Gauss-Legendre.
    """
    T = float(T)
    h = float(h)
    if h < 0.0:
        raise ValueError("window h must be nonnegative")
    if T <= 0.0:
        raise ValueError("T must be positive")
    if h == 0.0:
        return 0.0
    if require_coverage and table.max_height < T + h:
        raise CoverageError(T + h, table.max_height, "empirical_s_variance")
    bp = _count_breakpoints(table, T, h)
    edges = np.concatenate([[0.0], bp, [T]])
    lo, hi = edges[:-1], edges[1:]
    counts = _segment_counts(table.ordinates, lo, hi, h)
    x, w = leggauss_cached(8)
    mid = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    nodes = mid[:, None] + half[:, None] * x[None, :]
    drift = smooth_count(nodes + h) - smooth_count(nodes)
    sq = (counts[:, None] - drift) ** 2
    per_seg = half * (sq @ w)
    return math.fsum(per_seg.tolist())


# ---------------------------------------------------------------------------
# log|zeta| moments: per-gap quadrature with endpoint log singularities
#
# Every breakpoint that is (or hides) an ordinate is declared logarithmic
# and handled by the substitution t = endpoint +/- L e^{-v}: a panel of
# length L with a singular left end becomes L * int_0^V f(a + L e^{-v})
# e^{-v} dv with V = 28 (the discarded tip is O(L e^{-V} log^2)).  Panels
# with two singular ends split at the midpoint; gaps longer than five mean
# spacings split additionally at extrema of Z.  Each piece is evaluated at
# doubling panel counts until two consecutive levels agree.

_V_CAP = 28.0
_LEVEL_PANELS = (14, 28, 56, 112)  # GL16 panels on [0, V] per refinement level
_PLAIN_PANELS = (4, 8, 16, 32)
_NODE_CACHE: dict[tuple[str, int], tuple[np.ndarray, np.ndarray]] = {}


def _sing_nodes(level: int):
    key = ("sing", level)
    if key not in _NODE_CACHE:
        x, c = leggauss_cached(16)
        P = _LEVEL_PANELS[level]
        w = _V_CAP / P
        v = (w * (np.arange(P)[:, None] + 0.5 * (x[None, :] + 1.0))).ravel()
        wts = np.tile(c, P) * (0.5 * w) * np.exp(-v)
        _NODE_CACHE[key] = (np.exp(-v), wts)
    return _NODE_CACHE[key]


def _plain_nodes(level: int):
    key = ("plain", level)
    if key not in _NODE_CACHE:
        x, c = leggauss_cached(16)
        P = _PLAIN_PANELS[level]
        fr = ((np.arange(P)[:, None] + 0.5 * (x[None, :] + 1.0)) / P).ravel()
        wts = np.tile(c, P) * (0.5 / P)
        _NODE_CACHE[key] = (fr, wts)
    return _NODE_CACHE[key]


def _eval_chunked(f, tmat: np.ndarray, wts: np.ndarray) -> np.ndarray:
    n, m = tmat.shape
    out = np.empty(n)
    step = max(1, 4_000_000 // m)
    for i in range(0, n, step):
        out[i : i + step] = f(tmat[i : i + step].ravel()).reshape(-1, m) @ wts
    return out


def _eval_level(f, kind, anchors, lens, level):
    if kind == "plain":
        fr, wts = _plain_nodes(level)
        tmat = anchors[:, None] + np.multiply.outer(lens, fr)
    else:
        ev, wts = _sing_nodes(level)
        sign = 1.0 if kind == "left" else -1.0
        tmat = anchors[:, None] + sign * np.multiply.outer(lens, ev)
    return lens * _eval_chunked(f, tmat, wts)


def _refine_family(f, kind, anchors, lens, parents, spec, total_len):
    """Adaptive doubling for one family of pieces; returns (values, errors)."""
    if anchors.size == 0:
        return np.zeros(0), np.zeros(0)
    prev = _eval_level(f, kind, anchors, lens, 0)
    best = _eval_level(f, kind, anchors, lens, 1)
    err = np.abs(best - prev)
    tol = np.maximum(
        spec.abs_tol * np.maximum(lens / total_len, 1e-9),
        spec.rel_tol * np.abs(best),
    )
    active = np.flatnonzero(err > tol)
    for level in (2, 3):
        if active.size == 0:
            break
        nxt = _eval_level(f, kind, anchors[active], lens[active], level)
        new_err = np.abs(nxt - best[active])
        # A refinement that buys less than ~3x sits on the evaluator's own
        # noise floor; keep the achieved error instead of chasing it.
        improving = new_err < 0.3 * err[active]
        err[active] = new_err
        best[active] = nxt
        tol[active] = np.maximum(
            spec.abs_tol * np.maximum(lens[active] / total_len, 1e-9),
            spec.rel_tol * np.abs(nxt),
        )
        active = active[(new_err > tol[active]) & improving]
    # Failure is judged on the achieved error, not on whether the target
    # tolerance was met: errors resting on the evaluator's noise floor are
    # reported, not fatal, while an error above a few percent of the piece
    # value means the refinement genuinely never converged.
    ceiling = 100.0 * tol + 0.02 * np.abs(best)
    bad = np.flatnonzero(err > ceiling)
    if bad.size:
        i = int(bad[np.argmax(err[bad])])
        lo, hi = parents[i]
        raise QuadratureError(
            f"per-gap quadrature did not settle on gap [{lo:.6f}, {hi:.6f}]",
            best_estimate=float(best[i]),
            err_est=float(err[i]),
        )
    if kind != "plain":
        # bound on the discarded e^{-v} tip of the substitution
        tip = lens * math.exp(-_V_CAP) * (
            _V_CAP + np.abs(np.log(np.maximum(lens, 1e-300))) + 30.0
        ) ** 2
        err = err + tip
    return best, err


def _extrema_splits(a: float, b: float) -> list[float]:
    """Split points at extrema of Z for gaps over five mean spacings."""
    mid = 0.5 * (a + b)
    if a < 10.0 or mid <= 20.0:
        return []
    spacing = 2.0 * _PI / math.log(mid / (2.0 * _PI))
    if (b - a) <= 5.0 * spacing:
        return []
    grid = np.linspace(a, b, 66)[1:-1]
    z = rs_z(grid)
    d = np.diff(z)
    flips = np.flatnonzero(d[:-1] * d[1:] < 0.0)
    return [float(grid[i + 1]) for i in flips]


def _gap_pieces(edges, singular, split_extrema):
    """Decompose panels into (left-singular, right-singular, plain) pieces."""
    fam = {
        "left": {"anchor": [], "len": [], "parent": []},
        "right": {"anchor": [], "len": [], "parent": []},
        "plain": {"anchor": [], "len": [], "parent": []},
    }

    def push(kind, anchor, length, parent):
        fam[kind]["anchor"].append(anchor)
        fam[kind]["len"].append(length)
        fam[kind]["parent"].append(parent)

    for a, b, sa, sb in zip(edges[:-1], edges[1:], singular[:-1], singular[1:]):
        if not b > a:
            continue
        parent = (a, b)
        inner = _extrema_splits(a, b) if split_extrema else []
        pts = [a] + [p for p in inner if a < p < b] + [b]
        for j in range(len(pts) - 1):
            p, q = pts[j], pts[j + 1]
            if not q > p:
                continue
            la = sa and j == 0
            rb = sb and j == len(pts) - 2
            if la and rb:
                m = 0.5 * (p + q)
                push("left", p, m - p, parent)
                push("right", q, q - m, parent)
            elif la:
                push("left", p, q - p, parent)
            elif rb:
                push("right", q, q - p, parent)
            else:
                push("plain", p, q - p, parent)
    out = {}
    for kind, d in fam.items():
        out[kind] = (
            np.asarray(d["anchor"], dtype=np.float64),
            np.asarray(d["len"], dtype=np.float64),
            d["parent"],
        )
    return out


def _integrate_gaps(f, edges, singular, spec, split_extrema=True):
    total_len = float(edges[-1] - edges[0])
    fams = _gap_pieces(edges, singular, split_extrema)
    vals, errs = [], []
    for kind in ("left", "right", "plain"):
        anchors, lens, parents = fams[kind]
        v, e = _refine_family(f, kind, anchors, lens, parents, spec, total_len)
        vals.extend(v.tolist())
        errs.extend(e.tolist())
    return math.fsum(vals), math.fsum(errs)


def _log_abs_line(t: np.ndarray) -> np.ndarray:
    """log|zeta(1/2+it)|, Riemann-Siegel for t >= 10, Euler-Maclaurin below."""
    t = np.asarray(t, dtype=np.float64)
    out = np.empty_like(t)
    m = t >= 10.0
    if m.any():
        out[m] = np.log(np.maximum(np.abs(rs_z(t[m])), 1e-300))
    if (~m).any():
        out[~m] = np.atleast_1d(log_abs_zeta_em(t[~m]))
    return out


# Default tolerances sit just above the critical-line evaluator's own
# truncation floor at the low-t end; tighter requests only make sense with
# a more accurate evaluator.
_DEFAULT_MOMENT_SPEC = QuadratureSpec(abs_tol=1e-6, rel_tol=5e-7)


def empirical_log_moment(
    T: float,
    table: ZeroTable,
    spec: QuadratureSpec | None = None,
    with_error: bool = False,
):
    """Integral over [0, T] of log^2|zeta(1/2+it)|.

    [0, 10) carries no ordinates and is integrated against the
    Euler-Maclaurin evaluator; [10, T] is split at every ordinate, each
    declared a logarithmic endpoint singularity of its two panels.
    """
    T = float(T)
    if T < 20.0:
        raise ValueError(f"empirical_log_moment needs T >= 20, got {T!r}")
    if table.max_height < T:
        raise CoverageError(T, table.max_height, "empirical_log_moment")
    if spec is None:
        spec = _DEFAULT_MOMENT_SPEC
    head, head_err = integrate(
        lambda t: float(log_abs_zeta_em(t)) ** 2, 0.0, 10.0, spec
    )
    g = table.ordinates
    inner = g[(g > 10.0) & (g < T)]
    edges = np.concatenate([[10.0], inner, [T]])
    idx = int(np.searchsorted(g, T))
    singular = [False] + [True] * inner.size + [idx < g.size and g[idx] == T]

    def f(t):
        return _log_abs_line(t) ** 2

    body, body_err = _integrate_gaps(f, edges, singular, spec)
    if with_error:
        return head + body, head_err + body_err
    return head + body


def empirical_log_increment_variance(
    T: float,
    delta: float,
    table: ZeroTable,
    spec: QuadratureSpec | None = None,
    with_error: bool = False,
):
    """Integral over [0, T] of (log|zeta(1/2+i(t+delta))| - log|zeta(1/2+it)|)^2.

    Breakpoints at ordinates and at ordinates shifted down by delta; each
    is a logarithmic singularity of one of the two factors.
    """
    T = float(T)
    delta = float(delta)
    if delta < 0.0:
        raise ValueError("delta must be nonnegative")
    if T <= 0.0:
        raise ValueError("T must be positive")
    if delta == 0.0:
        return (0.0, 0.0) if with_error else 0.0
    if table.max_height < T + delta:
        raise CoverageError(
            T + delta, table.max_height, "empirical_log_increment_variance"
        )
    if spec is None:
        spec = _DEFAULT_MOMENT_SPEC
    g = table.ordinates
    pts = np.concatenate([g, g - delta])
    sing_pts = np.unique(pts[(pts > 0.0) & (pts < T)])
    # the evaluator switches route at height 10; split there so the tiny
    # mismatch between routes never sits inside a panel
    extra = np.array([p for p in (10.0, 10.0 - delta) if 0.0 < p < T])
    all_pts = np.unique(np.concatenate([sing_pts, extra]))
    edges = np.concatenate([[0.0], all_pts, [T]])
    singular = [False] + np.isin(all_pts, sing_pts).tolist() + [False]

    def f(t):
        return (_log_abs_line(t + delta) - _log_abs_line(t)) ** 2

    val, err = _integrate_gaps(f, edges, singular, spec)
    if with_error:
        return val, err
    return val


def log_abs_reconstruction(
    t: float,
    x: float,
    zero_table: ZeroTable,
    mangoldt_table: MangoldtTable,
    gamma_window: float = 100.0,
) -> float:
    """Zero-sum + prime-sum representation of log|zeta(1/2+it)|:

        - sum_gamma h[(gamma - t) log x]
        + sum_{n<=x} Lambda(n) cos(t log n) f(log n / log x) / (sqrt(n) log n)
        + log 2 * log(t/(2 pi)) / (2 log x),

    valid under RH up to O(sqrt(x)/(t log^2 x)); see
    reconstruction_error_budget.  The zero sum runs over ordinates of both
    signs within gamma_window of t; |h(u)| <= 2G/u^2 puts the discarded
    tail at O(1/(gamma_window log^2 x)), well inside the formula's own
    error at the defaults.
    """
    t = float(t)
    x = float(x)
    if x < 4.0:
        raise ValueError("reconstruction requires x >= 4")
    if t < 1.0:
        raise ValueError("reconstruction requires t >= 1")
    w = float(gamma_window)
    if zero_table.max_height < t + w:
        raise CoverageError(t + w, zero_table.max_height, "log_abs_reconstruction")
    mangoldt_table._require(math.floor(x), "reconstruction prime sum")
    logx = math.log(x)

    g = zero_table.ordinates
    lo = int(np.searchsorted(g, t - w))
    hi = int(np.searchsorted(g, t + w))
    offsets = g[lo:hi] - t
    mirrored = -g[g + t <= w] - t  # ordinates of negative sign, if in range
    args = np.concatenate([offsets, mirrored]) * logx
    if args.size and np.min(np.abs(args)) < 1e-8 * logx:
        raise ValueError(f"t = {t!r} coincides with a tabulated ordinate")
    zero_sum = math.fsum(h_weight_many(args).tolist()) if args.size else 0.0

    keep = int(np.searchsorted(mangoldt_table.pp_n, math.floor(x), side="right"))
    n = mangoldt_table.pp_n[:keep].astype(np.float64)
    logn = np.log(n)
    lam = mangoldt_table.lam[mangoldt_table.pp_n[:keep]]
    prime_sum = math.fsum(
        (
            lam
            * np.cos(t * logn)
            * f_weight(logn / logx)
            / (np.sqrt(n) * logn)
        ).tolist()
    )

    const = math.log(2.0) * math.log(t / (2.0 * _PI)) / (2.0 * logx)
    return -zero_sum + prime_sum + const


def reconstruction_error_budget(t: float, x: float, constant: float = 20.0) -> float:
    """Budget constant * sqrt(x)/(t log^2 x) for log_abs_reconstruction."""
    return constant * math.sqrt(x) / (float(t) * math.log(x) ** 2)


# ---------------------------------------------------------------------------
# predictions


def predict_thm_1_1(T: float, f_tail: float) -> PredictionBreakdown:
    """Second-moment prediction (T/2) loglog T + a("f_tail") T."""
    T = float(T)
    if T < 20.0:
        raise ValueError(f"predict_thm_1_1 needs T >= 20, got {T!r}")
    terms = [
        ("selberg_main", 0.5 * T * math.log(math.log(T))),
        ("a_times_T", goldston_a(f_tail) * T),
    ]
    return _breakdown("second-moment", terms, (RH,), T, 0.0)


def _variant_factor(variant: str) -> float:
    if variant == "log":
        return 1.0
    if variant == "s":
        return 1.0 / _PI2
    raise ValueError(f"variant must be 'log' or 's', got {variant!r}")


def _tail_terms(
    zero_table, delta, T, alpha_max, n_grid, window, conjectural, tail
):
    if tail is None:
        tail_val, tail_err = tail_integral(
            zero_table, delta, T, alpha_max, n_grid=n_grid, window=window
        )
    else:
        tail_val, tail_err = tail
    tc = tail_conjectural(delta, T, alpha_max) if conjectural else 0.0
    return float(tail_val), float(tail_err), float(tc)


def predict_thm_1_2(
    delta: float,
    T: float,
    zero_table: ZeroTable,
    mangoldt_table: MangoldtTable,
    x: float | None = None,
    alpha_max: float = 4.0,
    n_grid: int = 65,
    window: float | None = None,
    spec: QuadratureSpec | None = None,
    variant: str = "log",
    conjectural_tail: bool = True,
    tail: tuple[float, float] | None = None,
) -> PredictionBreakdown:
    """Shifted-increment bracket via the one-line log-derivative integral."""
    delta = float(delta)
    T = float(T)
    if delta <= 0.0:
        raise ValueError("delta must be positive")
    fac = _variant_factor(variant)
    if x is None:
        x = T
    ct = c_tilde(delta)
    kb = keating_bracket(delta, T, x, mangoldt_table, spec=spec)
    tail_val, tail_err, tc = _tail_terms(
        zero_table, delta, T, alpha_max, n_grid, window, conjectural_tail, tail
    )
    terms = [
        ("keating_integral", fac * (kb - ct)),
        ("c_tilde", fac * ct),
        ("f_tail", fac * tail_val),
        ("conjectural_tail", fac * tc),
    ]
    assumptions = (RH, CHAN) if tc != 0.0 else (RH,)
    return _breakdown(
        f"increment-keating-{variant}", terms, assumptions, T, delta,
        err_est=fac * tail_err,
    )


def predict_thm_1_3(
    delta: float,
    T: float,
    zero_table: ZeroTable,
    mangoldt_table: MangoldtTable,
    y_max: float | None = None,
    alpha_max: float = 4.0,
    n_grid: int = 65,
    window: float | None = None,
    spec: QuadratureSpec | None = None,
    variant: str = "log",
    conjectural_tail: bool = True,
    tail: tuple[float, float] | None = None,
) -> PredictionBreakdown:
    """Shifted-increment bracket via Cin(delta log T) + c(delta)."""
    delta = float(delta)
    T = float(T)
    if delta <= 0.0:
        raise ValueError("delta must be positive")
    fac = _variant_factor(variant)
    lt = cin(delta * math.log(T))
    cd = c_of(delta, mangoldt_table, spec=spec, y_max=y_max)
    tail_val, tail_err, tc = _tail_terms(
        zero_table, delta, T, alpha_max, n_grid, window, conjectural_tail, tail
    )
    terms = [
        ("log_term", fac * lt),
        ("c_delta", fac * cd),
        ("f_tail", fac * tail_val),
        ("conjectural_tail", fac * tc),
    ]
    assumptions = (RH, CHAN) if tc != 0.0 else (RH,)
    return _breakdown(
        f"increment-cin-{variant}", terms, assumptions, T, delta,
        err_est=fac * tail_err,
    )


def predict_thm_1_4(
    delta: float,
    T: float,
    zero_table: ZeroTable,
    mangoldt_table: MangoldtTable,
    alpha_max: float = 4.0,
    n_grid: int = 65,
    window: float | None = None,
    variant: str = "log",
    conjectural_tail: bool = True,
    tail: tuple[float, float] | None = None,
) -> PredictionBreakdown:
    """Shifted-increment bracket via the explicit prime-power sum."""
    delta = float(delta)
    T = float(T)
    if delta <= 0.0:
        raise ValueError("delta must be positive")
    fac = _variant_factor(variant)
    pv = prime_variance_sum(delta, T, mangoldt_table)
    tail_val, tail_err, tc = _tail_terms(
        zero_table, delta, T, alpha_max, n_grid, window, conjectural_tail, tail
    )
    terms = [
        ("prime_sum", fac * pv),
        ("f_tail", fac * tail_val),
        ("conjectural_tail", fac * tc),
    ]
    assumptions = (RH, CHAN) if tc != 0.0 else (RH,)
    return _breakdown(
        f"increment-primes-{variant}", terms, assumptions, T, delta,
        err_est=fac * tail_err,
    )


def predict_fujii(
    delta: float,
    T: float,
    table: ZeroTable,
    window: float | None = None,
    alpha_max: float = 4.0,
    n_grid: int = 65,
) -> PredictionBreakdown:
    """Pair-correlation route for the S-increment variance, small shifts.

    (1/pi^2) [ Cin(delta log T)
               + int_1^alpha_max F(alpha)(1 - cos(alpha delta log T))/alpha^2 ].
    """
    delta = float(delta)
    T = float(T)
    if not 0.0 <= delta <= 1.0:
        raise ValueError(f"intended for 0 <= delta <= 1, got {delta!r}")
    logT = math.log(T)
    lt = cin(delta * logT)
    alphas = _grid(alpha_max, n_grid)
    h = float(alphas[1] - alphas[0])
    vals, bound, _, _ = _estimate(table, alphas, 0.0, T, window, 4.0)
    integrand = vals.real * (1.0 - np.cos(delta * alphas * logT)) / alphas**2
    ftail = _simpson(integrand, h)
    terms = [
        ("log_term", lt / _PI2),
        ("f_integral", ftail / _PI2),
    ]
    err = bound * (1.0 - 1.0 / alpha_max) / _PI2
    return _breakdown(
        "fujii-pair-route", terms, (RH,), T, delta, err_est=err
    )


def predict_berry_universal(small_delta: float) -> float:
    """Closed-form universal (GUE-type) per-T variance prediction.

    (1/pi^2)[log(2 pi d) - Ci(2 pi d) - 2 pi d Si(2 pi d) + pi^2 d
             - cos(2 pi d) + 1 + gamma].  Behaves like d - d^2 for small d
    and like (log(2 pi d) + gamma + 1)/pi^2 for large d.
    """
    d = float(small_delta)
    if d <= 0.0:
        raise ValueError("delta must be positive")
    x = 2.0 * _PI * d
    bracket = (
        math.log(x)
        - float(cosine_integral(x))
        - x * float(sine_integral(x))
        + _PI2 * d
        - math.cos(x)
        + 1.0
        + _EULER
    )
    return bracket / _PI2


def predict_berry_nonuniversal(
    big_delta_units: float, T: float, table: MangoldtTable
) -> PredictionBreakdown:
    """Prime-dominated per-T variance prediction for wide windows.

    (1/pi^2)[prime_variance_sum(2 pi delta / log T, T) + 1]; the +1 is the
    plateau value of the pair-correlation tail integral and rests on the
    long-range pair-correlation conjecture.
    """
    d = float(big_delta_units)
    T = float(T)
    if d < 0.0:
        raise ValueError("delta must be nonnegative")
    if T <= 1.0:
        raise ValueError("T must exceed 1")
    table._require(math.floor(T), "wide-window variance prediction")
    shift = window_for_delta(d, T)  # 2 pi delta / log T
    pv = prime_variance_sum(shift, T, table)
    terms = [
        ("prime_sum", pv / _PI2),
        ("conjectural_tail", 1.0 / _PI2),
    ]
    return _breakdown(
        "berry-nonuniversal", terms, (RH, CHAN), T, d
    )


def berry_full_v(
    L: float, E: float, tau_star: float, table: MangoldtTable
) -> float:
    """Two-bracket variance model: universal part plus prime-power part.

    The prime bracket sums 2 sin^2(pi L log n / log X)/(m^2 n) over prime
    powers n = p^m <= X^tau_star with X = E/(2 pi), plus
    Ci(2 pi L tau*) - log(2 pi L tau*) - gamma; the result is insensitive
    to tau_star once X is large.
    """
    L = float(L)
    E = float(E)
    tau = float(tau_star)
    if L <= 0.0 or tau <= 0.0:
        raise ValueError("L and tau_star must be positive")
    X = E / (2.0 * _PI)
    if X <= 1.0:
        raise ValueError("E must exceed 2 pi")
    cutoff = X**tau
    table._require(
        max(1, math.floor(cutoff)), "prime bracket of the full variance model"
    )
    n = table.pp_n
    keep = n <= cutoff
    nf = n[keep].astype(np.float64)
    mf = table.pp_m[keep].astype(np.float64)
    logX = math.log(X)
    s = np.sin(_PI * L * np.log(nf) / logX)
    psum = 2.0 * math.fsum((s * s / (mf * mf * nf)).tolist())
    y = 2.0 * _PI * L * tau
    prime_bracket = psum + float(cosine_integral(y)) - math.log(y) - _EULER
    return predict_berry_universal(L) + prime_bracket / _PI2
