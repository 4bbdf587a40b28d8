"""Batch command line: ingest zero tables, tabulate statistics, emit reports.

Five subcommands (ingest, fstat, variance, predict, compare) share one
flat configuration: defaults < config file < ZETAVAR_OUTPUT_DIR < flags.
Reports go to stdout or to --out inside the output directory, as CSV
('#'-prefixed "key = value" comments, then an RFC-4180 header row and
data rows) or as a single JSON object {"meta": ..., "rows": [...]}.
Floats are printed with repr (shortest roundtrip), so diffs between runs
reflect value changes only; nothing in a report depends on the clock.

Exit codes: 0 success, 2 usage/config error, 3 data error, 4 numerical
failure.
"""

import argparse
import csv
import json
import math
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .errors import DataError, NumericalError
from .paircorr import (
    chan_approx,
    f_delta,
    f_tail_estimate,
    gm_asymptotic,
    tail_integral,
)
from .primes import sieve_mangoldt
from .special import QuadratureSpec
from .variance import (
    compare,
    empirical_log_moment,
    empirical_number_variance,
    empirical_s_variance,
    predict_berry_nonuniversal,
    predict_berry_universal,
    predict_fujii,
    predict_thm_1_1,
    predict_thm_1_2,
    predict_thm_1_3,
    predict_thm_1_4,
    window_for_delta,
)
from .zeros import load_zero_file


class ConfigError(ValueError):
    """Invalid configuration (maps to the usage exit code)."""


@dataclass(frozen=True)
class RunConfig:
    zeros_path: str
    t_values: tuple[float, ...]  # empty means "top of the table"
    deltas: tuple[float, ...]
    alphas: tuple[float, ...]
    alpha_max: float = 4.0
    window: float | None = None
    n_grid: int = 65
    abs_tol: float | None = None
    rel_tol: float | None = None
    tolerance: float | None = None
    output_dir: str = "."
    format: str = "csv"
    out: str | None = None

    def __post_init__(self):
        for name in ("alpha_max",):
            v = getattr(self, name)
            if not v > 0.0:
                raise ConfigError(f"{name} must be positive, got {v!r}")
        for name in ("window", "abs_tol", "rel_tol", "tolerance"):
            v = getattr(self, name)
            if v is not None and not v > 0.0:
                raise ConfigError(f"{name} must be positive, got {v!r}")
        if self.n_grid < 3:
            raise ConfigError(f"n_grid must be at least 3, got {self.n_grid}")
        for t in self.t_values:
            if not t > 0.0:
                raise ConfigError(f"t values must be positive, got {t!r}")
        if self.format not in ("csv", "json"):
            raise ConfigError(f"format must be csv or json, got {self.format!r}")
        if list(self.deltas) != sorted(self.deltas):
            raise ConfigError(
                f"delta values must be sorted ascending, got {list(self.deltas)}"
            )
        for d in self.deltas:
            if not math.isfinite(d):
                raise ConfigError(f"delta values must be finite, got {d!r}")

    def spec(self) -> QuadratureSpec | None:
        if self.abs_tol is None and self.rel_tol is None:
            return None
        kw = {}
        if self.abs_tol is not None:
            kw["abs_tol"] = self.abs_tol
        if self.rel_tol is not None:
            kw["rel_tol"] = self.rel_tol
        return QuadratureSpec(**kw)


def parse_grid(text: str) -> tuple[float, ...]:
    """A grid spec: "a:b:step" (inclusive), a comma list, or one number."""
    text = text.strip()
    try:
        if ":" in text:
            parts = [float(p) for p in text.split(":")]
            if len(parts) != 3:
                raise ValueError
            a, b, step = parts
            if step <= 0.0 or b < a:
                raise ValueError
            n = int(round((b - a) / step))
            vals = [a + k * step for k in range(n + 1)]
            if vals and vals[-1] > b + 1e-9 * max(1.0, abs(b)):
                vals.pop()
            return tuple(vals)
        return tuple(float(p) for p in text.split(","))
    except ValueError:
        raise ConfigError(f"cannot parse grid {text!r}") from None


_CONFIG_KEYS = {
    "zeros",
    "t_max",
    "delta",
    "alpha",
    "alpha_max",
    "window",
    "n_grid",
    "abs_tol",
    "rel_tol",
    "tolerance",
    "output_dir",
    "format",
    "out",
}


def read_config_file(path) -> dict[str, str]:
    """Flat "key = value" lines; '#' starts a comment; keys are flag names."""
    out: dict[str, str] = {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    for lineno, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        if "=" not in s:
            raise ConfigError(f"{path}:{lineno}: expected key = value, got {s!r}")
        key, _, value = s.partition("=")
        key = key.strip()
        if key not in _CONFIG_KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        out[key] = value.strip()
    return out


def _resolve(args: argparse.Namespace) -> RunConfig:
    """defaults < config file < ZETAVAR_OUTPUT_DIR < explicit flags."""
    file_cfg = read_config_file(args.config) if args.config else {}

    def pick(flag, key, fallback=None):
        if flag is not None:
            return flag
        if key in file_cfg:
            return file_cfg[key]
        return fallback

    out_dir = args.output_dir
    if out_dir is None:
        out_dir = os.environ.get("ZETAVAR_OUTPUT_DIR")
    if out_dir is None:
        out_dir = file_cfg.get("output_dir", ".")

    zeros = pick(args.zeros, "zeros")
    if zeros is None:
        raise ConfigError("a zero table is required (--zeros or config)")
    t_raw = pick(getattr(args, "t_max", None), "t_max")
    delta_raw = pick(getattr(args, "delta", None), "delta")
    alpha_raw = pick(getattr(args, "alpha", None), "alpha", "0:1.5:0.1")

    def num(flag, key, cast, fallback):
        v = pick(flag, key)
        if v is None:
            return fallback
        try:
            return cast(v)
        except ValueError:
            raise ConfigError(f"bad value for {key}: {v!r}") from None

    return RunConfig(
        zeros_path=str(zeros),
        t_values=parse_grid(t_raw) if t_raw is not None else (),
        deltas=parse_grid(delta_raw) if delta_raw is not None else (),
        alphas=parse_grid(alpha_raw),
        alpha_max=num(getattr(args, "alpha_max", None), "alpha_max", float, 4.0),
        window=num(getattr(args, "window", None), "window", float, None),
        n_grid=num(getattr(args, "n_grid", None), "n_grid", int, 65),
        abs_tol=num(getattr(args, "abs_tol", None), "abs_tol", float, None),
        rel_tol=num(getattr(args, "rel_tol", None), "rel_tol", float, None),
        tolerance=num(getattr(args, "tolerance", None), "tolerance", float, None),
        output_dir=str(out_dir),
        format=str(pick(args.format, "format", "csv")),
        out=pick(args.out, "out"),
    )


# ---------------------------------------------------------------------------
# report emission


def _fmt(v) -> str:
    if isinstance(v, float):  # including numpy scalars
        return repr(float(v))
    return str(v)


def _emit(cfg: RunConfig, command: str, columns, rows, extra_meta=None) -> None:
    meta = {
        "command": command,
        "version": __version__,
        "zeros": cfg.zeros_path,
        "format": cfg.format,
    }
    if cfg.window is not None:
        meta["window"] = cfg.window
    if extra_meta:
        meta.update(extra_meta)

    if cfg.out is None:
        _write_report(sys.stdout, cfg.format, columns, rows, meta)
        return
    dest = Path(cfg.output_dir) / cfg.out
    dest.parent.mkdir(parents=True, exist_ok=True)
    with open(dest, "w", encoding="utf-8", newline="") as fh:
        _write_report(fh, cfg.format, columns, rows, meta)


def _write_report(stream, fmt, columns, rows, meta) -> None:
    if fmt == "csv":
        for key in sorted(meta):
            stream.write(f"# {key} = {_fmt(meta[key])}\n")
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_fmt(row[c]) for c in columns])
    else:
        payload = {"meta": meta, "rows": rows}
        json.dump(payload, stream, sort_keys=True)
        stream.write("\n")


def _top_t(cfg: RunConfig, table) -> tuple[float, ...]:
    return cfg.t_values if cfg.t_values else (table.max_height,)


# ---------------------------------------------------------------------------
# subcommands


def cmd_ingest(cfg: RunConfig, args) -> int:
    table = load_zero_file(cfg.zeros_path)
    print(f"count = {table.count}")
    print(f"max_height = {table.max_height!r}")
    print(f"sha256 = {table.source.sha256}")
    return 0


def cmd_fstat(cfg: RunConfig, args) -> int:
    table = load_zero_file(cfg.zeros_path)
    ts = _top_t(cfg, table)
    if len(ts) != 1:
        raise ConfigError("fstat tabulates one height; give a single --t-max")
    T = ts[0]
    deltas = cfg.deltas or (0.0,)
    columns = ["alpha", "delta", "re", "im", "trunc_bound", "gm", "chan_re",
               "chan_im"]
    rows = []
    for d in deltas:
        for a in cfg.alphas:
            est = f_delta(table, a, d, T, window=cfg.window)
            if 0.0 <= a <= 1.0:
                gm = gm_asymptotic(a, T)
                ch = chan_approx(a, d, T)
            else:
                gm = math.nan
                ch = complex(math.nan, math.nan)
            rows.append(
                {
                    "alpha": float(a),
                    "delta": float(d),
                    "re": float(est.value.real),
                    "im": float(est.value.imag),
                    "trunc_bound": float(est.truncation_bound),
                    "gm": float(gm),
                    "chan_re": float(ch.real),
                    "chan_im": float(ch.imag),
                }
            )
    _emit(cfg, "fstat", columns, rows, {"t": float(T)})
    return 0


def cmd_variance(cfg: RunConfig, args) -> int:
    table = load_zero_file(cfg.zeros_path)
    ts = _top_t(cfg, table)
    if args.stat == "logmoment":
        columns = ["t", "log_moment", "err_est"]
        rows = []
        for T in ts:
            val, err = empirical_log_moment(
                T, table, spec=cfg.spec(), with_error=True
            )
            rows.append({"t": float(T), "log_moment": val, "err_est": err})
        _emit(cfg, "variance", columns, rows, {"stat": "logmoment"})
        return 0

    if not cfg.deltas:
        raise ConfigError("--delta is required for the count statistics")
    for d in cfg.deltas:
        if not d > 0.0:
            raise ConfigError(f"delta must be positive here, got {d!r}")
    columns = ["t", "delta", "h", "number_variance", "s_variance"]
    rows = []
    for T in ts:
        for d in cfg.deltas:
            h = window_for_delta(d, T)
            nv = empirical_number_variance(table, T, h, d)
            sv = empirical_s_variance(table, T, h)
            rows.append(
                {
                    "t": float(T),
                    "delta": float(d),
                    "h": h,
                    "number_variance": nv,
                    "s_variance": sv,
                }
            )
    _emit(cfg, "variance", columns, rows, {"stat": "sweep"})
    return 0


def _breakdown_rows(rows, T, delta, pred):
    base = {
        "t": float(T),
        "delta": float(delta),
        "label": pred.label,
        "assumptions": "+".join(pred.assumptions),
        "err_est": pred.err_est,
    }
    rows.append(dict(base, term="total", value=pred.total))
    for name, value in pred.terms:
        rows.append(dict(base, term=name, value=value))


def cmd_predict(cfg: RunConfig, args) -> int:
    table = load_zero_file(cfg.zeros_path)
    ts = _top_t(cfg, table)
    if not cfg.deltas:
        raise ConfigError("--delta is required for predict")
    for d in cfg.deltas:
        if not d > 0.0:
            raise ConfigError(f"delta must be positive here, got {d!r}")
    mangoldt = sieve_mangoldt(max(100, math.floor(max(ts))))
    variant = args.variant
    columns = ["t", "delta", "label", "assumptions", "term", "value", "err_est"]
    rows = []
    for T in ts:
        f_tail, _ = f_tail_estimate(
            table, T, cfg.alpha_max, n_grid=cfg.n_grid, window=cfg.window
        )
        p11 = predict_thm_1_1(T, f_tail)
        _breakdown_rows(rows, T, 0.0, p11)
        for d in cfg.deltas:
            tail = tail_integral(
                table, d, T, cfg.alpha_max, n_grid=cfg.n_grid, window=cfg.window
            )
            kw = dict(
                alpha_max=cfg.alpha_max,
                n_grid=cfg.n_grid,
                window=cfg.window,
                variant=variant,
                tail=tail,
            )
            _breakdown_rows(rows, T, d, predict_thm_1_2(d, T, table, mangoldt, **kw))
            _breakdown_rows(rows, T, d, predict_thm_1_3(d, T, table, mangoldt, **kw))
            _breakdown_rows(rows, T, d, predict_thm_1_4(d, T, table, mangoldt, **kw))
            if d <= 1.0:
                _breakdown_rows(
                    rows, T, d,
                    predict_fujii(d, T, table, window=cfg.window,
                                  alpha_max=cfg.alpha_max, n_grid=cfg.n_grid),
                )
            _breakdown_rows(rows, T, d, predict_berry_nonuniversal(d, T, mangoldt))
            rows.append(
                {
                    "t": float(T),
                    "delta": float(d),
                    "label": "berry-universal",
                    "assumptions": "",
                    "term": "total",
                    "value": predict_berry_universal(d),
                    "err_est": 0.0,
                }
            )
    _emit(cfg, "predict", columns, rows, {"variant": variant})
    return 0


def cmd_compare(cfg: RunConfig, args) -> int:
    table = load_zero_file(cfg.zeros_path)
    ts = _top_t(cfg, table)
    if not cfg.deltas:
        raise ConfigError("--delta is required for compare")
    for d in cfg.deltas:
        if not d > 0.0:
            raise ConfigError(f"delta must be positive here, got {d!r}")
    mangoldt = sieve_mangoldt(max(100, math.floor(max(ts))))
    columns = [
        "t", "delta", "h", "empirical_per_t", "label", "predicted", "diff",
        "rel_err", "assumptions",
    ]
    rows = []
    for T in ts:
        for d in cfg.deltas:
            h = window_for_delta(d, T)
            sv = empirical_s_variance(table, T, h)
            tail = tail_integral(
                table, d, T, cfg.alpha_max, n_grid=cfg.n_grid, window=cfg.window
            )
            kw = dict(
                alpha_max=cfg.alpha_max,
                n_grid=cfg.n_grid,
                window=cfg.window,
                variant="s",
                tail=tail,
            )
            preds = [
                predict_thm_1_2(d, T, table, mangoldt, **kw),
                predict_thm_1_3(d, T, table, mangoldt, **kw),
                predict_thm_1_4(d, T, table, mangoldt, **kw),
            ]
            if d <= 1.0:
                preds.append(
                    predict_fujii(d, T, table, window=cfg.window,
                                  alpha_max=cfg.alpha_max, n_grid=cfg.n_grid)
                )
            rep = compare(sv, preds, T, tolerance=cfg.tolerance,
                          params={"delta": d, "h": h})
            for p, diff, rel in zip(rep.predictions, rep.differences,
                                    rep.rel_errors):
                rows.append(
                    {
                        "t": float(T),
                        "delta": float(d),
                        "h": h,
                        "empirical_per_t": rep.empirical_compared,
                        "label": p.label,
                        "predicted": p.total,
                        "diff": diff,
                        "rel_err": rel,
                        "assumptions": "+".join(p.assumptions),
                    }
                )
    _emit(cfg, "compare", columns, rows)
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--zeros", help="path to a zero-ordinate text table")
    shared.add_argument("--config", help="flat key = value config file")
    shared.add_argument("--t-max", dest="t_max",
                        help="height(s): number, comma list, or a:b:step")
    shared.add_argument("--delta", help="shift(s): number, comma list, or a:b:step")
    shared.add_argument("--alpha-max", dest="alpha_max",
                        help="upper end of the tail alpha range")
    shared.add_argument("--window", help="pair-sum window override")
    shared.add_argument("--n-grid", dest="n_grid", help="tail grid size")
    shared.add_argument("--abs-tol", dest="abs_tol", help="quadrature abs tol")
    shared.add_argument("--rel-tol", dest="rel_tol", help="quadrature rel tol")
    shared.add_argument("--tolerance", help="reported comparison tolerance")
    shared.add_argument("--output-dir", dest="output_dir",
                        help="report directory (env ZETAVAR_OUTPUT_DIR)")
    shared.add_argument("--format", choices=("csv", "json"),
                        help="report format (default csv)")
    shared.add_argument("--out", help="report file name (default: stdout)")

    parser = argparse.ArgumentParser(
        prog="zetavar",
        description="zero statistics on the critical line, batch interface",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", parents=[shared],
                       help="validate and cache a zero table")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("fstat", parents=[shared],
                       help="pair-correlation table over an alpha grid")
    p.add_argument("--alpha", help="alpha grid: number, comma list, or a:b:step")
    p.set_defaults(func=cmd_fstat)

    p = sub.add_parser("variance", parents=[shared],
                       help="empirical count/log statistics")
    p.add_argument("--stat", choices=("sweep", "logmoment"), default="sweep")
    p.set_defaults(func=cmd_variance)

    p = sub.add_parser("predict", parents=[shared],
                       help="prediction formulas with term breakdowns")
    p.add_argument("--variant", choices=("log", "s"), default="log")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("compare", parents=[shared],
                       help="empirical S-variance against the predictions")
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse prints its own message
        return int(exc.code or 0)
    try:
        cfg = _resolve(args)
        return args.func(cfg, args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 4
    except DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
