"""Exception types shared across the package.

Two broad families matter to callers (and to the command-line tool's exit
codes): problems with input data (`DataError`, exit code 3) and numerical
failures (`NumericalError`, exit code 4).  Everything else is a plain
`ValueError`/`TypeError` style usage error (exit code 2).
"""

from __future__ import annotations


class ZetaVarError(Exception):
    """Base class for package-specific errors."""


class DataError(ZetaVarError):
    """Problems with input data files or tables."""


class ParseError(DataError):
    """A zero file line could not be parsed.  Carries the 1-based line number."""

    def __init__(self, path: str, line_number: int, line: str):
        self.path = path
        self.line_number = line_number
        self.line = line
        super().__init__(
            f"{path}:{line_number}: cannot parse ordinate from {line!r}"
        )


class MonotonicityError(DataError):
    """Ordinates were not strictly increasing.  Carries the offending index."""

    def __init__(self, path: str, index: int, value: float, previous: float):
        self.path = path
        self.index = index
        super().__init__(
            f"{path}: ordinate #{index} = {value!r} does not exceed "
            f"its predecessor {previous!r}"
        )


class CountMismatchError(DataError):
    def __init__(self, path: str, expected: int, actual: int):
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"{path}: expected {expected} ordinates, found {actual}"
        )


class EmptyTableError(DataError):
    def __init__(self, path: str):
        super().__init__(f"{path}: no ordinates found")


class CoverageError(DataError):
    """A computation needs the zero table to reach a height it does not."""

    def __init__(self, required: float, available: float, what: str = ""):
        self.required = required
        self.available = available
        note = f" for {what}" if what else ""
        super().__init__(
            f"zero table reaches {available:g} but height {required:g} is "
            f"required{note}"
        )


class SeparationError(ZetaVarError):
    """No evaluation point far enough from all ordinates could be found."""

    def __init__(self, achieved: float, required: float):
        self.achieved = achieved
        self.required = required
        super().__init__(
            f"best separation from ordinates is {achieved:.6g}, "
            f"below the required {required:.6g}"
        )


class NumericalError(ZetaVarError):
    """Numerical procedure failed to reach its target accuracy."""


class QuadratureError(NumericalError):
    """Subdivision budget exhausted.  Carries the best estimate so far."""

    def __init__(self, message: str, best_estimate: float, err_est: float):
        self.best_estimate = best_estimate
        self.err_est = err_est
        super().__init__(
            f"{message} (best estimate {best_estimate!r}, "
            f"error estimate {err_est:.3g})"
        )


class ZeroProximityError(NumericalError):
    """log|zeta| requested at (or numerically at) a zero of Z."""

    def __init__(self, t: float, detail: str = ""):
        self.t = t
        note = f": {detail}" if detail else ""
        super().__init__(f"log|zeta(1/2 + it)| is singular at t = {t!r}{note}")
