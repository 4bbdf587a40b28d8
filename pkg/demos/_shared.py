"""Zero table used by the demo scripts.

Reuses the big generated table under var/ when the test suite has
already built it; otherwise generates a short one on the spot (about
twenty seconds of sign-scanning).
"""

import math
import pathlib

from scipy.special import lambertw

from zetavar.zeros import ZeroTable, load_zero_file, make_table

_VAR_TABLE = pathlib.Path(__file__).resolve().parent.parent / "var" / "zeros_100k.txt"


def demo_table(n: int = 2000) -> ZeroTable:
    if _VAR_TABLE.exists():
        full = load_zero_file(_VAR_TABLE)
        if full.count >= n:
            return make_table(full.ordinates[:n])
    from zetavar._zerogen import generate_ordinates

    # counting-function inverse: the n-th ordinate sits near 2 pi n / W(n/e)
    t_max = 1.05 * 2.0 * math.pi * n / float(lambertw(n / math.e).real) + 20.0
    return make_table(generate_ordinates(t_max=t_max, n_stop=n))
