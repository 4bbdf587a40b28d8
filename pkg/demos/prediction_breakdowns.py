"""Term-by-term breakdowns of the variance predictions.

Three routes to the same per-unit-height variance bracket are printed
side by side, then the small-shift regime where the universal Berry
curve and the Fujii-style route should (and do) meet.
"""

from _shared import demo_table
from zetavar import paircorr as pc
from zetavar import variance as va
from zetavar.primes import sieve_mangoldt

table = demo_table(2000)
T = table.max_height
mt = sieve_mangoldt(100_000)

delta = 1.0
tail = pc.tail_integral(table, delta, T, 4.0)
print(f"predictions at T = {T:.1f}, delta = {delta} (data tail {tail[0]:.4f})\n")
for maker in (va.predict_thm_1_2, va.predict_thm_1_3, va.predict_thm_1_4):
    b = maker(delta, T, table, mt, tail=tail)
    print(f"{b.label}: total = {b.total:.5f}  (err est {b.err_est:.1e})")
    for name, value in b.terms:
        print(f"    {name:24s} {value:+.5f}")
    if b.assumptions:
        print(f"    assumes: {', '.join(b.assumptions)}")
    print()

print("small shifts: universal curve vs data-driven route")
print("delta    berry     fujii     |diff|")
for d in (0.25, 0.5, 1.0):
    b = va.predict_berry_universal(d)
    f = va.predict_fujii(d, T, table).total
    print(f" {d:4.2f}  {b:8.5f}  {f:8.5f}  {abs(b - f):8.5f}")

print("\nberry limit: V(delta) -> delta - delta^2 as delta -> 0")
for d in (1e-2, 1e-3, 1e-4):
    v = va.predict_berry_universal(d)
    print(f"  delta = {d:7.0e}: V = {v:.10f}, delta - delta^2 = {d - d * d:.10f}")
