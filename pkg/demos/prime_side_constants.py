"""The prime side: sieved von Mangoldt sums and their closed forms.

A smooth-cutoff sum over prime powers turns out to equal a cosine
integral plus a slowly varying constant c(delta); that bridge, the
constant a entering the log-moment prediction, and the classical
Mertens-type sums are all shown against their sieve evaluations.
"""

import math

from zetavar.special import cin
from zetavar.primes import (
    c_of,
    c_tilde,
    goldston_a,
    mertens_sum,
    prime_variance_sum,
    sieve_mangoldt,
)

mt = sieve_mangoldt(1_000_000)
print(f"sieve: Lambda(n) for n <= {len(mt.lam) - 1:,}")
print(f"  Lambda(8) = {mt.lam[8]:.6f} (= log 2), Lambda(12) = {mt.lam[12]} (12 is not a prime power)")

T = 1e5
print(f"\nprime variance sum vs cin(delta log T) + c(delta) at T = {T:g}")
print("delta    sum        bridge     |diff|")
for delta in (0.1, 0.5, 1.0, 2.0):
    s = prime_variance_sum(delta, T, mt)
    bridge = cin(delta * math.log(T)) + c_of(delta, mt)
    print(f" {delta:4.2f}  {s:9.5f}  {bridge:9.5f}  {abs(s - bridge):.2e}")

print("\nthe constant c(delta) and its companion c~(delta):")
for delta in (0.25, 1.0, 4.0):
    print(f"  c({delta:4.2f}) = {c_of(delta, mt):+9.6f}   c~({delta:4.2f}) = {c_tilde(delta):+9.6f}")

print("\nmertens_sum(x) = sum Lambda^2(n)/(n log^2 n): grows like log log x + gamma + K")
for x in (1e3, 1e5, 1e6):
    model = math.log(math.log(x)) + 0.5772156649 - 0.1762478333
    print(f"  x = {x:7g}: {mertens_sum(x, mt):+.8f}   (log log x + gamma + K = {model:+.8f})")

print("\nlog-moment slope a as a function of the assumed tail integral:")
for f_tail, label in ((1.0, "strong pair-correlation value"),
                      (0.75, "data-style tail")):
    print(f"  a({f_tail:4.2f}) = {goldston_a(f_tail):.8f}   ({label})")
