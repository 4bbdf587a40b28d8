"""The auxiliary weights f, g, h and the transform h_hat.

f rolls a prime-power sum off near n = x, g is its companion under the
identity u g(u) + f(u) = 1, and h is the kernel that localizes a zero
sum near height t.  Everything the heavier demos build on is visible
here at a glance: the identity, the seam of the piecewise transform,
agreement with a direct Fourier integral, and the absolute-integral
bound that makes the zero sums absolutely convergent.
"""

import numpy as np

from zetavar import special as sp

u = np.linspace(0.005, 1.995, 200)
resid = u * sp.g_weight(u) + sp.f_weight(u) - 1.0
print("identity u*g(u) + f(u) = 1")
print(f"  max |residual| on 200 points: {np.max(np.abs(resid)):.3e}")

print("\nsample values")
for v in (0.25, 0.5, 1.0, 1.5):
    print(f"  f({v:4.2f}) = {sp.f_weight(v):+.6f}   g({v:4.2f}) = {sp.g_weight(v):+.6f}")
for v in (0.5, 1.0, np.pi / 2, 3.3):
    print(f"  h({v:5.3f}) = {sp.h_weight(v):+.6f}")
print("  (h vanishes at pi/2 and decays like 2G cos(u)/u^2)")

seam = 1.0 / (2.0 * np.pi)
print("\ntransform h_hat: piecewise in |a|, seam at a = 1/(2 pi)")
print(f"  h_hat(0)          = {sp.h_hat(0.0):.12f}  (= pi log 2)")
print(f"  h_hat(seam-)      = {sp.h_hat(np.nextafter(seam, 0.0)):.12f}")
print(f"  h_hat(seam)       = {sp.h_hat(seam):.12f}  (= pi)")
print(f"  h_hat(seam+)      = {sp.h_hat(np.nextafter(seam, 1.0)):.12f}")
print(f"  h_hat(2)          = {sp.h_hat(2.0):.12f}  (= 1/(4 a^2) regime)")

a = 0.3
total = 0.0
U = 800.0
# direct Fourier integral: Gauss-Legendre panels of width pi/4 plus the
# closed-form 2G cos(u)/u^2 tail; compare with the closed form
edges = np.arange(1.0, U, np.pi / 4)
edges = np.append(edges, U)
xg, wg = np.polynomial.legendre.leggauss(12)
mid = 0.5 * (edges[:-1] + edges[1:])
half = 0.5 * (edges[1:] - edges[:-1])
nodes = (mid[:, None] + half[:, None] * xg[None, :]).ravel()
hv = sp.h_weight_many(nodes, tol=1e-12)
body = float(np.sum((hv * np.cos(2 * np.pi * a * nodes)).reshape(-1, 12)
                    * wg[None, :] * half[:, None]))
s = np.linspace(1e-9, 30.0, 20001)
uu = np.exp(-s)
head = float(np.trapezoid(sp.h_weight_many(uu, tol=1e-12)
                          * np.cos(2 * np.pi * a * uu) * uu, s))
direct = 2.0 * (head + body)  # tail past U ignored: O(2G/U)
print(f"\nFourier check at a = {a}")
print(f"  2 int_0^{U:.0f} h(u) cos(2 pi a u) du ~ {direct:.8f}")
print(f"  h_hat({a})                    = {sp.h_hat(a):.8f}")
print(f"  difference                    = {abs(direct - sp.h_hat(a)):.2e}"
      f"  (tail bound {2 * sp.CATALAN / U:.1e})")

quad_u = np.linspace(1e-6, 60.0, 600001)
abs_int = 2.0 * float(np.trapezoid(np.abs(sp.h_weight_many(quad_u, tol=1e-10)), quad_u))
print(f"\nint |h| over the line ~ {abs_int:.6f} <= pi^2 = {np.pi**2:.6f}")
