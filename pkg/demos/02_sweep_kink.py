# Sweep gamma_0 across the transition and locate the kink in its derivative.
#
# One-sided finite differences are smooth everywhere except at phi_c, where
# the left and right slopes differ by a finite jump.

import math

import numpy as np

from isingnet import locate_kink, sweep_gamma0

rows = sweep_gamma0(0.3, 1.6, 400, 1e-5)
kink = locate_kink(rows)

print("kink at phi     =", kink.phi, " (arccosh(sqrt 2) =", math.acosh(math.sqrt(2)), ")")
print("derivative jump =", kink.jump)
print("background      =", kink.background)
print("ratio           =", kink.ratio)

phi = np.array([r.phi for r in rows])
g0 = np.array([r.gamma0 for r in rows])
for p in (0.3, 0.6, 0.85, kink.phi, 0.92, 1.2, 1.6):
    i = int(np.argmin(np.abs(phi - p)))
    print(f"  phi={phi[i]:.4f}  gamma0={g0[i]: .6f}  {rows[i].regime_label}")
