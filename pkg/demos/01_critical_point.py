# Critical point of the Ising-analogue network.
#
# The node pair (theta, phi) is tied by coth(theta) = cosh(phi). At the
# self-dual point theta = phi the zero mode stops growing, and the network
# passes a uniform superposition through unchanged.

import math

import numpy as np

from isingnet import NetworkSpec, Regime, critical_point, gamma_all, propagate, superposition_input

cp = critical_point(Regime.SU11)
print("phi_c        =", cp.phi_c)
print("G_c          =", cp.gain)
print("kT_c / eps   =", cp.kTc_over_eps)

# gamma_n for a ring of 8 at the critical point: the n = 0 entry vanishes
spec = NetworkSpec.ising(8, cp.phi_c, M=16)
print("gamma_n      =", np.round(gamma_all(spec).real, 6))

# transparency: 16 periods later the superposition is where it started
v = superposition_input(8, 0)
out = propagate(v, spec)
print("max |out-in| =", np.abs(out - v).max())

# away from phi_c the same input grows (or decays) like exp(M gamma_0)
for phi in (0.6, cp.phi_c, 1.2):
    g0 = gamma_all(NetworkSpec.ising(8, phi))[0].real
    print(f"phi={phi:.4f}  gamma_0={g0:.5f}  gain over 16 periods={math.exp(16 * g0):.3f}")
