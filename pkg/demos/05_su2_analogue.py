# The SU(2) (beam-splitter) version of the network.
#
# Imaginary rapidities make every node unitary: the total intensity is kept,
# gamma_n is purely imaginary, and the critical point sits at phi' = pi/4,
# a 50/50 splitter.

import math

import numpy as np

from isingnet import NetworkSpec, Regime, critical_point, propagate, regime_classify, su2_gamma0
from isingnet.spectrum import transmittance

cp = critical_point(Regime.SU2)
print("phi'_c =", cp.phi_c, " t_c =", cp.gain)

for p in (math.pi / 8, math.pi / 4, 3 * math.pi / 8):
    spec = NetworkSpec.su2(6, p)
    print(f"phi'={p:.4f}  T={transmittance(p):.4f}  gamma_0={su2_gamma0(p):.4f}  {regime_classify(spec)}")

rng = np.random.default_rng(0)
v = rng.normal(size=12) + 1j * rng.normal(size=12)
out = propagate(v, NetworkSpec.su2(6, 0.3, M=50))
print("norm in / out:", np.linalg.norm(v), np.linalg.norm(out))
