# How different the sector blocks are from one another.
#
# Deep in the quantum regime (small phi) the blocks depend strongly on the
# Fourier index; in the classical regime they all look alike and the network
# forgets about phases.

import numpy as np

from isingnet import NetworkSpec, phase_sensitivity, regime_classify

for phi in np.linspace(0.2, 3.0, 8):
    spec = NetworkSpec.ising(8, phi)
    print(f"phi={phi:.2f}  sinh(phi)={np.sinh(phi):6.3f}  S={phase_sensitivity(spec):.4f}  {regime_classify(spec)}")
