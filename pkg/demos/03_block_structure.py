# The 2N x 2N period matrix P is block-circulant. In the Fourier pair basis
# it splits into N independent 2 x 2 blocks K_n, and the eigenvalues of P
# are exp(+-gamma_n).

import numpy as np

from isingnet import NetworkSpec, block_decompose, build_P, fourier_pair_basis
from isingnet.oracle import EigenMultiset, compare_multisets, dense_eigenvalues

spec = NetworkSpec.su11(5, theta=0.7, phi=0.4)
P = build_P(spec)
W = fourier_pair_basis(spec.N)
bs = block_decompose(spec)

print("P is", P.shape, "; det P =", np.linalg.det(P))
print("reconstruction error =", np.abs(W @ bs.blockdiag() @ W.conj().T - P).max())

for n, K, g in bs:
    print(f"n={n}  tr K/2={np.trace(K).real / 2:.6f}  cosh(gamma)={np.cosh(g).real:.6f}")

closed = EigenMultiset.of(np.concatenate([np.exp(bs.gamma), np.exp(-bs.gamma)]))
report = compare_multisets(dense_eigenvalues(P), closed, 1e-8)
print("dense eig vs closed form:", report.method, report.max_distance)
