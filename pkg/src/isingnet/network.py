"""One-period transfer matrix of the 2N-mode network and its Fourier blocks.

Modes are ordered ``(a_1, b_1, a_2, b_2, ..., a_N, b_N)``. The A nodes mix
``(a_k, b_k)``; the B nodes mix ``(b_k, a_{k+1})`` with the last pair
``(b_N, a_1)`` wrapping around. One period applies the A column first and
then the B column, so that on column vectors ``P = B_layer @ A_layer``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import block_diag

from .algebra import (
    DET_TOL,
    Rapidity,
    Regime,
    arccosh_from_excess,
    ccosh,
    cosh_excess,
    csinh,
    det2,
    ising_partner_theta,
    node_matrix,
)
from .errors import ConsistencyError, DomainError, SpecError

CONSTRAINT_TOL = 1e-10
OFF_BLOCK_TOL = 1e-8
BLOCK_MATCH_TOL = 1e-10


@dataclass(frozen=True)
class NetworkSpec:
    """Full description of one network.

    Parameters
    ----------
    N : int
        Node pairs per column (2N modes), at least 2.
    M : int
        Number of periods.
    theta, phi : Rapidity
        Angles of the A and B nodes.
    regime : Regime
    ising_constrained : bool
        Whether ``coth(theta) = cosh(phi)`` is imposed (SU11 only).
    """

    N: int
    M: int
    theta: Rapidity
    phi: Rapidity
    regime: Regime = Regime.SU11
    ising_constrained: bool = False

    def __post_init__(self):
        if isinstance(self.N, bool) or int(self.N) != self.N or self.N < 2:
            raise SpecError(f"N must be an integer >= 2, got {self.N!r}")
        if isinstance(self.M, bool) or int(self.M) != self.M or self.M < 0:
            raise SpecError(f"M must be a non-negative integer, got {self.M!r}")
        object.__setattr__(self, "regime", Regime(self.regime))
        for name in ("theta", "phi"):
            r = getattr(self, name)
            if not isinstance(r, Rapidity):
                raise SpecError(f"{name} must be a Rapidity")
            if r.regime is not self.regime:
                raise SpecError(f"{name} regime {r.regime.value} does not match {self.regime.value}")
        if self.ising_constrained:
            if self.regime is not Regime.SU11:
                raise SpecError("the Ising constraint is only defined for SU(1,1) networks")
            t, p = self.theta.angle, self.phi.angle
            if t <= 0 or p <= 0 or abs(1.0 / math.tanh(t) - math.cosh(p)) > CONSTRAINT_TOL * math.cosh(p):
                raise SpecError("ising_constrained spec violates coth(theta) = cosh(phi)")

    @classmethod
    def ising(cls, N: int, phi: float, M: int = 1) -> NetworkSpec:
        """SU(1,1) network with theta fixed by the Ising constraint."""
        p = Rapidity.su11(phi)
        return cls(N, M, ising_partner_theta(p), p, Regime.SU11, True)

    @classmethod
    def su11(cls, N: int, theta: float, phi: float, M: int = 1) -> NetworkSpec:
        return cls(N, M, Rapidity.su11(theta), Rapidity.su11(phi), Regime.SU11, False)

    @classmethod
    def su2(cls, N: int, phi_prime: float, theta_prime: float = math.pi / 4, M: int = 1) -> NetworkSpec:
        """Beam-splitter network with rapidities ``i*theta_prime`` and ``i*phi_prime``."""
        return cls(N, M, Rapidity.su2(theta_prime), Rapidity.su2(phi_prime), Regime.SU2, False)

    @property
    def dim(self) -> int:
        return 2 * self.N

    def with_M(self, M: int) -> NetworkSpec:
        return NetworkSpec(self.N, M, self.theta, self.phi, self.regime, self.ising_constrained)


def a_layer(spec: NetworkSpec) -> np.ndarray:
    return np.kron(np.eye(spec.N), node_matrix(spec.theta))


def b_layer(spec: NetworkSpec) -> np.ndarray:
    B = node_matrix(spec.phi)
    d = spec.dim
    out = np.eye(d, dtype=complex)
    for k in range(spec.N - 1):
        i = 2 * k + 1
        out[i:i + 2, i:i + 2] = B
    # pair (b_N, a_1) wraps around the corners
    out[0, 0] = B[1, 1]
    out[0, d - 1] = B[1, 0]
    out[d - 1, 0] = B[0, 1]
    out[d - 1, d - 1] = B[0, 0]
    return out


def build_P(spec: NetworkSpec) -> np.ndarray:
    """Transfer matrix over one period: A column, then the shifted B column."""
    return b_layer(spec) @ a_layer(spec)


def roots_of_unity(N: int) -> np.ndarray:
    """``exp(2 pi i m / N)`` for ``m = 0..N-1`` with exact quarter turns and
    exact conjugate symmetry ``r[N - m] = conj(r[m])``."""
    r = np.empty(N, dtype=complex)
    for m in range(N):
        if 4 * m % N == 0:
            r[m] = (1, 1j, -1, -1j)[4 * m // N]
        elif 2 * m < N:
            r[m] = complex(math.cos(2 * math.pi * m / N), math.sin(2 * math.pi * m / N))
        else:
            r[m] = r[N - m].conjugate()
    return r


def dft_matrix(N: int) -> np.ndarray:
    """Unitary DFT, ``F[k, l] = omega**(k*l) / sqrt(N)`` with ``omega = exp(2 pi i / N)``.

    Indices are 0-based, so ``F^H S F = diag(1, omega, ..., omega**(N-1))``.
    """
    if N < 1:
        raise DomainError("N must be >= 1")
    k = np.arange(N)
    return roots_of_unity(N)[np.outer(k, k) % N] / math.sqrt(N)


def shift_matrix(N: int) -> np.ndarray:
    """Cyclic shift with ones at ``(k, k+1)`` and ``(N-1, 0)``."""
    if N < 1:
        raise DomainError("N must be >= 1")
    return np.roll(np.eye(N), 1, axis=1)


def fourier_pair_basis(N: int) -> np.ndarray:
    """Unitary ``W`` with ``W^H P W = blockdiag(K_0, ..., K_{N-1})``.

    Columns ``2n`` and ``2n+1`` span sector ``n``::

        a-column: a_k = omega**(n*(k-1)) / sqrt(N),  b entries zero
        b-column: b_k = -omega**(n*k) / sqrt(N),     a entries zero

    (1-based ``k``). This is the DFT acting on both members of every
    ``(a_k, b_k)`` pair, with the b member carrying an extra ``-omega**n``.
    That phase and the sign of ``n`` are the conventions under which the
    blocks reproduce :func:`build_Kn` exactly.
    """
    r = roots_of_unity(N)
    k = np.arange(N)
    phase = r[np.outer(k, k) % N] / math.sqrt(N)
    omega_n = r
    W = np.zeros((2 * N, 2 * N), dtype=complex)
    W[0::2, 0::2] = phase
    W[1::2, 1::2] = -phase * omega_n
    return W


def build_Kn(spec: NetworkSpec, n: int) -> np.ndarray:
    """Sector ``n`` block of the transfer matrix.

    With ``C = cosh`` and ``S = i sinh``::

        [[C(t)C(p) + S(t)S(p) w^-n,   C(t)S(p) - C(p)S(t) w^n ],
         [-C(t)S(p) + C(p)S(t) w^-n,  C(t)C(p) + S(t)S(p) w^n ]]

    where ``w = exp(2 pi i / N)``.
    """
    if not 0 <= n < spec.N:
        raise DomainError(f"sector index must satisfy 0 <= n < {spec.N}, got {n}")
    t, p = spec.theta.value, spec.phi.value
    Ct, Cp = ccosh(t), ccosh(p)
    St, Sp = 1j * csinh(t), 1j * csinh(p)
    w = complex(roots_of_unity(spec.N)[n])
    wc = w.conjugate()
    return np.array(
        [
            [Ct * Cp + St * Sp * wc, Ct * Sp - Cp * St * w],
            [-Ct * Sp + Cp * St * wc, Ct * Cp + St * Sp * w],
        ],
        dtype=complex,
    )


@dataclass(frozen=True)
class BlockSpectrum:
    """Per-sector blocks ``K[n]`` (shape ``(N, 2, 2)``) and exponents ``gamma[n]``."""

    K: np.ndarray
    gamma: np.ndarray

    @property
    def N(self) -> int:
        return len(self.gamma)

    def __iter__(self):
        for n in range(self.N):
            yield n, self.K[n], complex(self.gamma[n])

    def blockdiag(self) -> np.ndarray:
        return block_diag(*self.K)


def sector_gamma(spec: NetworkSpec, n: int) -> complex:
    return arccosh_from_excess(cosh_excess(spec.theta.value, spec.phi.value, n, spec.N))


def block_decompose(spec: NetworkSpec) -> BlockSpectrum:
    """Conjugate ``P`` into the Fourier pair basis and read off the 2x2 blocks.

    Raises
    ------
    ConsistencyError
        If the conjugated matrix is not block diagonal, or a block disagrees
        with the closed form of :func:`build_Kn`.
    """
    P = build_P(spec)
    W = fourier_pair_basis(spec.N)
    T = W.conj().T @ P @ W
    mask = np.kron(np.eye(spec.N), np.ones((2, 2))).astype(bool)
    off = np.abs(T[~mask]).max(initial=0.0)
    scale = max(1.0, np.abs(T).max())
    if off > OFF_BLOCK_TOL * scale:
        raise ConsistencyError(f"Fourier-conjugated P is not block diagonal (off-block {off:.3e})")
    K = np.stack([T[2 * n:2 * n + 2, 2 * n:2 * n + 2] for n in range(spec.N)])
    for n in range(spec.N):
        ref = build_Kn(spec, n)
        err = np.abs(K[n] - ref).max()
        if err > BLOCK_MATCH_TOL * max(1.0, np.abs(ref).max()):
            raise ConsistencyError(f"block {n} differs from closed form by {err:.3e}")
        if abs(det2(K[n]) - 1.0) > DET_TOL * max(1.0, np.abs(ref).max() ** 2):
            raise ConsistencyError(f"block {n} is not unimodular")
    gamma = np.array([sector_gamma(spec, n) for n in range(spec.N)])
    return BlockSpectrum(K, gamma)


def j_form(N: int) -> np.ndarray:
    """Indefinite metric ``diag(+1, -1, +1, -1, ...)`` preserved by SU(1,1) networks."""
    return np.diag(np.tile([1.0, -1.0], N))
