"""M-period propagation through the Fourier blocks and derived observables."""

from __future__ import annotations

import cmath
import math

import numpy as np

from .algebra import Regime, det2
from .errors import ConsistencyError, DomainError
from .network import NetworkSpec, build_Kn, fourier_pair_basis, roots_of_unity, sector_gamma
from .spectrum import gamma_all

SERIES_CUTOFF = 1e-6
KN_TOL = 1e-10
# Sector coefficients below this multiple of N * eps * |state| are rounding
# noise of the basis change; growing sectors would amplify them by e^(M gamma).
NOISE_FLOOR = 8.0


def sinh_ratio(gamma: complex, M: int) -> complex:
    """``sinh(M gamma) / sinh(gamma)``, continuous through the zeros of ``sinh``.

    ``gamma`` is reduced by the nearest multiple of ``i pi``; near zero the
    series ``M (1 + (M^2 - 1) eps^2 / 6)`` is used.
    """
    gamma = complex(gamma)
    j = round(gamma.imag / math.pi)
    eps = gamma - 1j * math.pi * j
    sign = -1.0 if (j * (M - 1)) % 2 else 1.0
    if abs(eps) < SERIES_CUTOFF:
        return sign * M * (1.0 + (M * M - 1) * eps * eps / 6.0)
    return sign * cmath.sinh(M * eps) / cmath.sinh(eps)


def kn_power(K: np.ndarray, gamma: complex, M: int) -> np.ndarray:
    """Closed-form ``K**M`` for a unimodular 2x2 ``K`` with ``cosh(gamma) = tr(K)/2``.

    ``K**M = cosh(M gamma) I + r_M (K - cosh(gamma) I)`` with
    ``r_M = sinh(M gamma) / sinh(gamma)``.
    """
    if int(M) != M or M < 0:
        raise DomainError(f"M must be a non-negative integer, got {M!r}")
    scale = max(1.0, float(np.abs(K).max()))
    if abs(det2(K) - 1.0) > KN_TOL * scale * scale:
        raise ConsistencyError("K is not unimodular")
    half_trace = 0.5 * (K[0, 0] + K[1, 1])
    if abs(cmath.cosh(gamma) - half_trace) > KN_TOL * scale:
        raise ConsistencyError("gamma is inconsistent with the trace of K")
    if M == 0:
        return np.eye(2, dtype=complex)
    return cmath.cosh(M * gamma) * np.eye(2) + sinh_ratio(gamma, M) * (K - half_trace * np.eye(2))


def superposition_input(N: int, n: int) -> np.ndarray:
    """``[1, 0, w^n, 0, w^(2n), 0, ...] / sqrt(N)`` with ``w = exp(2 pi i / N)``."""
    if not 0 <= n < N:
        raise DomainError(f"phase index must satisfy 0 <= n < {N}, got {n}")
    v = np.zeros(2 * N, dtype=complex)
    v[0::2] = roots_of_unity(N)[(n * np.arange(N)) % N] / math.sqrt(N)
    return v


def single_mode_input(N: int, j: int) -> np.ndarray:
    """Unit vector on mode ``j`` (1-based, ``1 <= j <= 2N``)."""
    if not 1 <= j <= 2 * N:
        raise DomainError(f"mode index must satisfy 1 <= j <= {2 * N}, got {j}")
    v = np.zeros(2 * N, dtype=complex)
    v[j - 1] = 1.0
    return v


def propagate(state, spec: NetworkSpec) -> np.ndarray:
    """Apply ``P**M`` to ``state`` sector by sector.

    The state is expanded in the Fourier pair basis, each sector is
    multiplied by the closed-form ``K_n**M`` and the result is transformed
    back. Coefficients at the rounding floor of the expansion are treated
    as exact zeros, so that e.g. a pure ``n = 0`` input stays in its sector.
    """
    v = np.asarray(state, dtype=complex)
    if v.shape != (spec.dim,):
        raise DomainError(f"state must have length {spec.dim}, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise DomainError("state has non-finite entries")
    W = fourier_pair_basis(spec.N)
    c = (W.conj().T @ v).reshape(spec.N, 2)
    c[np.abs(c) <= NOISE_FLOOR * spec.dim * np.finfo(float).eps * np.linalg.norm(v)] = 0.0
    for n in range(spec.N):
        Kp = kn_power(build_Kn(spec, n), sector_gamma(spec, n), spec.M)
        c[n] = Kp @ c[n]
    return W @ c.reshape(-1)


def single_mode_output_amplitude(spec: NetworkSpec, n: int) -> complex:
    """Amplitude on mode ``2n+1`` for unit input on mode ``2n+1`` (1-based).

    Evaluates ``(1/N) sum_m [cosh(M g_m) + i sin(2 pi m/N) sinh(M g_m)/sinh(g_m)]``,
    valid under the Ising constraint where ``sinh(theta) sinh(phi) = 1``.
    """
    if not spec.ising_constrained:
        raise DomainError("single-mode amplitude formula requires an Ising-constrained spec")
    if not 0 <= n < spec.N:
        raise DomainError(f"sector index must satisfy 0 <= n < {spec.N}, got {n}")
    M = spec.M
    total = 0j
    for m, g in enumerate(gamma_all(spec)):
        total += cmath.cosh(M * g) + 1j * math.sin(2 * math.pi * m / spec.N) * sinh_ratio(g, M)
    return total / spec.N


def output_intensities(state) -> np.ndarray:
    return np.abs(np.asarray(state)) ** 2


def j_form_value(state) -> float:
    """``sum_k |a_k|^2 - |b_k|^2`` for an interleaved mode vector."""
    s = np.abs(np.asarray(state)) ** 2
    return float(s[0::2].sum() - s[1::2].sum())


def global_amplification(spec: NetworkSpec) -> float:
    """Growth exponent ``M * gamma_0`` of the uniform (``n = 0``) sector."""
    if spec.regime is not Regime.SU11 or not spec.ising_constrained:
        raise DomainError("global amplification is defined for Ising-constrained SU(1,1) networks")
    return spec.M * sector_gamma(spec, 0).real


def phase_sensitivity(spec: NetworkSpec) -> float:
    """How strongly the response depends on the input phase index.

    ``max_n ||K_n - Kbar||_F / ||Kbar||_F`` with ``Kbar`` the average of the
    blocks over ``n``, i.e. the phase-insensitive part of the response.
    Along the Ising-constrained family this equals ``1 / cosh(phi)``.
    """
    if spec.regime is not Regime.SU11 or not spec.ising_constrained:
        raise DomainError("phase sensitivity is defined for Ising-constrained SU(1,1) networks")
    K = np.stack([build_Kn(spec, n) for n in range(spec.N)])
    Kbar = K.mean(axis=0)
    dev = np.linalg.norm(K - Kbar, axis=(1, 2)).max()
    return float(dev / np.linalg.norm(Kbar))
