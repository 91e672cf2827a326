"""Brute-force references used to check the closed forms.

Nothing here goes through the Fourier decomposition: the transfer matrix is
assembled entry by entry from index rules and its spectrum comes from a
general dense eigensolver (LAPACK via :func:`numpy.linalg.eig`).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import DomainError, NumericalFailure
from .network import NetworkSpec

MAX_EIG_DIM = 64
RESIDUAL_TOL = 1e-7


def _node(a: complex):
    c, s = cmath.cosh(a), cmath.sinh(a)
    return ((c, 1j * s), (-1j * s, c))


def dense_P_reference(spec: NetworkSpec) -> np.ndarray:
    d = 2 * spec.N
    A = _node(spec.theta.value)
    B = _node(spec.phi.value)
    a_lay = np.zeros((d, d), dtype=complex)
    b_lay = np.zeros((d, d), dtype=complex)
    for r in range(d):
        for c in range(d):
            # A pairs: modes (2k, 2k+1), 0-based
            if r // 2 == c // 2:
                a_lay[r, c] = A[r % 2][c % 2]
            # B pairs: modes (2k+1, 2k+2 mod d); shift by one to reuse the rule
            rs, cs = (r - 1) % d, (c - 1) % d
            if rs // 2 == cs // 2:
                b_lay[r, c] = B[rs % 2][cs % 2]
    out = np.zeros((d, d), dtype=complex)
    for r in range(d):
        for c in range(d):
            out[r, c] = sum(b_lay[r, k] * a_lay[k, c] for k in range(d))
    return out


def dense_power(mtx: np.ndarray, M: int) -> np.ndarray:
    mtx = np.asarray(mtx)
    if mtx.ndim != 2 or mtx.shape[0] != mtx.shape[1]:
        raise DomainError("matrix must be square")
    out = np.eye(mtx.shape[0], dtype=complex)
    for _ in range(M):
        out = mtx @ out
    return out


@dataclass(frozen=True)
class EigenMultiset:
    """Eigenvalues sorted by real part, then imaginary part."""

    values: np.ndarray

    @classmethod
    def of(cls, values) -> EigenMultiset:
        v = np.asarray(values, dtype=complex).ravel()
        return cls(v[np.lexsort((v.imag, v.real))])

    def __len__(self):
        return len(self.values)

    def product(self) -> complex:
        return complex(np.prod(self.values))


def dense_eigenvalues(mtx: np.ndarray) -> EigenMultiset:
    mtx = np.asarray(mtx, dtype=complex)
    if mtx.ndim != 2 or mtx.shape[0] != mtx.shape[1]:
        raise DomainError("matrix must be square")
    if mtx.shape[0] > MAX_EIG_DIM:
        raise DomainError(f"dense eigensolver limited to dim <= {MAX_EIG_DIM}")
    try:
        vals, vecs = np.linalg.eig(mtx)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(f"eigensolver did not converge for {mtx.shape} matrix: {exc}") from exc
    scale = max(1.0, np.linalg.norm(mtx, 2))
    res = np.linalg.norm(mtx @ vecs - vecs * vals, axis=0) / np.linalg.norm(vecs, axis=0)
    worst = int(np.argmax(res))
    if res[worst] > RESIDUAL_TOL * scale:
        raise NumericalFailure(
            f"eigenpair residual {res[worst]:.3e} for eigenvalue {vals[worst]:.6g} exceeds tolerance"
        )
    return EigenMultiset.of(vals)


@dataclass(frozen=True)
class MultisetReport:
    max_distance: float
    tol: float
    pairing: np.ndarray  # pairing[i] is the index in b matched to a.values[i]
    method: str

    @property
    def passed(self) -> bool:
        return self.max_distance <= self.tol


def compare_multisets(a: EigenMultiset, b: EigenMultiset, tol: float) -> MultisetReport:
    """Pair up two multisets and report the largest pair distance.

    Greedy nearest-match is used when the values of ``b`` are separated by
    more than ``10 * tol``; otherwise the pairing comes from a full
    bipartite assignment.
    """
    if len(a) != len(b):
        raise DomainError(f"multisets differ in size: {len(a)} vs {len(b)}")
    if len(a) == 0:
        return MultisetReport(0.0, tol, np.array([], dtype=int), "greedy")
    dist = np.abs(a.values[:, None] - b.values[None, :])
    bb = np.abs(b.values[:, None] - b.values[None, :])
    np.fill_diagonal(bb, np.inf)
    if bb.min() > 10 * tol:
        pairing = np.full(len(a), -1)
        free = np.ones(len(b), dtype=bool)
        for i in range(len(a)):
            j = int(np.argmin(np.where(free, dist[i], np.inf)))
            pairing[i] = j
            free[j] = False
        method = "greedy"
    else:
        rows, pairing = linear_sum_assignment(dist)
        method = "assignment"
    md = float(dist[np.arange(len(a)), pairing].max())
    return MultisetReport(md, tol, pairing, method)
