"""Scalar and 2x2 primitives: rapidities, node matrices and the Ising constraint.

Node matrices are plain ``(2, 2)`` complex :class:`numpy.ndarray` objects.
A rapidity ``a`` parameterizes

.. math::

    T(a) = \\begin{pmatrix} \\cosh a & i \\sinh a \\\\ -i \\sinh a & \\cosh a \\end{pmatrix},

which is an SU(1,1) amplifier for real ``a`` and an SU(2) beam splitter for
purely imaginary ``a``.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConstraintUndefinedError, DomainError

REGIME_TOL = 1e-12
DET_TOL = 1e-10


class Regime(str, enum.Enum):
    SU11 = "su11"
    SU2 = "su2"


@dataclass(frozen=True)
class Rapidity:
    """Coupling angle of a node with an explicit regime tag.

    SU(1,1) rapidities are real, SU(2) rapidities purely imaginary. A value
    whose off-component exceeds ``REGIME_TOL`` is rejected rather than
    silently reinterpreted.
    """

    value: complex
    regime: Regime

    def __post_init__(self):
        v = complex(self.value)
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise DomainError(f"rapidity must be finite, got {v!r}")
        regime = Regime(self.regime)
        if regime is Regime.SU11 and abs(v.imag) > REGIME_TOL:
            raise DomainError(f"SU(1,1) rapidity must be real, got {v!r}")
        if regime is Regime.SU2 and abs(v.real) > REGIME_TOL:
            raise DomainError(f"SU(2) rapidity must be imaginary, got {v!r}")
        object.__setattr__(self, "value", v)
        object.__setattr__(self, "regime", regime)

    @classmethod
    def su11(cls, angle: float) -> Rapidity:
        return cls(complex(angle, 0.0), Regime.SU11)

    @classmethod
    def su2(cls, angle: float) -> Rapidity:
        """SU(2) rapidity ``i * angle``; ``angle`` is the real mixing angle."""
        return cls(complex(0.0, angle), Regime.SU2)

    @property
    def angle(self) -> float:
        """Real angle: the value itself (SU11) or its imaginary part (SU2)."""
        return self.value.real if self.regime is Regime.SU11 else self.value.imag


def _as_complex(angle) -> complex:
    a = angle.value if isinstance(angle, Rapidity) else complex(angle)
    if not (math.isfinite(a.real) and math.isfinite(a.imag)):
        raise DomainError(f"angle must be finite, got {a!r}")
    return a


# Complex hyperbolic functions from real identities, so that e.g. cosh(iy)
# has an exactly zero imaginary part.
def ccosh(z: complex) -> complex:
    return complex(math.cosh(z.real) * math.cos(z.imag), math.sinh(z.real) * math.sin(z.imag))


def csinh(z: complex) -> complex:
    return complex(math.sinh(z.real) * math.cos(z.imag), math.cosh(z.real) * math.sin(z.imag))


def node_matrix(angle) -> np.ndarray:
    """Return the 2x2 node transformation for rapidity ``angle``.

    Parameters
    ----------
    angle : Rapidity or complex
        Coupling angle; raw numbers are accepted without a regime check.

    Returns
    -------
    numpy.ndarray
        ``[[cosh a, i sinh a], [-i sinh a, cosh a]]``, determinant one.
    """
    a = _as_complex(angle)
    c, s = ccosh(a), csinh(a)
    return np.array([[c, 1j * s], [-1j * s, c]], dtype=complex)


def ising_partner_theta(phi) -> Rapidity:
    """Solve ``coth(theta) = cosh(phi)`` for ``theta > 0``.

    Only defined for real ``phi > 0``; the imaginary-angle version of the
    constraint has no useful one-to-one solution.
    """
    if isinstance(phi, Rapidity):
        if phi.regime is not Regime.SU11:
            raise ConstraintUndefinedError("Ising constraint is only defined for SU(1,1) angles")
        x = phi.value.real
    else:
        z = complex(phi)
        if z.imag != 0.0:
            raise ConstraintUndefinedError("Ising constraint is only defined for real angles")
        x = z.real
    if not math.isfinite(x) or x <= 0.0:
        raise ConstraintUndefinedError(f"Ising constraint needs phi > 0, got {x!r}")
    u = 1.0 / math.cosh(x)
    return Rapidity.su11(0.5 * math.log((1.0 + u) / (1.0 - u)))


def det2(m: np.ndarray) -> complex:
    return complex(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])


def mat_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = np.empty((2, 2), dtype=complex)
    out[0, 0] = a[0, 0] * b[0, 0] + a[0, 1] * b[1, 0]
    out[0, 1] = a[0, 0] * b[0, 1] + a[0, 1] * b[1, 1]
    out[1, 0] = a[1, 0] * b[0, 0] + a[1, 1] * b[1, 0]
    out[1, 1] = a[1, 0] * b[0, 1] + a[1, 1] * b[1, 1]
    return out


def mat_apply(a: np.ndarray, v) -> tuple[complex, complex]:
    x, y = v
    return (complex(a[0, 0] * x + a[0, 1] * y), complex(a[1, 0] * x + a[1, 1] * y))


def cosh_excess(theta, phi, n: int, N: int) -> complex:
    """``cosh(gamma_n) - 1`` for the sector ``n`` block, free of cancellation.

    Uses ``cosh t cosh p - cos(k) sinh t sinh p - 1
    = 2 sinh^2((t - p)/2) + 2 sinh t sinh p sin^2(k/2)`` with ``k = 2 pi n / N``.
    """
    t, p = _as_complex(theta), _as_complex(phi)
    half = csinh(0.5 * (t - p))
    s = math.sin(math.pi * n / N)
    return 2.0 * half * half + 2.0 * csinh(t) * csinh(p) * s * s


def arccosh_from_excess(w: complex) -> complex:
    """Principal ``arccosh(1 + w)`` with ``Re >= 0``.

    Computed as ``2 asinh(sqrt(w / 2))``, which lies on the same branch as
    ``log(z + sqrt(z - 1) sqrt(z + 1))`` but keeps full relative accuracy
    for ``w`` near zero. For real ``w`` in ``[-2, 0]`` the result is
    ``i * arccos(1 + w)`` with imaginary part in ``[0, pi]``.
    """
    w = complex(w)
    if w.imag == 0.0:
        # real path; also sidesteps cmath.sqrt honouring a signed zero imag part
        if w.real >= 0.0:
            return complex(2.0 * math.asinh(math.sqrt(0.5 * w.real)), 0.0)
        if w.real >= -2.0:
            return complex(0.0, 2.0 * math.asin(math.sqrt(-0.5 * w.real)))
        w = complex(w.real, 0.0)
    return 2.0 * cmath.asinh(cmath.sqrt(0.5 * w))
