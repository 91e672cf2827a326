"""Sector exponents, the critical point and regime labels."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import Rapidity, Regime, arccosh_from_excess, cosh_excess, ising_partner_theta
from .errors import ClassificationUndefinedError, DomainError
from .network import NetworkSpec, sector_gamma

PHI_C = math.asinh(1.0)  # sinh(phi_c) = 1, i.e. cosh(phi_c) = sqrt(2)
PHI_PRIME_C = math.pi / 4
CLASSIFY_TOL = 1e-10
# A kink must stand out from the smooth background by this factor; the
# background statistic is O(h * |gamma''|), the kink statistic O(1).
KINK_RATIO = 10.0


def gamma_n(spec: NetworkSpec, n: int) -> complex:
    """Exponent of sector ``n``: the eigenvalues of ``K_n`` are ``exp(+-gamma_n)``.

    ``cosh(gamma_n) = cosh(theta) cosh(phi) - cos(2 pi n / N) sinh(theta) sinh(phi)``,
    taken on the principal branch (``Re gamma_n >= 0``). SU(2) networks give
    purely imaginary ``gamma_n`` with imaginary part in ``[0, pi]``.
    """
    if not 0 <= n < spec.N:
        raise DomainError(f"sector index must satisfy 0 <= n < {spec.N}, got {n}")
    return sector_gamma(spec, n)


def gamma_all(spec: NetworkSpec) -> np.ndarray:
    return np.array([sector_gamma(spec, n) for n in range(spec.N)])


def gamma_integral(spec: NetworkSpec, n: int, panels: int = 4096) -> float:
    """Quadrature value of ``(1/pi) * int_0^pi log[2(cosh(gamma_n) - cos(nu))] d nu``.

    The integrand has a logarithmic singularity at ``nu = 0`` when
    ``gamma_n = 0``. The midpoint rule is applied in the graded variable
    ``nu = pi t**2``, which never samples the endpoint and turns the
    singularity into an integrable ``t log t``.
    """
    if not spec.ising_constrained:
        raise DomainError("integral representation requires an Ising-constrained spec")
    if not 0 <= n < spec.N:
        raise DomainError(f"sector index must satisfy 0 <= n < {spec.N}, got {n}")
    if panels < 1:
        raise DomainError("panels must be positive")
    w = cosh_excess(spec.theta.value, spec.phi.value, n, spec.N).real
    t = (np.arange(panels) + 0.5) / panels
    nu = math.pi * t * t
    # 2 (cosh gamma - cos nu) = 2 w + 4 sin^2(nu / 2)
    arg = 2.0 * w + 4.0 * np.sin(0.5 * nu) ** 2
    if np.any(arg <= 0.0):
        raise DomainError("integrand argument is not positive on the quadrature nodes")
    return float(np.sum(2.0 * t * np.log(arg)) / panels)


@dataclass(frozen=True)
class CriticalPoint:
    regime: Regime
    phi_c: float
    gain: float  # G_c for SU11, transmittance t_c for SU2
    kTc_over_eps: float | None = None

    def as_dict(self) -> dict:
        if self.regime is Regime.SU11:
            return {"regime": "su11", "phi_c": self.phi_c, "G_c": self.gain, "kTc_over_eps": self.kTc_over_eps}
        return {"regime": "su2", "phi_c": self.phi_c, "t_c": self.gain}


def critical_point(regime=Regime.SU11) -> CriticalPoint:
    regime = Regime(regime)
    if regime is Regime.SU11:
        return CriticalPoint(regime, PHI_C, 1.0 + math.sinh(PHI_C) ** 2, 2.0 / PHI_C)
    # sin^2(pi/4) = 1/2; rounding of sin(pi/4) would leave it one ulp short
    return CriticalPoint(regime, PHI_PRIME_C, 0.5)


def transmittance(phi_prime: float) -> float:
    """``sin^2(phi')`` of a beam splitter with rapidity ``i phi'``."""
    return math.sin(phi_prime) ** 2


def su2_gamma0(phi_prime: float) -> float:
    """Zero-sector exponent of the beam-splitter network with ``theta = i pi/4``.

    ``cos(gamma_0) = (cos phi' + sin phi') / sqrt(2) = cos(phi' - pi/4)``, hence
    ``gamma_0 = |phi' - pi/4|`` on ``0 < phi' < pi/2``.
    """
    if not 0.0 < phi_prime < math.pi / 2:
        raise DomainError(f"phi' must lie in (0, pi/2), got {phi_prime!r}")
    return abs(phi_prime - PHI_PRIME_C)


def _gamma0(phi: float, regime: Regime) -> float:
    if regime is Regime.SU11:
        theta = ising_partner_theta(phi).value
        return arccosh_from_excess(cosh_excess(theta, phi, 0, 1)).real
    return arccosh_from_excess(cosh_excess(1j * PHI_PRIME_C, 1j * phi, 0, 1)).imag


def classify_angle(phi: float, regime=Regime.SU11, tol: float = CLASSIFY_TOL) -> str:
    regime = Regime(regime)
    if regime is Regime.SU11:
        s = math.sinh(phi)
        if abs(s - 1.0) <= tol:
            return "critical"
        return "quantum" if s < 1.0 else "classical"
    if abs(phi - PHI_PRIME_C) <= tol:
        return "critical"
    return "diabatic" if phi < PHI_PRIME_C else "adiabatic"


def regime_classify(spec: NetworkSpec) -> str:
    """Label the network as quantum/classical (SU11) or diabatic/adiabatic (SU2).

    Below ``sinh(phi) = 1`` (gain ``G < 2``) the SU(1,1) network responds to
    the relative phases of its inputs, above it it does not.
    """
    if spec.regime is Regime.SU11:
        if not spec.ising_constrained:
            raise ClassificationUndefinedError("SU(1,1) classification needs the Ising constraint")
        return classify_angle(spec.phi.angle, Regime.SU11)
    if abs(spec.theta.angle - PHI_PRIME_C) > 1e-12:
        raise ClassificationUndefinedError("SU(2) classification needs theta = i*pi/4")
    return classify_angle(spec.phi.angle, Regime.SU2)


@dataclass(frozen=True)
class SweepRow:
    phi: float
    gamma0: float
    dleft: float
    dright: float
    gain: float  # cosh^2(phi) for SU11, sin^2(phi') for SU2
    gain_theta: float  # cosh^2(theta) for SU11, sin^2(theta') for SU2
    regime_label: str

    @property
    def jump(self) -> float:
        return abs(self.dright - self.dleft)


@dataclass(frozen=True)
class KinkReport:
    phi: float
    index: int
    jump: float
    background: float
    detected: bool

    @property
    def ratio(self) -> float:
        return math.inf if self.background == 0.0 else self.jump / self.background


def _row(phi: float, h: float, regime: Regime, label: str | None = None) -> SweepRow:
    g = _gamma0(phi, regime)
    dleft = (g - _gamma0(phi - h, regime)) / h
    dright = (_gamma0(phi + h, regime) - g) / h
    if regime is Regime.SU11:
        gain = math.cosh(phi) ** 2
        gain_theta = math.cosh(ising_partner_theta(phi).value.real) ** 2
    else:
        gain = transmittance(phi)
        gain_theta = transmittance(PHI_PRIME_C)
    return SweepRow(phi, g, dleft, dright, gain, gain_theta, label or classify_angle(phi, regime))


def _golden_min(f, lo: float, hi: float, iters: int = 100) -> float:
    # golden section; unlike parabolic steps it converges on a V-shaped minimum
    r = (math.sqrt(5.0) - 1.0) / 2.0
    x1, x2 = hi - r * (hi - lo), lo + r * (hi - lo)
    f1, f2 = f(x1), f(x2)
    for _ in range(iters):
        if hi - lo <= 4e-16 * max(1.0, abs(hi)):
            break
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - r * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + r * (hi - lo)
            f2 = f(x2)
    return x1 if f1 <= f2 else x2


def sweep_gamma0(phi_lo: float, phi_hi: float, steps: int, h: float, regime=Regime.SU11) -> list[SweepRow]:
    """Evaluate ``gamma_0`` and one-sided slopes on a uniform grid of angles.

    SU11 sweeps run along the Ising-constrained family; SU2 sweeps vary
    ``phi'`` at ``theta = i pi/4``. Rows are ordered by angle. When the grid
    brackets a kink, its location is refined by minimising ``gamma_0``
    inside the bracket and the refined row is inserted, labelled
    ``critical``.
    """
    regime = Regime(regime)
    if not (0.0 < phi_lo < phi_hi) or not (math.isfinite(phi_lo) and math.isfinite(phi_hi)):
        raise DomainError("sweep needs 0 < phi_lo < phi_hi")
    if int(steps) != steps or steps < 2:
        raise DomainError("steps must be an integer >= 2")
    if not (h > 0.0) or phi_lo - h <= 0.0:
        raise DomainError("finite-difference step must be positive and keep phi - h > 0")
    if regime is Regime.SU2 and phi_hi + h >= math.pi / 2:
        raise DomainError("SU2 sweep must stay below phi' = pi/2")

    grid = np.linspace(phi_lo, phi_hi, int(steps))
    rows = [_row(float(p), h, regime) for p in grid]
    if steps < 3:
        return rows

    g = np.array([r.gamma0 for r in rows])
    secant = np.diff(g) / np.diff(grid)
    turn = np.abs(np.diff(secant))
    i = int(np.argmax(turn)) + 1
    phi_star = _golden_min(lambda p: _gamma0(p, regime), float(grid[i - 1]), float(grid[i + 1]))
    candidate = _row(phi_star, h, regime, "critical")
    background = max(r.jump for r in rows)
    if candidate.jump > KINK_RATIO * background and np.min(np.abs(grid - phi_star)) > 0.0:
        rows.insert(int(np.searchsorted(grid, phi_star)), candidate)
    return rows


def locate_kink(rows: list[SweepRow], exclusion: float = 0.1) -> KinkReport:
    """Row with the largest slope jump, compared to the jumps at least ``exclusion`` away."""
    if not rows:
        raise DomainError("empty sweep")
    jumps = np.array([r.jump for r in rows])
    i = int(np.argmax(jumps))
    phi = rows[i].phi
    far = [r.jump for r in rows if abs(r.phi - phi) > exclusion]
    background = max(far) if far else 0.0
    return KinkReport(phi, i, float(jumps[i]), background, bool(jumps[i] > KINK_RATIO * background))


@dataclass(frozen=True)
class TemperatureMapping:
    epsilon: float
    kT: float

    def __post_init__(self):
        if not (self.epsilon > 0 and self.kT > 0):
            raise DomainError("temperature mapping needs epsilon > 0 and kT > 0")


def phi_from_temperature(mapping: TemperatureMapping) -> Rapidity:
    """B-node rapidity ``phi = 2 epsilon / kT`` of the Ising analogue."""
    return Rapidity.su11(2.0 * mapping.epsilon / mapping.kT)
