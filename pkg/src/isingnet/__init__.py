"""Simulator for Ising-analogue networks of SU(1,1) amplifiers and SU(2) beam splitters."""

from .algebra import Rapidity, Regime, ising_partner_theta, mat_apply, mat_mul, node_matrix
from .errors import (
    ClassificationUndefinedError,
    ConsistencyError,
    ConstraintUndefinedError,
    DomainError,
    IsingNetError,
    NumericalFailure,
    SpecError,
)
from .network import (
    BlockSpectrum,
    NetworkSpec,
    block_decompose,
    build_Kn,
    build_P,
    dft_matrix,
    fourier_pair_basis,
    j_form,
    shift_matrix,
)
from .propagate import (
    global_amplification,
    kn_power,
    output_intensities,
    phase_sensitivity,
    propagate,
    single_mode_input,
    single_mode_output_amplitude,
    superposition_input,
)
from .spectrum import (
    PHI_C,
    PHI_PRIME_C,
    SweepRow,
    TemperatureMapping,
    critical_point,
    gamma_all,
    gamma_integral,
    gamma_n,
    locate_kink,
    phi_from_temperature,
    regime_classify,
    su2_gamma0,
    sweep_gamma0,
)

__version__ = "0.1.0"
