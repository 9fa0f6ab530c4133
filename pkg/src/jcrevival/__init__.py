"""Multimode multiphoton Jaynes-Cummings dynamics and the readout of the
atomic inversion through phase-space-origin observables.

The heavy per-grid reductions run on a compiled core when available, with
a NumPy fallback selected automatically at import (see `jcrevival._backend`).
"""
from ._backend import USING_COMPILED
from .asymptotics import (
    AsymptoticParams,
    hermite_poisson_sum,
    homodyne_asymptotic,
    inversion_estimator,
    p_extrema,
    sqrt_harmonic,
    wigner_origin_asymptotic,
)
from .dynamics import (
    EvolvedState,
    SystemConfig,
    atomic_inversion,
    branch_amplitudes,
    evolve,
    photon_count_distribution,
    rabi_squared,
)
from .errors import (
    BesselOverflow,
    ConfigError,
    DegenerateState,
    GridMismatch,
    IndexOutOfRange,
    JCRevivalError,
    NotNormalized,
    QuadratureDiverged,
    TruncationTooSmall,
    UnsupportedArity,
)
from .fock import FieldAmplitudes, ModeConfig, cat, coherent, joint_weight, number
from .observables import OBSERVABLE_NAMES, sweep
from .quasiprob import (
    RadonQuadrature,
    homodyne_origin,
    inverse_radon_origin,
    marginal_number_state,
    parity_sum,
    phase_averaged_position_distribution,
    position_distribution,
    q_origin,
    wigner_number_state,
    wigner_origin,
    wigner_origin_initial_product,
)
from .runconfig import RunConfig, build_system, parse_config, parse_config_file
from .series import ObservableSeries
from .specfun import (
    BESSEL_MAX_ABS,
    bessel_i,
    hermite_at_zero,
    hermite_at_zero_log,
    hermite_sq_ratio,
    laguerre,
    log_rising_factorial,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticParams",
    "BESSEL_MAX_ABS",
    "BesselOverflow",
    "ConfigError",
    "DegenerateState",
    "EvolvedState",
    "FieldAmplitudes",
    "GridMismatch",
    "IndexOutOfRange",
    "JCRevivalError",
    "ModeConfig",
    "NotNormalized",
    "OBSERVABLE_NAMES",
    "ObservableSeries",
    "QuadratureDiverged",
    "RadonQuadrature",
    "RunConfig",
    "SystemConfig",
    "TruncationTooSmall",
    "UnsupportedArity",
    "USING_COMPILED",
    "atomic_inversion",
    "bessel_i",
    "branch_amplitudes",
    "build_system",
    "cat",
    "coherent",
    "evolve",
    "hermite_at_zero",
    "hermite_at_zero_log",
    "hermite_poisson_sum",
    "hermite_sq_ratio",
    "homodyne_asymptotic",
    "homodyne_origin",
    "inverse_radon_origin",
    "inversion_estimator",
    "joint_weight",
    "laguerre",
    "log_rising_factorial",
    "marginal_number_state",
    "number",
    "p_extrema",
    "parity_sum",
    "parse_config",
    "parse_config_file",
    "phase_averaged_position_distribution",
    "photon_count_distribution",
    "position_distribution",
    "q_origin",
    "rabi_squared",
    "sqrt_harmonic",
    "sweep",
    "wigner_number_state",
    "wigner_origin",
    "wigner_origin_asymptotic",
    "wigner_origin_initial_product",
]
