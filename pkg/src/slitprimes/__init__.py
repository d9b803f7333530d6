"""Prime-factorization functions built from multi-slit interference intensities."""

from .config import DEFAULT_CONFIG, EvalConfig
from .geometry import (
    SlitArrangement,
    build_arrangement,
    coherent_intensity,
    incoherent_intensity,
    overlaps,
)
from .intensity import IntensityProfile, intensity_exact, intensity_float, profile
from .oracle import (
    Factorization,
    PrimeTable,
    big_omega_oracle,
    eratosthenes,
    factorize,
    omega_oracle,
)
from .series import (
    OmegaPartialSum,
    ZetaCheckReport,
    alpha_series,
    big_omega_series,
    omega_m_exact,
    omega_m_float,
    omega_series,
    zeta_identity_check,
)
from .sieve import SieveState, extend_once, locate_zeros_float, sieve_to

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_CONFIG",
    "EvalConfig",
    "Factorization",
    "IntensityProfile",
    "OmegaPartialSum",
    "PrimeTable",
    "SieveState",
    "SlitArrangement",
    "ZetaCheckReport",
    "alpha_series",
    "big_omega_oracle",
    "big_omega_series",
    "build_arrangement",
    "coherent_intensity",
    "eratosthenes",
    "extend_once",
    "factorize",
    "incoherent_intensity",
    "intensity_exact",
    "intensity_float",
    "locate_zeros_float",
    "omega_m_exact",
    "omega_m_float",
    "omega_oracle",
    "omega_series",
    "overlaps",
    "profile",
    "sieve_to",
    "zeta_identity_check",
]
