"""Whole-bath quantities assembled from junction-level physics."""

from jja_bath.chain.correlation import (
    DeltaProfile,
    RegimeFlags,
    chain_regime_flags,
    delta_profile,
    discretize_chain,
    gamma_continuum,
    gamma_discrete,
    gamma_from_spectral,
    junction_count,
    local_delta,
    offset_gamma0,
    offset_ratio,
    spectral_density_large_ec,
    zero_temperature_gamma0,
)
from jja_bath.chain.decomposition import MonotoneDecomposition, check_monotone
from jja_bath.chain.harmonic import harmonic_correlation, harmonic_gamma, harmonic_spectral_density
from jja_bath.chain.profiles import (
    Gaussian,
    InverseSinh,
    Polynomial,
    Profile,
    Rational,
    SqrtProduct,
    Tabulated,
)
from jja_bath.chain.spec import ChainSpec, ContinuumChain, DiscreteChain, chain_from_dict
from jja_bath.chain.spectral import DensityKind, SpectralDensity

__all__ = [
    "ChainSpec",
    "ContinuumChain",
    "DiscreteChain",
    "chain_from_dict",
    "DensityKind",
    "SpectralDensity",
    "Profile",
    "Polynomial",
    "Rational",
    "Gaussian",
    "InverseSinh",
    "Tabulated",
    "SqrtProduct",
    "MonotoneDecomposition",
    "check_monotone",
    "DeltaProfile",
    "RegimeFlags",
    "chain_regime_flags",
    "delta_profile",
    "discretize_chain",
    "gamma_continuum",
    "gamma_discrete",
    "gamma_from_spectral",
    "junction_count",
    "local_delta",
    "offset_gamma0",
    "offset_ratio",
    "spectral_density_large_ec",
    "zero_temperature_gamma0",
    "harmonic_correlation",
    "harmonic_gamma",
    "harmonic_spectral_density",
]
