"""Concrete chains: the engineered Lorentzian chain and the thickness-disordered chain."""

from jja_bath.numerics.sampling import truncated_normal_moments
from jja_bath.scenarios.disorder import (
    DisorderChainParams,
    disorder_chain_continuum,
    disorder_gamma_analytic,
    disorder_spectral_density,
    gaussian_disorder_chain,
    optimal_disorder_width,
    sampled_energy_moments,
)
from jja_bath.scenarios.fabrication import FabricationConstants, fabrication_params
from jja_bath.scenarios.lorentzian import LorentzianChainParams, lorentzian_chain, lorentzian_markovianity

__all__ = [
    "DisorderChainParams",
    "FabricationConstants",
    "LorentzianChainParams",
    "disorder_chain_continuum",
    "disorder_gamma_analytic",
    "disorder_spectral_density",
    "fabrication_params",
    "gaussian_disorder_chain",
    "lorentzian_chain",
    "lorentzian_markovianity",
    "optimal_disorder_width",
    "sampled_energy_moments",
    "truncated_normal_moments",
]
