__version__ = "0.0.1"

# Junction
from jja_bath.junction.hamiltonian import (
    JunctionParams,
    SpectralDecomposition,
    build_hamiltonian,
    diagonalize,
)
from jja_bath.junction.correlation import exact_correlation
from jja_bath.junction.series import CorrelationSeries, SeriesSource

# Perturbation
from jja_bath.perturbation.closed_form import (
    g_high_t,
    g_low_t,
    g_moderate,
    perturbative_energy,
    perturbative_state,
)
from jja_bath.perturbation.matsubara import (
    matsubara_correlation,
    matsubara_k,
    matsubara_l,
)

# Chain
from jja_bath.chain.spec import ContinuumChain, DiscreteChain, chain_from_dict
from jja_bath.chain.spectral import DensityKind, SpectralDensity
from jja_bath.chain.correlation import (
    delta_profile,
    gamma_continuum,
    gamma_discrete,
    gamma_from_spectral,
    offset_gamma0,
    spectral_density_large_ec,
)
from jja_bath.chain.harmonic import harmonic_correlation, harmonic_gamma

# GKSL
from jja_bath.gksl.coefficients import (
    GkslResult,
    OscillatorParams,
    decay_rate,
    half_fourier,
    lamb_shift,
)
from jja_bath.gksl.evolution import OscillatorState, evolve_oscillator
from jja_bath.gksl.markovianity import markovianity_report

# Duality
from jja_bath.duality.mapping import DualityMap, map_to_large_ej, verify_duality

# Scenarios
from jja_bath.scenarios.lorentzian import LorentzianChainParams, lorentzian_chain
from jja_bath.scenarios.fabrication import FabricationConstants, fabrication_params
from jja_bath.scenarios.disorder import (
    DisorderChainParams,
    disorder_gamma_analytic,
    disorder_spectral_density,
    gaussian_disorder_chain,
)

# Numerics
from jja_bath.numerics.quadrature import QuadratureResult, quad_adaptive, quad_pv
from jja_bath.numerics.ode import ode_evolve
from jja_bath.numerics.sampling import rng_truncated_normal

# Runs
from jja_bath.config import RunConfig, load_run_config
from jja_bath.io.artifacts import ArtifactStore
from jja_bath.runtime import run


__all__ = [
    "__version__",
    # Junction
    "JunctionParams",
    "SpectralDecomposition",
    "build_hamiltonian",
    "diagonalize",
    "exact_correlation",
    "CorrelationSeries",
    "SeriesSource",
    # Perturbation
    "g_high_t",
    "g_low_t",
    "g_moderate",
    "perturbative_energy",
    "perturbative_state",
    "matsubara_correlation",
    "matsubara_k",
    "matsubara_l",
    # Chain
    "ContinuumChain",
    "DiscreteChain",
    "chain_from_dict",
    "DensityKind",
    "SpectralDensity",
    "delta_profile",
    "gamma_continuum",
    "gamma_discrete",
    "gamma_from_spectral",
    "offset_gamma0",
    "spectral_density_large_ec",
    "harmonic_correlation",
    "harmonic_gamma",
    # GKSL
    "GkslResult",
    "OscillatorParams",
    "decay_rate",
    "half_fourier",
    "lamb_shift",
    "OscillatorState",
    "evolve_oscillator",
    "markovianity_report",
    # Duality
    "DualityMap",
    "map_to_large_ej",
    "verify_duality",
    # Scenarios
    "LorentzianChainParams",
    "lorentzian_chain",
    "FabricationConstants",
    "fabrication_params",
    "DisorderChainParams",
    "disorder_gamma_analytic",
    "disorder_spectral_density",
    "gaussian_disorder_chain",
    # Numerics
    "QuadratureResult",
    "quad_adaptive",
    "quad_pv",
    "ode_evolve",
    "rng_truncated_normal",
    # Runs
    "RunConfig",
    "load_run_config",
    "ArtifactStore",
    "run",
]
