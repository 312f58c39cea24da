"""Large-E_J (harmonic) junctions: per-junction correlator and chain Γ(t)."""

import logging
import math

import numpy as np

from jja_bath.chain.correlation import fourier_integral
from jja_bath.chain.decomposition import MonotoneDecomposition
from jja_bath.chain.spec import HARMONIC, ContinuumChain
from jja_bath.chain.spectral import DensityKind, SpectralDensity
from jja_bath.junction.hamiltonian import JunctionParams
from jja_bath.junction.series import CorrelationSeries, SeriesSource

logger = logging.getLogger(__name__)

MUCH_LESS = 0.1


def _thermal_factor(beta: float, omega):
    """coth(βω/2), equal to 1 at zero temperature."""
    if math.isinf(beta):
        return np.ones_like(np.asarray(omega, dtype=float))
    return 1.0 / np.tanh(0.5 * beta * np.asarray(omega, dtype=float))


def harmonic_correlation(p: JunctionParams, beta: float, times) -> CorrelationSeries:
    """
    G(t) = (ω/4E_C)[coth(βω/2) cos ωt − i sin ωt], ω = √(2E_J E_C).

    ``beta`` may be ``math.inf``.
    """
    if not beta > 0.0:
        raise ValueError(f"beta must be positive, got {beta}")
    times = np.asarray(times, dtype=float)
    omega = math.sqrt(2.0 * p.e_j * p.e_c)
    if omega == 0.0:
        # ω → 0 limit of (ω/4E_C) coth(βω/2)
        level = 0.0 if math.isinf(beta) else 1.0 / (2.0 * beta * p.e_c)
        values = np.full(times.size, level, dtype=complex)
    else:
        prefactor = omega / (4.0 * p.e_c)
        values = prefactor * (_thermal_factor(beta, omega) * np.cos(omega * times) - 1j * np.sin(omega * times))
    flags = {
        "large_ej": p.e_j > 0.0 and p.e_c / p.e_j <= MUCH_LESS,
        "cold": math.isinf(beta) or (p.e_j > 0.0 and 1.0 / (beta * p.e_j) <= MUCH_LESS),
    }
    return CorrelationSeries(
        times,
        values,
        SeriesSource.HARMONIC,
        params={"e_c": p.e_c, "e_j": p.e_j, "beta": beta, "omega": omega},
        flags=flags,
    )


def harmonic_spectral_density(chain: ContinuumChain) -> SpectralDensity:
    """
    J(ω) = Σ_k ω ν(x_k) E_C(x_k) |dx_k/dω| over the monotone branches of ω(x).

    Raises:
        DecompositionError: If ω(x) is not strictly monotonic on a declared interval.
    """
    omega = chain.omega_profile()
    decomposition = MonotoneDecomposition(omega, chain.monotone_intervals)

    def weight(x: float) -> float:
        return omega.value(x) * chain.density.value(x) * chain.ec_profile.value(x)

    return SpectralDensity(
        support=decomposition.support,
        function=decomposition.density(weight),
        kind=DensityKind.HARMONIC,
        breakpoints=decomposition.breakpoints,
        params={"label": chain.label} if chain.label else {},
    )


def harmonic_gamma(
    chain: ContinuumChain,
    beta: float,
    times,
    rel_tol: float = 1e-10,
) -> tuple[CorrelationSeries, SpectralDensity]:
    """
    Γ(t) = (ε_I/2)² ∫ dω J(ω)[coth(βω/2) cos ωt − i sin ωt] with its J(ω).

    At zero temperature this is the one-sided transform (ε_I/2)² ∫ J(ω) e^{−iωt} dω.
    """
    if not beta > 0.0:
        raise ValueError(f"beta must be positive, got {beta}")
    if chain.regime != HARMONIC:
        logger.debug("treating chain %s with harmonic junctions", chain.label or "")
    times = np.asarray(times, dtype=float)
    j = harmonic_spectral_density(chain)

    def kernel(omega: float, ts: np.ndarray) -> np.ndarray:
        return _thermal_factor(beta, omega) * np.cos(omega * ts) - 1j * np.sin(omega * ts)

    values = (0.5 * chain.coupling_eps) ** 2 * fourier_integral(j, times, kernel=kernel, rel_tol=rel_tol)
    series = CorrelationSeries(
        times,
        values,
        SeriesSource.HARMONIC,
        params={"eps_i": chain.coupling_eps, "beta": beta},
    )
    return series, j
