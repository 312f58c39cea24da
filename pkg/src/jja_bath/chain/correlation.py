"""Whole-bath correlation functions, spectral densities and thermal offsets."""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy import optimize
from scipy.integrate import cumulative_trapezoid

from jja_bath.chain.decomposition import MonotoneDecomposition
from jja_bath.chain.spec import ContinuumChain, DiscreteChain
from jja_bath.chain.spectral import DensityKind, SpectralDensity
from jja_bath.errors import RegimeError
from jja_bath.junction.hamiltonian import JunctionParams
from jja_bath.junction.series import CorrelationSeries, SeriesSource
from jja_bath.numerics.quadrature import quad_adaptive, quad_vector

logger = logging.getLogger(__name__)

ENERGY_RATIO_LIMIT = 0.25
TEMPERATURE_RATIO_LIMIT = 0.1
DELTA_GRID_POINTS = 2049
CDF_POINTS_PER_INTERVAL = 8193


def _times(times) -> np.ndarray:
    return np.asarray(times, dtype=float)


def gamma_discrete(chain: DiscreteChain, times) -> CorrelationSeries:
    """Γ(t) = (ε_I²/2) Σ_α E_Jα² e^{−iE_Cα t}."""
    times = _times(times)
    weights = 0.5 * chain.coupling_eps**2 * chain.e_j**2
    values = np.exp(-1j * np.outer(times, chain.e_c)) @ weights
    return CorrelationSeries(
        times,
        values,
        SeriesSource.CHAIN_DISCRETE,
        params={"n_junctions": len(chain), "eps_i": chain.coupling_eps},
    )


def spectral_density_large_ec(chain: ContinuumChain) -> SpectralDensity:
    """
    J(E_C) = 2 Σ_k ν(x_k) E_J(x_k)² |dx_k/dE_C| over the monotone branches of E_C(x).

    Raises:
        DecompositionError: If E_C(x) is not strictly monotonic on a declared interval.
    """
    decomposition = MonotoneDecomposition(chain.ec_profile, chain.monotone_intervals)

    def weight(x: float) -> float:
        return 2.0 * chain.density.value(x) * chain.ej_profile.value(x) ** 2

    return SpectralDensity(
        support=decomposition.support,
        function=decomposition.density(weight),
        kind=DensityKind.LARGE_EC,
        breakpoints=decomposition.breakpoints,
        params={"label": chain.label} if chain.label else {},
    )


def fourier_integral(
    j: SpectralDensity,
    times: np.ndarray,
    kernel: Optional[Callable[[float, np.ndarray], np.ndarray]] = None,
    rel_tol: float = 1e-10,
) -> np.ndarray:
    """∫ J(E) K(E, t) dE for every t on one shared mesh; K defaults to e^{−iEt}."""
    if kernel is None:

        def kernel(energy, ts):
            return np.exp(-1j * energy * ts)

    total = np.zeros(times.size, dtype=complex)
    for a, b in j.pieces():
        value, _ = quad_vector(lambda e: j.evaluate(e) * kernel(e, times), a, b, rel_tol=rel_tol)
        total += value
    return total


def gamma_from_spectral(j: SpectralDensity, eps_i: float, times, rel_tol: float = 1e-10) -> CorrelationSeries:
    """
    Γ(t) = (ε_I/2)² ∫ dE J(E) e^{−iEt}.

    Raises:
        QuadratureError: With the achieved tolerance when quadrature stalls.
    """
    times = _times(times)
    values = (0.5 * eps_i) ** 2 * fourier_integral(j, times, rel_tol=rel_tol)
    return CorrelationSeries(
        times,
        values,
        SeriesSource.CHAIN_SPECTRAL,
        params={"eps_i": eps_i, "kind": j.kind.value},
    )


def _x_integral(chain: ContinuumChain, integrand: Callable[[float], float], rel_tol: float = 1e-10) -> float:
    return float(sum(quad_adaptive(integrand, a, b, rel_tol=rel_tol).value for a, b in chain.monotone_intervals))


def gamma_continuum(chain: ContinuumChain, times, rel_tol: float = 1e-10) -> CorrelationSeries:
    """Γ(t) = (ε_I²/2) ∫ dx ν(x) E_J(x)² e^{−iE_C(x)t} by direct position-space quadrature."""
    times = _times(times)
    prefactor = 0.5 * chain.coupling_eps**2

    def integrand(x: float) -> np.ndarray:
        weight = chain.density.value(x) * chain.ej_profile.value(x) ** 2
        return weight * np.exp(-1j * chain.ec_profile.value(x) * times)

    values = np.zeros(times.size, dtype=complex)
    for a, b in chain.monotone_intervals:
        piece, _ = quad_vector(integrand, a, b, rel_tol=rel_tol)
        values += piece
    flags = chain_regime_flags(chain).as_flags()
    return CorrelationSeries(
        times,
        prefactor * values,
        SeriesSource.CHAIN_CONTINUUM,
        params={"eps_i": chain.coupling_eps, **({"label": chain.label} if chain.label else {})},
        flags=flags,
    )


def junction_count(chain: ContinuumChain | DiscreteChain) -> float:
    """N_J = ∫ ν dx (or the list length for a discrete chain)."""
    if isinstance(chain, DiscreteChain):
        return float(len(chain))
    return _x_integral(chain, chain.density.value)


def offset_gamma0(chain: ContinuumChain, beta: float) -> float:
    """Γ₀ = 2ε_I² ∫ dx ν(x) E_C(x)² e^{−βE_C(x)}."""
    if not beta > 0.0:
        raise ValueError(f"beta must be positive, got {beta}")
    if math.isinf(beta):
        return 0.0

    def integrand(x: float) -> float:
        e_c = chain.ec_profile.value(x)
        return chain.density.value(x) * e_c**2 * math.exp(-beta * e_c)

    return 2.0 * chain.coupling_eps**2 * _x_integral(chain, integrand)


def zero_temperature_gamma0(chain: ContinuumChain) -> float:
    """Re Γ(0) in the zero-temperature limit, (ε_I²/2) ∫ ν E_J² dx."""
    return 0.5 * chain.coupling_eps**2 * _x_integral(
        chain, lambda x: chain.density.value(x) * chain.ej_profile.value(x) ** 2
    )


def offset_ratio(chain: ContinuumChain, beta: float) -> float:
    """Γ₀ relative to the zero-temperature Re Γ(0)."""
    return offset_gamma0(chain, beta) / zero_temperature_gamma0(chain)


@dataclass(frozen=True)
class DeltaProfile:
    """Local zero-temperature scale Δ(x) = E_C(x) / (−ln λ(x)) and its minimum."""

    chain: ContinuumChain
    delta_star: float
    x_star: float

    def __call__(self, x):
        return local_delta(self.chain, x)


def local_delta(chain: ContinuumChain, x):
    e_c = np.asarray(chain.ec_profile.value(x), dtype=float)
    e_j = np.asarray(chain.ej_profile.value(x), dtype=float)
    with np.errstate(divide="ignore"):
        out = e_c / -np.log(e_j / e_c)
    return float(out) if np.ndim(x) == 0 else out


def delta_profile(chain: ContinuumChain) -> DeltaProfile:
    """
    Δ(x) with Δ* = min Δ found on a 2049-point grid and refined by bounded search.

    Ties on the grid resolve to the smallest x.

    Raises:
        RegimeError: If λ(x) = E_J/E_C ≥ 1 anywhere on the grid.
    """
    grid = chain.grid(DELTA_GRID_POINTS)
    lam = np.asarray(chain.ej_profile.value(grid)) / np.asarray(chain.ec_profile.value(grid))
    if np.any(lam >= 1.0):
        bad = float(grid[np.argmax(lam >= 1.0)])
        raise RegimeError(f"E_J/E_C >= 1 at x={bad}; the zero-temperature scale is undefined")
    values = local_delta(chain, grid)
    index = int(np.argmin(values))
    delta_star, x_star = float(values[index]), float(grid[index])
    if np.ptp(values) > 1e-12 * abs(delta_star):
        lo = grid[max(index - 1, 0)]
        hi = grid[min(index + 1, grid.size - 1)]
        result = optimize.minimize_scalar(
            lambda x: local_delta(chain, x),
            bounds=(lo, hi),
            method="bounded",
            options={"xatol": 1e-12 * (chain.domain[1] - chain.domain[0])},
        )
        if result.success and result.fun < delta_star:
            delta_star, x_star = float(result.fun), float(result.x)
    return DeltaProfile(chain, delta_star, x_star)


@dataclass(frozen=True)
class RegimeFlags:
    """Continuum validity margins; each flag is True when its margin is small enough."""

    ej_over_ec: float
    ej_over_sqrt_ec_width: float
    temperature_over_delta_star: float

    @property
    def small_ej(self) -> bool:
        return self.ej_over_ec <= ENERGY_RATIO_LIMIT

    @property
    def small_ej_width(self) -> bool:
        return self.ej_over_sqrt_ec_width <= ENERGY_RATIO_LIMIT

    @property
    def zero_temperature(self) -> bool:
        return self.temperature_over_delta_star <= TEMPERATURE_RATIO_LIMIT

    def as_flags(self) -> dict[str, bool]:
        return {
            "small_ej": self.small_ej,
            "small_ej_width": self.small_ej_width,
            "zero_temperature": self.zero_temperature,
        }

    def to_dict(self) -> dict[str, float | bool]:
        return {
            "ej_over_ec": self.ej_over_ec,
            "ej_over_sqrt_ec_width": self.ej_over_sqrt_ec_width,
            "temperature_over_delta_star": self.temperature_over_delta_star,
            **self.as_flags(),
        }


def chain_regime_flags(chain: ContinuumChain, beta: float = math.inf) -> RegimeFlags:
    """E_J ≪ E_C, E_J ≪ √(E_C δE_C) and β⁻¹ ≪ Δ*, sampled over the domain."""
    grid = chain.grid(1025)
    e_c = np.asarray(chain.ec_profile.value(grid), dtype=float)
    e_j = np.asarray(chain.ej_profile.value(grid), dtype=float)
    width = float(np.ptp(e_c)) or float(np.max(e_c))
    ej_over_ec = float(np.max(e_j / e_c))
    if ej_over_ec >= 1.0:
        temperature_margin = math.inf
    else:
        temperature_margin = 0.0 if math.isinf(beta) else (1.0 / beta) / delta_profile(chain).delta_star
    flags = RegimeFlags(
        ej_over_ec=ej_over_ec,
        ej_over_sqrt_ec_width=float(np.max(e_j / np.sqrt(e_c * width))),
        temperature_over_delta_star=temperature_margin,
    )
    failed = [name for name, ok in flags.as_flags().items() if not ok]
    if failed:
        logger.warning("continuum chain %s outside its validity window: %s", chain.label or "", ", ".join(failed))
    return flags


def discretize_chain(chain: ContinuumChain, n: int, seed: Optional[int] = None) -> DiscreteChain:
    """
    Draw n junction positions from ν(x) by inverse-CDF sampling.

    Without a seed the quantiles are stratified, (k + 1/2)/n; with a seed they
    are uniform random draws from ``numpy.random.default_rng(seed)``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    xs = []
    for a, b in chain.monotone_intervals:
        xs.append(np.linspace(a, b, CDF_POINTS_PER_INTERVAL)[: -1 if b != chain.domain[1] else None])
    grid = np.concatenate(xs)
    cdf = cumulative_trapezoid(np.asarray(chain.density.value(grid), dtype=float), grid, initial=0.0)
    if cdf[-1] <= 0.0:
        raise ValueError("junction density integrates to zero")
    cdf /= cdf[-1]
    if seed is None:
        quantiles = (np.arange(n) + 0.5) / n
    else:
        quantiles = np.random.default_rng(seed).random(n)
    positions = np.interp(quantiles, cdf, grid)
    e_c = np.asarray(chain.ec_profile.value(positions), dtype=float)
    e_j = np.asarray(chain.ej_profile.value(positions), dtype=float)
    return DiscreteChain(
        junctions=tuple(JunctionParams(float(c), float(j)) for c, j in zip(e_c, e_j)),
        coupling_eps=chain.coupling_eps,
    )
