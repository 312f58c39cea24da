"""Chain whose junctions differ only by a Gaussian-distributed oxide thickness."""

import logging
import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from jja_bath.chain.profiles import Gaussian, InverseSinh, Polynomial
from jja_bath.chain.spec import ContinuumChain, DiscreteChain
from jja_bath.chain.spectral import DensityKind, SpectralDensity
from jja_bath.errors import RegimeError
from jja_bath.junction.hamiltonian import JunctionParams
from jja_bath.junction.series import CorrelationSeries, SeriesSource
from jja_bath.numerics.quadrature import quad_vector
from jja_bath.numerics.sampling import rng_truncated_normal, truncated_normal_moments
from jja_bath.scenarios.fabrication import LARGE_EC_MARGIN, FabricationConstants

logger = logging.getLogger(__name__)

TAIL_WIDTHS = 10.0


@dataclass(frozen=True)
class DisorderChainParams:
    fab: FabricationConstants
    n_j: int = 10_000
    seed: int = 0
    eps_i: float = 0.01

    def __post_init__(self):
        if self.n_j < 1:
            raise ValueError(f"n_j must be >= 1, got {self.n_j}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if not self.eps_i > 0.0:
            raise ValueError("eps_i must be positive")
        margin = self.fab.large_ec_margin()
        if margin > LARGE_EC_MARGIN:
            logger.warning("E_min sinh(E_min/E_zeta) is only %.3g times F_JA/zeta; large-E_C regime not guaranteed", 1.0 / margin)

    @classmethod
    def fig6(cls, delta_ec: float = 0.1, e_0: float = 1.0, **overrides) -> "DisorderChainParams":
        return cls(fab=FabricationConstants.fig6(e_0=e_0, delta_ec=delta_ec), **overrides)

    @property
    def upper_energy(self) -> float:
        """E_0 + 10δE_C, where the Gaussian tail is cut."""
        return self.fab.e_0 + TAIL_WIDTHS * self.fab.delta_ec

    def with_width(self, delta_ec: float) -> "DisorderChainParams":
        return DisorderChainParams(self.fab.with_width(delta_ec), self.n_j, self.seed, self.eps_i)

    def to_dict(self) -> dict[str, Any]:
        return {"fab": self.fab.to_dict(), "n_j": self.n_j, "seed": self.seed, "eps_i": self.eps_i}

    @staticmethod
    def from_dict(data: dict[str, Any]) -> "DisorderChainParams":
        return DisorderChainParams(
            fab=FabricationConstants.from_dict(data["fab"]),
            n_j=int(data.get("n_j", 10_000)),
            seed=int(data.get("seed", 0)),
            eps_i=float(data.get("eps_i", 0.01)),
        )


def _support(p: DisorderChainParams) -> tuple[float, float]:
    lo, hi = p.fab.e_min, p.upper_energy
    if not lo < hi:
        raise RegimeError(f"E_min={lo} lies above the Gaussian tail cut {hi}; no junctions remain")
    return lo, hi


def gaussian_disorder_chain(p: DisorderChainParams) -> DiscreteChain:
    """
    Sample n_j thicknesses from the normal law truncated at w_min and map them to junctions.

    The same seed always yields the same chain.

    Raises:
        RegimeError: If less than 1e-6 of the thickness distribution lies above w_min.
    """
    fab = p.fab
    w = rng_truncated_normal(
        mean=float(fab.thickness(fab.e_0)),
        width=float(fab.thickness(fab.delta_ec)),
        lower_bound=float(fab.thickness(fab.e_min)),
        seed=p.seed,
        count=p.n_j,
    )
    e_c = fab.energy_per_thickness * w
    e_j = fab.josephson_energy(e_c)
    violations = int(np.count_nonzero(e_j > LARGE_EC_MARGIN * e_c))
    if violations:
        logger.warning("%d of %d sampled junctions are not in the large-E_C regime", violations, p.n_j)
    logger.debug("sampled %d junctions with seed %d", p.n_j, p.seed)
    return DiscreteChain(
        junctions=tuple(JunctionParams(float(c), float(j)) for c, j in zip(e_c, e_j)),
        coupling_eps=p.eps_i,
    )


def disorder_spectral_density(p: DisorderChainParams) -> SpectralDensity:
    """
    J(E_C) = 2N_J(F_JA/ζ)²/sinh²(E_C/E_ζ) · exp[−(E_C − E_0)²/2δE_C²]/√(2πδE_C²) above E_min.

    The Gaussian weight is not renormalized for the truncation.
    """
    fab = p.fab
    norm = 1.0 / math.sqrt(2.0 * math.pi * fab.delta_ec**2)

    def density(energy: float) -> float:
        gauss = norm * math.exp(-0.5 * ((energy - fab.e_0) / fab.delta_ec) ** 2)
        return 2.0 * p.n_j * fab.f_j_a_over_zeta**2 / math.sinh(energy / fab.e_zeta) ** 2 * gauss

    return SpectralDensity(
        support=_support(p),
        function=density,
        kind=DensityKind.CLOSED_FORM,
        params={"scenario": "disorder", "delta_ec": fab.delta_ec, "n_j": p.n_j},
    )


def disorder_gamma_analytic(p: DisorderChainParams, eps_i: float, times, rel_tol: float = 1e-10) -> CorrelationSeries:
    """
    Γ(t) = (ε_I²/2)N_J ∫ dw 𝒫(w) E_J(w)² e^{−iE_C(w)t} over w_min ≤ w ≤ w₀ + 10δw.

    Integrated in thickness space, independently of the spectral density.
    """
    fab = p.fab
    times = np.asarray(times, dtype=float)
    lo, hi = (float(fab.thickness(e)) for e in _support(p))
    w0, dw = float(fab.thickness(fab.e_0)), float(fab.thickness(fab.delta_ec))
    norm = 1.0 / math.sqrt(2.0 * math.pi * dw**2)

    def integrand(w: float) -> np.ndarray:
        prob = norm * math.exp(-0.5 * ((w - w0) / dw) ** 2)
        e_j = fab.f_j_a_over_zeta / math.sinh(w / fab.zeta)
        return prob * e_j**2 * np.exp(-1j * fab.energy_per_thickness * w * times)

    values, _ = quad_vector(integrand, lo, hi, rel_tol=rel_tol, points=(w0,))
    return CorrelationSeries(
        times,
        0.5 * eps_i**2 * p.n_j * values,
        SeriesSource.CHAIN_CONTINUUM,
        params={"scenario": "disorder", "eps_i": eps_i, "delta_ec": fab.delta_ec, "n_j": p.n_j},
    )


def disorder_chain_continuum(p: DisorderChainParams) -> ContinuumChain:
    """
    The disorder bath as a continuum chain whose coordinate is E_C itself.

    ν(E) = N_J·Gaussian(E_0, δE_C), E_C(x) = x, E_J(x) = (F_JA/ζ)/sinh(x/E_ζ).
    """
    fab = p.fab
    lo, hi = _support(p)
    return ContinuumChain(
        domain=(lo, hi),
        density=Gaussian(p.n_j / (math.sqrt(2.0 * math.pi) * fab.delta_ec), fab.e_0, fab.delta_ec),
        ec_profile=Polynomial([0.0, 1.0]),
        ej_profile=InverseSinh(fab.f_j_a_over_zeta, fab.e_zeta),
        monotone_intervals=((lo, hi),),
        coupling_eps=p.eps_i,
        label="disorder",
        params=p.to_dict(),
    )


def optimal_disorder_width(omega0: float, e_0: float) -> float:
    """δE_C maximizing κ(ω₀) at fixed ω₀ and E_0: the Gaussian weight peaks at |ω₀ − E_0|."""
    return abs(omega0 - e_0)


def sampled_energy_moments(p: DisorderChainParams) -> tuple[float, float]:
    """Analytic mean and variance of E_C for the truncated thickness law."""
    fab = p.fab
    return truncated_normal_moments(fab.e_0, fab.delta_ec, fab.e_min)
