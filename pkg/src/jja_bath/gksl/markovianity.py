"""Born-Markov and secular diagnostics for a bath and oscillator."""

import logging
import math
from dataclasses import asdict, dataclass
from typing import Any, Protocol, Union, runtime_checkable

import numpy as np

from jja_bath.chain.correlation import gamma_from_spectral, spectral_density_large_ec
from jja_bath.chain.harmonic import harmonic_spectral_density
from jja_bath.chain.spec import HARMONIC, ContinuumChain
from jja_bath.chain.spectral import SpectralDensity
from jja_bath.gksl.coefficients import OscillatorParams, decay_rate_sweep

logger = logging.getLogger(__name__)

DECAY_WINDOW = 50.0
DECAY_POINTS = 2001
RATE_GRID_POINTS = 401
EDGE_OFFSET = 0.5


@dataclass(frozen=True)
class MarkovianityThresholds:
    """How small "≪" has to be for each criterion."""

    bm: float = 0.01
    secular: float = 0.01

    def __post_init__(self):
        if not (self.bm > 0.0 and self.secular > 0.0):
            raise ValueError("Markovianity thresholds must be positive")

    def to_dict(self) -> dict[str, float]:
        return asdict(self)

    @staticmethod
    def from_dict(data: dict[str, Any]) -> "MarkovianityThresholds":
        return MarkovianityThresholds(float(data.get("bm", 0.01)), float(data.get("secular", 0.01)))


@dataclass(frozen=True)
class EmpiricalEstimate:
    """Closed-form Markovianity scales of a scenario family."""

    omega_b: float
    zeta_m: float
    kappa_max: float
    bm_lhs: float
    bm_rhs: float


@runtime_checkable
class SupportsEmpiricalMarkovianity(Protocol):
    def empirical_markovianity(self, osc: OscillatorParams) -> EmpiricalEstimate: ...


@dataclass(frozen=True)
class MarkovianityReport:
    omega_b: float
    zeta_m: float
    kappa_max: float
    bm_margin: float
    secular_margin: float
    bm: bool
    secular: bool
    method: str

    @property
    def criteria(self) -> dict[str, bool]:
        return {"bm": self.bm, "secular": self.secular}

    def to_dict(self) -> dict[str, Any]:
        return {
            "omega_b": self.omega_b,
            "zeta_m": self.zeta_m,
            "kappa_max": self.kappa_max,
            "bm_margin": self.bm_margin,
            "secular_margin": self.secular_margin,
            "criteria": self.criteria,
            "method": self.method,
        }

    def diagnostics(self) -> dict[str, float]:
        """The validity scales a GkslResult carries."""
        return {
            "omega_b": self.omega_b,
            "zeta_m": self.zeta_m,
            "bm_margin": self.bm_margin,
            "secular_margin": self.secular_margin,
        }


def measured_bath_rate(j: SpectralDensity, eps_i: float) -> float:
    """
    ω_B as the inverse of the first time |Γ(t)| drops below Re Γ(0)/e.

    Returns 0 when Γ(t) never decays that far inside 50 support widths.
    """
    width = j.support[1] - j.support[0]
    times = np.linspace(0.0, DECAY_WINDOW / width, DECAY_POINTS)
    series = gamma_from_spectral(j, eps_i, times)
    level = series.real[0] / math.e
    magnitude = np.abs(series.values)
    below = np.nonzero(magnitude < level)[0]
    if below.size == 0:
        logger.warning("bath correlation does not decay to 1/e within t=%.3g", times[-1])
        return 0.0
    k = int(below[0])
    t0, t1 = times[k - 1], times[k]
    m0, m1 = magnitude[k - 1], magnitude[k]
    crossing = t0 + (m0 - level) * (t1 - t0) / (m0 - m1)
    return 1.0 / crossing


def rate_grid(j: SpectralDensity, points: int = RATE_GRID_POINTS) -> np.ndarray:
    """Frequencies for the κ sweep; the first point sits half a step inside the lower band edge."""
    lo, hi = j.support
    omegas = np.linspace(lo, hi, points)
    omegas[0] = lo + EDGE_OFFSET * (omegas[1] - omegas[0])
    return omegas


def _density_of(scenario: Union[SpectralDensity, ContinuumChain]) -> SpectralDensity:
    if isinstance(scenario, SpectralDensity):
        return scenario
    if isinstance(scenario, ContinuumChain):
        if scenario.regime == HARMONIC:
            return harmonic_spectral_density(scenario)
        return spectral_density_large_ec(scenario)
    raise TypeError(f"cannot derive a spectral density from {type(scenario).__name__}")


def markovianity_report(
    scenario: Union[SupportsEmpiricalMarkovianity, SpectralDensity, ContinuumChain],
    osc: OscillatorParams,
    thresholds: MarkovianityThresholds | None = None,
) -> MarkovianityReport:
    """
    ω_B, ζ_M, κ_max and the two "≪" criteria.

    Scenario families with a closed-form rule (``empirical_markovianity``) use
    it; anything else gets ω_B from the measured 1/e decay of Γ(t) and κ_max,
    ζ_M = max κ(ω)/ω from a 401-point sweep over the support.
    """
    thresholds = thresholds or MarkovianityThresholds()
    if isinstance(scenario, SupportsEmpiricalMarkovianity):
        est = scenario.empirical_markovianity(osc)
        return MarkovianityReport(
            omega_b=est.omega_b,
            zeta_m=est.zeta_m,
            kappa_max=est.kappa_max,
            bm_margin=est.kappa_max / est.omega_b,
            secular_margin=est.zeta_m,
            bm=est.bm_lhs < thresholds.bm * est.bm_rhs,
            secular=est.zeta_m < thresholds.secular,
            method="empirical",
        )

    j = _density_of(scenario)
    omegas = rate_grid(j)
    kappas = decay_rate_sweep(j, osc, omegas)
    kappa_max = float(np.max(kappas))
    zeta_m = float(np.max(kappas / omegas))
    omega_b = measured_bath_rate(j, osc.eps_i)
    bm_margin = kappa_max / omega_b if omega_b > 0.0 else math.inf
    return MarkovianityReport(
        omega_b=omega_b,
        zeta_m=zeta_m,
        kappa_max=kappa_max,
        bm_margin=bm_margin,
        secular_margin=zeta_m,
        bm=bm_margin < thresholds.bm,
        secular=zeta_m < thresholds.secular,
        method="measured",
    )
