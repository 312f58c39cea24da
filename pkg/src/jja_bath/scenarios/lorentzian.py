"""Engineered chain with a quadratic E_C(x) profile and a Lorentzian J(E_C)."""

import logging
import math
from dataclasses import asdict, dataclass
from typing import Any

import numpy as np
from numpy.polynomial import polynomial as P

from jja_bath.chain.profiles import Polynomial, Rational
from jja_bath.chain.spec import ContinuumChain
from jja_bath.chain.spectral import DensityKind, SpectralDensity
from jja_bath.gksl.coefficients import OscillatorParams
from jja_bath.gksl.markovianity import EmpiricalEstimate

logger = logging.getLogger(__name__)

MUCH_LESS = 0.1


@dataclass(frozen=True)
class LorentzianChainParams:
    """
    Chain with E_C(x) = (1 + ax²/2L²)E_C0, E_J(x) = E_J0/(1 + ax²/2L²) on [−L, L].

    Defaults are the engineered chain of the zero-temperature study:
    𝒜 = 500, σ = 0.25, a = 0.4, E_J0 = 0.05E_C0 and ε_I = 0.01.
    """

    amp: float = 500.0
    sigma: float = 0.25
    a: float = 0.4
    e_c0: float = 1.0
    e_j0: float = 0.05
    half_length: float = 1.0
    eps_i: float = 0.01

    def __post_init__(self):
        for name in ("amp", "sigma", "a", "e_c0", "half_length", "eps_i"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")
        if self.e_j0 < 0.0:
            raise ValueError("e_j0 must be nonnegative")
        if self.e_j0 > MUCH_LESS * self.e_c0:
            logger.warning("E_J0/E_C0 = %.3g is not small; the large-E_C description is doubtful", self.e_j0 / self.e_c0)

    @classmethod
    def high_temperature_variant(cls, **overrides) -> "LorentzianChainParams":
        """Steep, sparse chain (a = 40, 𝒜 = 50) whose thermal offset stays small."""
        values = {"amp": 50.0, "a": 40.0}
        values.update(overrides)
        return cls(**values)

    @property
    def band(self) -> tuple[float, float]:
        """Support [E_C0, (1 + a/2)E_C0] of J."""
        return self.e_c0, (1.0 + 0.5 * self.a) * self.e_c0

    @property
    def width(self) -> float:
        """δE_C = aE_C0·min(σ, 1/2), the bath bandwidth estimate."""
        return self.a * self.e_c0 * min(self.sigma, 0.5)

    def closed_form_density(self, energy):
        """J(E_C) = a𝒜E_C0E_J0² / [(E_C − E_C0)² + (aσE_C0)²] on the band, 0 elsewhere."""
        lo, hi = self.band
        e = np.asarray(energy, dtype=float)
        out = self.a * self.amp * self.e_c0 * self.e_j0**2 / ((e - self.e_c0) ** 2 + (self.a * self.sigma * self.e_c0) ** 2)
        out = np.where((e >= lo) & (e <= hi), out, 0.0)
        return float(out) if np.ndim(energy) == 0 else out

    def zeta_m(self, osc: OscillatorParams) -> float:
        """ζ_M = π𝒜ε_I²E_J0² / (8aσ²E_C0E_Q), the largest κ(ω₀)/ω₀."""
        return (
            math.pi
            * self.amp
            * osc.eps_i**2
            * self.e_j0**2
            / (8.0 * self.a * self.sigma**2 * self.e_c0 * osc.e_q)
        )

    def peak_frequency(self) -> float:
        """ω₀ = E_C0√(1 + (aσ)²), where κ(ω₀) peaks."""
        return self.e_c0 * math.sqrt(1.0 + (self.a * self.sigma) ** 2)

    def empirical_markovianity(self, osc: OscillatorParams) -> EmpiricalEstimate:
        zeta = self.zeta_m(osc)
        root = math.sqrt(1.0 + (self.a * self.sigma) ** 2)
        return EmpiricalEstimate(
            omega_b=self.width,
            zeta_m=zeta,
            kappa_max=zeta * self.e_c0 * (1.0 + root) / 2.0,
            bm_lhs=zeta * (1.0 + root) / (self.a * self.sigma),
            bm_rhs=min(1.0, 2.0 * self.sigma),
        )

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @staticmethod
    def from_dict(data: dict[str, Any]) -> "LorentzianChainParams":
        known = LorentzianChainParams.__dataclass_fields__
        unknown = sorted(set(data) - set(known))
        if unknown:
            raise ValueError(f"unknown Lorentzian parameters: {', '.join(unknown)}")
        return LorentzianChainParams(**{k: float(v) for k, v in data.items()})


def lorentzian_chain(p: LorentzianChainParams) -> tuple[ContinuumChain, SpectralDensity]:
    """
    The continuum chain and its closed-form spectral density.

    ν(x) = 𝒜L²|x|u²/(x⁴ + 4σ²L⁴) with u = 1 + ax²/2L²; the chain is monotone
    in E_C on [−L, 0] and [0, L].
    """
    L = p.half_length
    u = np.array([1.0, 0.0, p.a / (2.0 * L**2)])
    density = Rational(
        numerator=p.amp * L**2 * P.polypow(u, 2),
        denominator=[4.0 * p.sigma**2 * L**4, 0.0, 0.0, 0.0, 1.0],
        abs_power=1,
    )
    chain = ContinuumChain(
        domain=(-L, L),
        density=density,
        ec_profile=Polynomial(p.e_c0 * u),
        ej_profile=Rational([p.e_j0], u),
        monotone_intervals=((-L, 0.0), (0.0, L)),
        coupling_eps=p.eps_i,
        label="lorentzian",
        params=p.to_dict(),
    )
    closed_form = SpectralDensity(
        support=p.band,
        function=p.closed_form_density,
        kind=DensityKind.CLOSED_FORM,
        params={"scenario": "lorentzian", **p.to_dict()},
    )
    return chain, closed_form


def lorentzian_markovianity(p: LorentzianChainParams, osc: OscillatorParams) -> EmpiricalEstimate:
    """Closed-form ω_B, ζ_M and κ_max for the Lorentzian chain."""
    return p.empirical_markovianity(osc)
