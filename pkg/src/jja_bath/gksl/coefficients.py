"""Master-equation coefficients of the LC oscillator from J(E)."""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Mapping, Optional

import numpy as np

from jja_bath.chain.spectral import SpectralDensity
from jja_bath.numerics.quadrature import quad_adaptive, quad_pv

logger = logging.getLogger(__name__)

EDGE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class OscillatorParams:
    """LC oscillator: plasma frequency ω₀, charging energy E_Q, coupling ε_I."""

    omega0: float
    e_q: float
    eps_i: float

    def __post_init__(self):
        for name in ("omega0", "e_q", "eps_i"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")

    @property
    def coupling_prefactor(self) -> float:
        """𝒞 = 1/(2E_Q), so that κ = 𝒞 ω₀ Re Γ(ω₀)."""
        return 0.5 / self.e_q

    def with_omega0(self, omega0: float) -> "OscillatorParams":
        return OscillatorParams(omega0=omega0, e_q=self.e_q, eps_i=self.eps_i)

    def to_dict(self) -> dict[str, float]:
        return {"omega0": self.omega0, "e_q": self.e_q, "eps_i": self.eps_i}

    @staticmethod
    def from_dict(data: dict[str, Any]) -> "OscillatorParams":
        return OscillatorParams(float(data["omega0"]), float(data["e_q"]), float(data["eps_i"]))


def _on_edge(value: float, edge: float) -> bool:
    return abs(value - edge) <= EDGE_TOLERANCE * max(1.0, abs(edge))


def principal_value_integral(j: SpectralDensity, pole: float, rel_tol: float = 1e-10) -> float:
    """
    PV ∫ J(E) / (E − pole) dE over the support of J.

    A pole on a support edge where J is nonzero is a logarithmic divergence
    and returns ±inf with a warning.
    """
    lo, hi = j.support
    for edge, sign in ((lo, 1.0), (hi, -1.0)):
        if _on_edge(pole, edge):
            if j.evaluate(edge) > 0.0:
                logger.warning("principal value diverges: pole %.6g sits on a band edge of J", pole)
                return sign * math.inf
            pieces = j.pieces()
            return float(
                sum(quad_adaptive(lambda e: j.evaluate(e) / (e - pole), a, b, rel_tol=rel_tol).value for a, b in pieces)
            )

    pieces = j.pieces()
    total = 0.0
    k = 0
    while k < len(pieces):
        a, b = pieces[k]
        if k + 1 < len(pieces) and _on_edge(pole, b):
            b = pieces[k + 1][1]
            k += 1
        if a < pole < b:
            total += quad_pv(j.evaluate, a, b, pole, rel_tol=rel_tol).value
        else:
            total += quad_adaptive(lambda e: j.evaluate(e) / (e - pole), a, b, rel_tol=rel_tol).value
        k += 1
    return float(total)


def half_fourier(j: SpectralDensity, omega: float, eps_i: float) -> complex:
    """Γ(ω) = (ε_I/2)² [π J(ω) Θ(ω) − i PV ∫ J(E)/(E − ω) dE]."""
    scale = (0.5 * eps_i) ** 2
    real = math.pi * j.evaluate(omega) if omega > 0.0 else 0.0
    pv = principal_value_integral(j, omega)
    return complex(scale * real, -scale * pv)


def decay_rate(j: SpectralDensity, osc: OscillatorParams) -> float:
    """κ(ω₀) = π ε_I² ω₀ J(ω₀) / (8E_Q); zero off the support."""
    return math.pi * osc.eps_i**2 * osc.omega0 * j.evaluate(osc.omega0) / (8.0 * osc.e_q)


def lamb_shift(j: SpectralDensity, osc: OscillatorParams) -> float:
    """δ_LS(ω₀) = (ω₀ ε_I² / 16E_Q) [PV ∫ J/(E − ω₀) + ∫ J/(E + ω₀)]."""
    prefactor = osc.omega0 * osc.eps_i**2 / (16.0 * osc.e_q)
    return prefactor * (principal_value_integral(j, osc.omega0) + principal_value_integral(j, -osc.omega0))


def constant_shift(j: SpectralDensity, osc: OscillatorParams) -> float:
    """Scalar energy shift (ω₀/4E_Q)(ε_I/2)² ∫ J/(E + ω₀); commutes with everything."""
    return osc.omega0 / (4.0 * osc.e_q) * (0.5 * osc.eps_i) ** 2 * principal_value_integral(j, -osc.omega0)


@dataclass(frozen=True)
class GkslResult:
    """Decay rate, Lamb shift and Γ(ω₀) for one oscillator frequency."""

    kappa: float
    lamb_shift: float
    gamma_omega: complex
    kappa_negative: float = 0.0
    constant_shift: float = 0.0
    omega0: float = 0.0
    diagnostics: Optional[dict[str, Any]] = field(default=None)

    def __post_init__(self):
        if self.kappa < 0.0:
            raise ValueError(f"decay rate must be nonnegative, got {self.kappa}")

    def to_dict(self) -> dict[str, Any]:
        data = {
            "omega0": self.omega0,
            "kappa": self.kappa,
            "lamb_shift": _finite_or_none(self.lamb_shift),
            "gamma_omega": {
                "re": _finite_or_none(self.gamma_omega.real),
                "im": _finite_or_none(self.gamma_omega.imag),
            },
            "kappa_negative": self.kappa_negative,
            "constant_shift": _finite_or_none(self.constant_shift),
        }
        if self.diagnostics is not None:
            data["diagnostics"] = dict(self.diagnostics)
        return data


def _finite_or_none(value: float) -> Optional[float]:
    return float(value) if math.isfinite(value) else None


def gksl_coefficients(
    j: SpectralDensity, osc: OscillatorParams, diagnostics: Optional[Mapping[str, float]] = None
) -> GkslResult:
    """
    All coefficients at ω₀; κ(−ω₀) is identically zero for ω₀ > 0.

    ``diagnostics`` carries the validity scales (omega_b, zeta_m, bm_margin,
    secular_margin) of a Markovianity report for the same bath.
    """
    return GkslResult(
        kappa=decay_rate(j, osc),
        lamb_shift=lamb_shift(j, osc),
        gamma_omega=half_fourier(j, osc.omega0, osc.eps_i),
        kappa_negative=0.0,
        constant_shift=constant_shift(j, osc),
        omega0=osc.omega0,
        diagnostics=dict(diagnostics) if diagnostics is not None else None,
    )


def decay_rate_sweep(j: SpectralDensity, osc: OscillatorParams, omegas) -> np.ndarray:
    """κ(ω) over a frequency grid; nonpositive frequencies give 0."""
    return np.array(
        [decay_rate(j, osc.with_omega0(float(w))) if w > 0.0 else 0.0 for w in np.asarray(omegas, dtype=float)]
    )


def lamb_shift_sweep(j: SpectralDensity, osc: OscillatorParams, omegas) -> np.ndarray:
    """δ_LS(ω) over a frequency grid; band-edge divergences appear as ±inf, ω = 0 gives 0."""
    return np.array(
        [lamb_shift(j, osc.with_omega0(float(w))) if w > 0.0 else 0.0 for w in np.asarray(omegas, dtype=float)]
    )
