"""Large-E_C ↔ large-E_J correspondence between chains with the same bath."""

import logging
import math
from dataclasses import dataclass
from typing import Any, Optional

import numpy as np
from numpy.polynomial import polynomial as P

from jja_bath.chain.correlation import chain_regime_flags, spectral_density_large_ec
from jja_bath.chain.harmonic import harmonic_spectral_density
from jja_bath.chain.profiles import Profile, Rational, SqrtProduct, Tabulated, as_rational
from jja_bath.chain.spec import HARMONIC, LARGE_EC, ContinuumChain
from jja_bath.errors import RegimeError
from jja_bath.gksl.coefficients import OscillatorParams, decay_rate, lamb_shift

logger = logging.getLogger(__name__)

TABULATION_POINTS = 2049
_TINY = 1e-300


@dataclass(frozen=True, eq=False)
class DualityMap:
    """
    The harmonic chain whose ω̃(x) equals the source E_C(x).

    ``beta_bound`` is the mapped inverse temperature β̃ = β / ln[E_C/E_J]_min;
    it is reported, not enforced.
    """

    source: ContinuumChain
    mapped_ec_profile: Profile
    mapped_ej_profile: Profile
    mapped_omega_profile: Profile
    beta_bound: float
    log_ratio_min: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "source": self.source.to_dict(),
            "mapped": {
                "ec": self.mapped_ec_profile.to_dict(),
                "ej": self.mapped_ej_profile.to_dict(),
                "omega": self.mapped_omega_profile.to_dict(),
            },
            "log_ratio_min": self.log_ratio_min,
            "beta_bound": self.beta_bound if math.isfinite(self.beta_bound) else None,
        }


def _symbolic_profiles(e_c: Rational, e_j: Rational) -> tuple[Rational, Rational]:
    # Ẽ_C = 2 N_J² D_C / (D_J² N_C),  Ẽ_J = N_C³ D_J² / (4 D_C³ N_J²)
    nj2 = P.polypow(e_j.numerator, 2)
    dj2 = P.polypow(e_j.denominator, 2)
    mapped_ec = Rational(2.0 * P.polymul(nj2, e_c.denominator), P.polymul(dj2, e_c.numerator))
    mapped_ej = Rational(
        P.polymul(P.polypow(e_c.numerator, 3), dj2),
        4.0 * P.polymul(P.polypow(e_c.denominator, 3), nj2),
    )
    return mapped_ec, mapped_ej


def _tabulated_profiles(chain: ContinuumChain) -> tuple[Profile, Profile]:
    lo, hi = chain.domain

    def mapped_ec(x):
        return 2.0 * chain.ej_profile.value(x) ** 2 / chain.ec_profile.value(x)

    def mapped_ej(x):
        return chain.ec_profile.value(x) ** 3 / (4.0 * chain.ej_profile.value(x) ** 2)

    return (
        Tabulated.sample(mapped_ec, lo, hi, TABULATION_POINTS),
        Tabulated.sample(mapped_ej, lo, hi, TABULATION_POINTS),
    )


def map_to_large_ej(chain: ContinuumChain, beta: float = math.inf) -> DualityMap:
    """
    Ẽ_C = 2E_J²/E_C, Ẽ_J = E_C³/(4E_J²) and ν̃ = ν.

    Polynomial and rational profiles are mapped in closed form; anything else
    is tabulated on a 2049-point grid and splined.

    Raises:
        RegimeError: If the source is not a large-E_C chain, or E_J vanishes
            somewhere on the domain.
    """
    if chain.regime != LARGE_EC:
        raise RegimeError("duality maps a large-E_C chain; got a harmonic one")
    grid = chain.grid()
    e_c = np.asarray(chain.ec_profile.value(grid), dtype=float)
    e_j = np.asarray(chain.ej_profile.value(grid), dtype=float)
    if np.any(e_j <= 0.0):
        raise RegimeError("E_J vanishes on the chain; the mapped E_J would diverge")
    flags = chain_regime_flags(chain)
    if not (flags.small_ej and flags.small_ej_width):
        raise RegimeError(
            f"source chain is outside the large-E_C regime (E_J/E_C up to {flags.ej_over_ec:.3g}, "
            f"E_J/sqrt(E_C dE_C) up to {flags.ej_over_sqrt_ec_width:.3g})"
        )

    ec_rational, ej_rational = as_rational(chain.ec_profile), as_rational(chain.ej_profile)
    if ec_rational is not None and ej_rational is not None:
        mapped_ec, mapped_ej = _symbolic_profiles(ec_rational, ej_rational)
    else:
        logger.debug("mapping non-rational profiles of chain %s by tabulation", chain.label or "")
        mapped_ec, mapped_ej = _tabulated_profiles(chain)

    log_ratio_min = float(np.min(np.log(e_c / e_j)))
    beta_bound = beta / log_ratio_min if math.isfinite(beta) else math.inf
    return DualityMap(
        source=chain,
        mapped_ec_profile=mapped_ec,
        mapped_ej_profile=mapped_ej,
        mapped_omega_profile=SqrtProduct(2.0, mapped_ej, mapped_ec),
        beta_bound=beta_bound,
        log_ratio_min=log_ratio_min,
    )


def mapped_chain(duality: DualityMap) -> ContinuumChain:
    """The large-E_J chain carrying Ẽ_C, Ẽ_J and the source density."""
    source = duality.source
    return ContinuumChain(
        domain=source.domain,
        density=source.density,
        ec_profile=duality.mapped_ec_profile,
        ej_profile=duality.mapped_ej_profile,
        monotone_intervals=source.monotone_intervals,
        coupling_eps=source.coupling_eps,
        regime=HARMONIC,
        label=f"{source.label}-dual" if source.label else "dual",
        params=dict(source.params),
    )


@dataclass(frozen=True)
class DualityReport:
    max_relative_deviation: float
    kappa_large_ec: float
    kappa_harmonic: float
    lamb_shift_large_ec: float
    lamb_shift_harmonic: float
    max_mapped_ratio: float
    omega0: float
    probe_points: int

    @property
    def kappa_relative_deviation(self) -> float:
        return abs(self.kappa_harmonic - self.kappa_large_ec) / max(abs(self.kappa_large_ec), _TINY)

    @property
    def lamb_shift_relative_deviation(self) -> float:
        return abs(self.lamb_shift_harmonic - self.lamb_shift_large_ec) / max(abs(self.lamb_shift_large_ec), _TINY)

    def to_dict(self) -> dict[str, Any]:
        return {
            "max_relative_deviation": self.max_relative_deviation,
            "omega0": self.omega0,
            "kappa": {
                "large_ec": self.kappa_large_ec,
                "harmonic": self.kappa_harmonic,
                "relative_deviation": self.kappa_relative_deviation,
            },
            "lamb_shift": {
                "large_ec": self.lamb_shift_large_ec,
                "harmonic": self.lamb_shift_harmonic,
                "relative_deviation": self.lamb_shift_relative_deviation,
            },
            "max_mapped_ratio": self.max_mapped_ratio,
            "probe_points": self.probe_points,
        }


def verify_duality(
    duality: DualityMap,
    probe_grid,
    osc: Optional[OscillatorParams] = None,
) -> DualityReport:
    """
    Compare J(E_C) of the source with J̃(ω) of the mapped chain on a probe grid.

    Probe energies outside the common support are dropped. κ and δ_LS are
    compared at ``osc.omega0``; without ``osc`` the middle of the support is
    used with E_Q = 1.
    """
    j_large = spectral_density_large_ec(duality.source)
    j_harmonic = harmonic_spectral_density(mapped_chain(duality))
    lo = max(j_large.support[0], j_harmonic.support[0])
    hi = min(j_large.support[1], j_harmonic.support[1])
    probes = np.asarray(probe_grid, dtype=float)
    probes = probes[(probes >= lo) & (probes <= hi)]
    if probes.size == 0:
        raise ValueError(f"no probe energies inside the common support [{lo}, {hi}]")
    reference = np.asarray(j_large.evaluate(probes))
    mapped = np.asarray(j_harmonic.evaluate(probes))
    scale = np.maximum(np.abs(reference), _TINY)
    deviation = float(np.max(np.abs(mapped - reference) / scale))

    if osc is None:
        osc = OscillatorParams(0.5 * (lo + hi), 1.0, duality.source.coupling_eps)
    grid = duality.source.grid()
    ratio = np.asarray(duality.mapped_ec_profile.value(grid)) / np.asarray(duality.mapped_ej_profile.value(grid))
    report = DualityReport(
        max_relative_deviation=deviation,
        kappa_large_ec=decay_rate(j_large, osc),
        kappa_harmonic=decay_rate(j_harmonic, osc),
        lamb_shift_large_ec=lamb_shift(j_large, osc),
        lamb_shift_harmonic=lamb_shift(j_harmonic, osc),
        max_mapped_ratio=float(np.max(ratio)),
        omega0=osc.omega0,
        probe_points=int(probes.size),
    )
    logger.debug("duality check on %d probes: max relative deviation %.3e", probes.size, deviation)
    return report
