"""Second-order perturbative spectrum and the three temperature regimes of G(t)."""

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from jja_bath.junction.hamiltonian import JunctionParams
from jja_bath.junction.series import CorrelationSeries, SeriesSource

logger = logging.getLogger(__name__)

MAX_LAMBDA = 0.2
MUCH_LESS = 0.1
SERIES_TOLERANCE = 1e-15

# basis label of the bare charge-neutral state |0⟩
GROUND_LABEL = (0, 0)


@dataclass(frozen=True)
class PerturbativeSpectrum:
    """
    First-order eigenstate and second-order energy of level (n, ±).

    ``state_coeffs`` maps (level, parity) labels of χ_{m,±} = (|m⟩ ± |−m⟩)/√2
    to amplitudes; the bare |0⟩ is labelled (0, 0).
    """

    level: int
    parity: Optional[int]
    energy_o2: float
    state_coeffs: dict[tuple[int, int], float]

    def norm_deviation(self) -> float:
        return sum(c**2 for c in self.state_coeffs.values()) - 1.0

    def charge_vector(self, n_max: int) -> np.ndarray:
        """Amplitudes on |−n_max⟩, ..., |n_max⟩."""
        vec = np.zeros(2 * n_max + 1)
        for (m, parity), coeff in self.state_coeffs.items():
            if m > n_max:
                raise ValueError(f"state has weight on level {m} beyond n_max={n_max}")
            if m == 0:
                vec[n_max] += coeff
            else:
                vec[n_max + m] += coeff / math.sqrt(2.0)
                vec[n_max - m] += parity * coeff / math.sqrt(2.0)
        return vec


def _check_level(n: int, parity: Optional[int], p: JunctionParams) -> None:
    if n < 0:
        raise ValueError(f"level must be >= 0, got {n}")
    if n >= 1 and parity not in (1, -1):
        raise ValueError(f"excited level {n} needs parity +1 or -1")
    if p.lam > MAX_LAMBDA:
        logger.warning("lambda=%.3g exceeds %.1f; second-order results are unreliable", p.lam, MAX_LAMBDA)


def perturbative_energy(n: int, parity: Optional[int], p: JunctionParams) -> float:
    """
    Level energy to O(λ²).

    Raises:
        ValueError: If n < 0 or an excited level has no parity.
    """
    _check_level(n, parity, p)
    lam2 = p.lam**2
    if n == 0:
        return -0.5 * lam2 * p.e_c
    if n == 1:
        return p.e_c * (1.0 + 5.0 * lam2 / 12.0) if parity == 1 else p.e_c * (1.0 - lam2 / 12.0)
    return p.e_c * (n**2 + lam2 / (2.0 * (4 * n**2 - 1)))


def perturbative_state(n: int, parity: Optional[int], p: JunctionParams) -> PerturbativeSpectrum:
    """First-order eigenstate in the χ_{m,±} basis."""
    _check_level(n, parity, p)
    lam = p.lam
    if n == 0:
        coeffs = {GROUND_LABEL: 1.0, (1, 1): lam / math.sqrt(2.0)}
        return PerturbativeSpectrum(0, None, perturbative_energy(0, None, p), coeffs)

    coeffs = {(n, parity): 1.0, (n + 1, parity): lam / (4 * n + 2)}
    if n == 1:
        if parity == 1:
            coeffs[GROUND_LABEL] = -lam / math.sqrt(2.0)
    else:
        coeffs[(n - 1, parity)] = -lam / (4 * n - 2)
    return PerturbativeSpectrum(n, parity, perturbative_energy(n, parity, p), coeffs)


def perturbative_matrix_element(p: JunctionParams) -> float:
    """|⟨ψ_0|N|ψ_{1,−}⟩|² from the first-order states (λ²/2 to this order)."""
    n_max = 3
    charges = np.arange(-n_max, n_max + 1)
    ground = perturbative_state(0, None, p).charge_vector(n_max)
    excited = perturbative_state(1, -1, p).charge_vector(n_max)
    return float(np.dot(ground, charges * excited) ** 2)


def _times(times) -> np.ndarray:
    return np.asarray(times, dtype=float)


def _short_time_flag(p: JunctionParams, times: np.ndarray) -> bool:
    t_max = float(np.max(np.abs(times))) if times.size else 0.0
    return t_max * p.lam**2 * p.e_c <= MUCH_LESS


def g_low_t(p: JunctionParams, times) -> CorrelationSeries:
    """Zero-temperature G(t) = (λ²/2) e^{−iE_C t}, valid for t ≪ 1/(λ²E_C)."""
    times = _times(times)
    values = 0.5 * p.lam**2 * np.exp(-1j * p.e_c * times)
    return CorrelationSeries(
        times,
        values,
        SeriesSource.PERTURBATIVE_LOW_T,
        params={"e_c": p.e_c, "e_j": p.e_j},
        flags={"short_time": _short_time_flag(p, times)},
    )


def g_moderate(p: JunctionParams, beta: float, times) -> CorrelationSeries:
    """G(t) = (λ²/2) e^{−iE_C t} + 2e^{−βE_C}, valid for λ³E_C ≪ β⁻¹ ≪ E_C."""
    if not beta > 0.0:
        raise ValueError(f"beta must be positive, got {beta}")
    times = _times(times)
    offset = 2.0 * math.exp(-beta * p.e_c)
    values = 0.5 * p.lam**2 * np.exp(-1j * p.e_c * times) + offset
    return CorrelationSeries(
        times,
        values,
        SeriesSource.PERTURBATIVE_EPS,
        params={"e_c": p.e_c, "e_j": p.e_j, "beta": beta},
        flags={
            "short_time": _short_time_flag(p, times),
            "above_lambda_cubed": p.lam**3 * p.e_c * beta <= MUCH_LESS,
            "below_charging": 1.0 / (beta * p.e_c) <= MUCH_LESS,
        },
    )


def g_high_t(p: JunctionParams, beta: float, series_cutoff: Optional[int] = None) -> complex:
    """
    Free-rotor constant 2Σn²e^{−n²βE_C} / (1 + 2Σe^{−n²βE_C}).

    Without ``series_cutoff`` the sums stop once a term drops below 1e-15 of
    the running numerator.
    """
    if not beta > 0.0:
        raise ValueError(f"beta must be positive, got {beta}")
    numerator = 0.0
    partition = 1.0
    n = 0
    while True:
        n += 1
        weight = math.exp(-(n**2) * beta * p.e_c)
        numerator += 2.0 * n**2 * weight
        partition += 2.0 * weight
        if series_cutoff is not None:
            if n >= series_cutoff:
                tail = (n + 1) ** 2 * math.exp(-((n + 1) ** 2) * beta * p.e_c)
                if tail >= SERIES_TOLERANCE:
                    logger.warning("series_cutoff=%d leaves a tail term of %.2e", series_cutoff, tail)
                break
        elif n**2 * weight <= SERIES_TOLERANCE * numerator:
            break
    return complex(numerator / partition)
