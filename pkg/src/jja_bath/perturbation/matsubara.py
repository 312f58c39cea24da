"""Imaginary-time kernels and the Matsubara form of G(t)."""

import logging
import math

import numpy as np

from jja_bath.junction.hamiltonian import JunctionParams
from jja_bath.junction.series import CorrelationSeries, SeriesSource
from jja_bath.perturbation.closed_form import MUCH_LESS

logger = logging.getLogger(__name__)


def matsubara_f(n: int, tau, e_c: float):
    """F_n(τ) = exp[−E_C τ (1+2n)]; τ may be complex."""
    return np.exp(-e_c * np.asarray(tau) * (1 + 2 * n))


def _k_closed_form(n: int, tau, e_c: float):
    m = 1 + 2 * n
    return matsubara_f(n, tau, e_c) / (m * e_c) ** 2 + tau / (m * e_c) - 1.0 / (m * e_c) ** 2


def matsubara_k(n: int, tau, e_c: float):
    """
    K_n(τ) = ∫₀^τ dτ′ ∫₀^τ′ dτ″ F_n(τ′ − τ″).

    Raises:
        ValueError: If a real τ is negative.
    """
    tau = np.asarray(tau)
    if np.isrealobj(tau) and np.any(tau < 0.0):
        raise ValueError("K_n needs tau >= 0")
    result = _k_closed_form(n, tau, e_c)
    return float(result) if result.ndim == 0 and np.isrealobj(result) else result


def matsubara_l(n: int, tau, beta: float, e_c: float):
    """
    L_n(τ) = ∫₀^τ dτ′ ∫_τ^β dτ″ F_n(τ″ − τ′).

    Raises:
        ValueError: If τ lies outside [0, β].
    """
    tau = np.asarray(tau, dtype=float)
    if np.any(tau < 0.0) or np.any(tau > beta):
        raise ValueError("L_n needs 0 <= tau <= beta")
    m = 1 + 2 * n
    result = (
        np.exp(-beta * e_c * m) * (1.0 - np.exp(tau * e_c * m)) - np.exp(-tau * e_c * m) + 1.0
    ) / (m * e_c) ** 2
    return float(result) if result.ndim == 0 else result


def matsubara_partition(p: JunctionParams, beta: float) -> float:
    """Tr e^{−βH} to O(λ²) at lowest order in e^{−βE_C}: 1 − βE_Cλ²/2."""
    return 1.0 - 0.5 * beta * p.e_c * p.lam**2


def _leading_weighted_k(p: JunctionParams, beta: float, tau: np.ndarray) -> np.ndarray:
    # Σ_n n² K_n(τ) e^{−βE_C n²} at order e^0: only the growing exponential of n = −1 survives
    n = -1
    m = 1 + 2 * n
    exponent = -beta * p.e_c * n**2 - p.e_c * tau * m
    return n**2 * np.exp(exponent) / (m * p.e_c) ** 2


def matsubara_numerator(p: JunctionParams, beta: float, times) -> np.ndarray:
    """
    Numerator of the Matsubara G(t) after τ → it and the low-temperature reduction.

    The free-rotor part keeps the |n| = 1 Boltzmann weights; the λ² part comes
    from the I₄ term, whose K_n and K_{−n} sums contribute equally.
    """
    times = np.asarray(times, dtype=float)
    free_rotor = 2.0 * math.exp(-beta * p.e_c)
    tau = beta - 1j * times
    i4_sum = 0.5 * p.e_c**2 * 2.0 * _leading_weighted_k(p, beta, tau)
    return free_rotor + 0.5 * p.lam**2 * i4_sum


def matsubara_correlation(p: JunctionParams, beta: float, times) -> CorrelationSeries:
    """G(t) = [2e^{−βE_C} + (λ²/2)e^{−iE_C t}] / [1 − βE_Cλ²/2], denominator kept unexpanded."""
    if not beta > 0.0:
        raise ValueError(f"beta must be positive, got {beta}")
    times = np.asarray(times, dtype=float)
    weak = beta * p.e_c * p.lam**2 <= MUCH_LESS
    if not weak:
        logger.warning("beta*E_C*lambda^2 = %.3g is not small; Matsubara expansion unreliable", beta * p.e_c * p.lam**2)
    values = matsubara_numerator(p, beta, times) / matsubara_partition(p, beta)
    return CorrelationSeries(
        times,
        values,
        SeriesSource.MATSUBARA,
        params={"e_c": p.e_c, "e_j": p.e_j, "beta": beta},
        flags={"weak_thermal_dressing": weak},
    )
