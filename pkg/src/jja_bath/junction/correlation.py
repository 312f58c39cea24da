"""Exact thermal charge correlators from the full spectral decomposition."""

import logging
import math

import numpy as np

from jja_bath.junction.hamiltonian import (
    DEFAULT_N_MAX,
    JunctionParams,
    SpectralDecomposition,
    build_hamiltonian,
    charge_operator,
    diagonalize,
)
from jja_bath.junction.series import CorrelationSeries, SeriesSource

logger = logging.getLogger(__name__)

CUTOFF_TAIL = 1e-14


def _check_beta(beta: float) -> None:
    if not beta > 0.0:
        raise ValueError(f"beta must be positive, got {beta}")


def cutoff_adequate(p: JunctionParams, n_max: int, beta: float) -> bool:
    """True when the Boltzmann weight of the top charge state is below 1e-14."""
    return math.exp(-beta * n_max**2 * p.e_c) < CUTOFF_TAIL


def _thermal_data(p: JunctionParams, n_max: int, beta: float):
    spectrum: SpectralDecomposition = diagonalize(build_hamiltonian(p, n_max))
    energies = spectrum.energies
    if math.isinf(beta):
        weights = (energies == energies[0]).astype(float)
    else:
        weights = np.exp(-beta * (energies - energies[0]))
    weights /= weights.sum()
    v = spectrum.states
    n_eig = v.conj().T @ charge_operator(n_max).entries @ v
    return energies, weights, n_eig, v


def _cutoff_flag(p: JunctionParams, n_max: int, beta: float) -> bool:
    ok = cutoff_adequate(p, n_max, beta)
    if not ok:
        logger.warning(
            "charge cutoff n_max=%d is small for beta*E_C=%.3g; thermal weight of |n_max> exceeds %.0e",
            n_max,
            beta * p.e_c,
            CUTOFF_TAIL,
        )
    return ok


def exact_correlation(
    p: JunctionParams,
    n_max: int = DEFAULT_N_MAX,
    beta: float = 10.0,
    times: np.ndarray | None = None,
) -> CorrelationSeries:
    """
    G(t) = Z⁻¹ Σ_{m,n} |⟨ψ_m|N|ψ_n⟩|² e^{−βE_m} e^{i(E_m−E_n)t}.

    Negative times are evaluated from the same spectral sum, so
    G(−t) = G(t)* holds to rounding.

    Raises:
        ValueError: If beta <= 0.
        CutoffError: If n_max < 1.
    """
    _check_beta(beta)
    times = np.zeros(1) if times is None else np.asarray(times, dtype=float)
    cutoff_ok = _cutoff_flag(p, n_max, beta)
    energies, weights, n_eig, _ = _thermal_data(p, n_max, beta)

    amplitudes = (np.abs(n_eig) ** 2 * weights[:, np.newaxis]).ravel()
    gaps = (energies[:, np.newaxis] - energies[np.newaxis, :]).ravel()
    keep = amplitudes > 0.0
    amplitudes, gaps = amplitudes[keep], gaps[keep]
    values = np.exp(1j * np.outer(times, gaps)) @ amplitudes

    return CorrelationSeries(
        times=times,
        values=values,
        source=SeriesSource.EXACT,
        params={"e_c": p.e_c, "e_j": p.e_j, "beta": beta, "n_max": n_max},
        flags={"cutoff_ok": cutoff_ok},
    )


def thermal_charge_expectation(p: JunctionParams, n_max: int = DEFAULT_N_MAX, beta: float = 10.0) -> float:
    """⟨N⟩ in the thermal state; vanishes by charge-conjugation symmetry."""
    _check_beta(beta)
    _cutoff_flag(p, n_max, beta)
    _, weights, n_eig, _ = _thermal_data(p, n_max, beta)
    return float(np.real(np.dot(weights, np.diag(n_eig))))


def imaginary_time_correlation(
    p: JunctionParams,
    n_max: int,
    beta: float,
    taus: np.ndarray,
) -> np.ndarray:
    """
    ⟨N(τ)N(0)⟩ = Z⁻¹ Tr[e^{−(β−τ)H} N e^{−τH} N] for 0 ≤ τ ≤ β.

    Raises:
        ValueError: If any τ lies outside [0, β].
    """
    _check_beta(beta)
    taus = np.asarray(taus, dtype=float)
    if np.any(taus < 0.0) or np.any(taus > beta):
        raise ValueError("imaginary times must lie in [0, beta]")
    spectrum = diagonalize(build_hamiltonian(p, n_max))
    shifted = spectrum.energies - spectrum.energies[0]
    z = np.exp(-beta * shifted).sum()
    v = spectrum.states
    n2 = np.abs(v.conj().T @ charge_operator(n_max).entries @ v) ** 2
    out = np.empty(taus.size)
    for k, tau in enumerate(taus):
        left = np.exp(-(beta - tau) * shifted)
        right = np.exp(-tau * shifted)
        out[k] = left @ n2 @ right / z
    return out
