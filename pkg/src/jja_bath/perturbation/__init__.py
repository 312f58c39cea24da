"""Perturbative correlators and the Matsubara oracle."""

from jja_bath.perturbation.closed_form import (
    PerturbativeSpectrum,
    g_high_t,
    g_low_t,
    g_moderate,
    perturbative_energy,
    perturbative_matrix_element,
    perturbative_state,
)
from jja_bath.perturbation.matsubara import (
    matsubara_correlation,
    matsubara_f,
    matsubara_k,
    matsubara_l,
    matsubara_numerator,
    matsubara_partition,
)

__all__ = [
    "PerturbativeSpectrum",
    "g_high_t",
    "g_low_t",
    "g_moderate",
    "perturbative_energy",
    "perturbative_matrix_element",
    "perturbative_state",
    "matsubara_correlation",
    "matsubara_f",
    "matsubara_k",
    "matsubara_l",
    "matsubara_numerator",
    "matsubara_partition",
]
