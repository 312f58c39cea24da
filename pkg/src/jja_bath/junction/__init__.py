"""Exact single-junction physics in the charge basis."""

from jja_bath.junction.correlation import (
    cutoff_adequate,
    exact_correlation,
    imaginary_time_correlation,
    thermal_charge_expectation,
)
from jja_bath.junction.hamiltonian import (
    DEFAULT_N_MAX,
    ChargeBasisOperator,
    JunctionParams,
    SpectralDecomposition,
    build_hamiltonian,
    charge_operator,
    cos_phi_operator,
    diagonalize,
    parity_operator,
)
from jja_bath.junction.series import CorrelationSeries, SeriesSource

__all__ = [
    "DEFAULT_N_MAX",
    "ChargeBasisOperator",
    "CorrelationSeries",
    "JunctionParams",
    "SeriesSource",
    "SpectralDecomposition",
    "build_hamiltonian",
    "charge_operator",
    "cos_phi_operator",
    "cutoff_adequate",
    "diagonalize",
    "exact_correlation",
    "imaginary_time_correlation",
    "parity_operator",
    "thermal_charge_expectation",
]
