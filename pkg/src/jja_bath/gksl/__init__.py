"""Master-equation coefficients, oscillator evolution and Markovianity checks."""

from jja_bath.gksl.coefficients import (
    GkslResult,
    OscillatorParams,
    constant_shift,
    decay_rate,
    decay_rate_sweep,
    gksl_coefficients,
    half_fourier,
    lamb_shift,
    lamb_shift_sweep,
    principal_value_integral,
)
from jja_bath.gksl.evolution import (
    OscillatorState,
    annihilation,
    evolve_oscillator,
    lindblad_rhs,
    number_operator,
    trajectory_csv,
    trajectory_table,
)
from jja_bath.gksl.markovianity import (
    EmpiricalEstimate,
    MarkovianityReport,
    MarkovianityThresholds,
    markovianity_report,
    measured_bath_rate,
    rate_grid,
)

__all__ = [
    "GkslResult",
    "OscillatorParams",
    "constant_shift",
    "decay_rate",
    "decay_rate_sweep",
    "gksl_coefficients",
    "half_fourier",
    "lamb_shift",
    "lamb_shift_sweep",
    "principal_value_integral",
    "OscillatorState",
    "annihilation",
    "evolve_oscillator",
    "lindblad_rhs",
    "number_operator",
    "trajectory_csv",
    "trajectory_table",
    "EmpiricalEstimate",
    "MarkovianityReport",
    "MarkovianityThresholds",
    "markovianity_report",
    "measured_bath_rate",
    "rate_grid",
]
