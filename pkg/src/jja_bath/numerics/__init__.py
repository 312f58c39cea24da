"""Shared numerical kernels."""

from jja_bath.numerics.ode import Trajectory, ode_evolve
from jja_bath.numerics.quadrature import (
    QuadratureResult,
    quad_adaptive,
    quad_fourier,
    quad_pv,
    quad_vector,
)
from jja_bath.numerics.sampling import (
    rng_truncated_normal,
    truncated_mass,
    truncated_normal_moments,
)

__all__ = [
    "QuadratureResult",
    "quad_adaptive",
    "quad_fourier",
    "quad_pv",
    "quad_vector",
    "Trajectory",
    "ode_evolve",
    "rng_truncated_normal",
    "truncated_mass",
    "truncated_normal_moments",
]
