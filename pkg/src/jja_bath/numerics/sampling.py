"""Seeded sampling from a lower-truncated normal law."""

import math

import numpy as np
from scipy import special

from jja_bath.errors import RegimeError

MIN_TRUNCATED_MASS = 1e-6


def _standardized_bound(mean: float, width: float, lower_bound: float) -> float:
    if not width > 0.0:
        raise ValueError(f"width must be positive, got {width}")
    return (lower_bound - mean) / width


def truncated_mass(mean: float, width: float, lower_bound: float) -> float:
    """Probability mass of N(mean, width²) above lower_bound."""
    alpha = _standardized_bound(mean, width, lower_bound)
    return float(special.ndtr(-alpha))


def rng_truncated_normal(
    mean: float,
    width: float,
    lower_bound: float,
    seed: int,
    count: int,
) -> np.ndarray:
    """
    Draw count samples of N(mean, width²) conditioned on x > lower_bound.

    Inverse-CDF on the upper tail: a uniform u maps to the point whose upper
    tail mass is (1 - u) times the retained mass, which stays accurate when the
    retained mass is small. The same seed always gives the same array.

    Raises:
        ValueError: If width <= 0 or count < 0.
        RegimeError: If less than 1e-6 of the mass lies above the bound.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    mass = truncated_mass(mean, width, lower_bound)
    if mass < MIN_TRUNCATED_MASS:
        raise RegimeError(
            f"only {mass:.3e} of the normal mass lies above {lower_bound}; truncation is pathological"
        )
    u = np.random.default_rng(seed).random(count)
    return mean - width * special.ndtri(mass * (1.0 - u))


def truncated_normal_moments(mean: float, width: float, lower_bound: float) -> tuple[float, float]:
    """Analytic (mean, variance) of the lower-truncated normal."""
    alpha = _standardized_bound(mean, width, lower_bound)
    if math.isinf(alpha):
        return mean, width**2
    mass = float(special.ndtr(-alpha))
    hazard = math.exp(-0.5 * alpha**2) / math.sqrt(2.0 * math.pi) / mass
    mu = mean + width * hazard
    var = width**2 * (1.0 + alpha * hazard - hazard**2)
    return mu, var
