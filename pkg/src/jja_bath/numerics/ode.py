"""Explicit adaptive ODE integration for state vectors."""

import logging
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.integrate import solve_ivp

from jja_bath.errors import IntegrationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Trajectory:
    """States sampled at the requested output times (one row per time)."""

    times: np.ndarray
    states: np.ndarray
    n_evaluations: int = 0

    def __len__(self) -> int:
        return len(self.times)


def ode_evolve(
    rhs: Callable[[float, np.ndarray], np.ndarray],
    y0: np.ndarray,
    times: np.ndarray,
    rel_tol: float = 1e-9,
    abs_tol: float = 1e-12,
    method: str = "DOP853",
) -> Trajectory:
    """
    Integrate dy/dt = rhs(t, y) from times[0] and sample y at every entry of times.

    Complex state vectors are integrated directly.

    Raises:
        ValueError: If times is empty or not strictly increasing.
        IntegrationError: If the integrator gives up (step-size underflow).
    """
    times = np.asarray(times, dtype=float)
    y0 = np.asarray(y0)
    if times.ndim != 1 or times.size == 0:
        raise ValueError("times must be a non-empty 1-D array")
    if times.size > 1 and np.any(np.diff(times) <= 0):
        raise ValueError("times must be strictly increasing")
    if times.size == 1:
        return Trajectory(times=times, states=y0[np.newaxis, :].copy())

    sol = solve_ivp(
        rhs,
        (float(times[0]), float(times[-1])),
        y0,
        method=method,
        t_eval=times,
        rtol=rel_tol,
        atol=abs_tol,
    )
    if sol.status == -1 or not sol.success:
        raise IntegrationError(f"integration stopped at t={sol.t[-1] if sol.t.size else times[0]}: {sol.message}")
    logger.debug("ode_evolve: %d rhs evaluations over %d output times", sol.nfev, times.size)
    return Trajectory(times=sol.t, states=sol.y.T, n_evaluations=int(sol.nfev))
