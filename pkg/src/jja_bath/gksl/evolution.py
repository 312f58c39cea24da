"""Interaction-picture GKSL evolution of the LC oscillator in a truncated Fock space."""

import logging
import math
from dataclasses import dataclass
from typing import Any, Optional

import numpy as np
import pandas as pd

from jja_bath.errors import CutoffError, IntegrationError
from jja_bath.gksl.coefficients import GkslResult, OscillatorParams
from jja_bath.io.tables import render_csv
from jja_bath.numerics.ode import ode_evolve

logger = logging.getLogger(__name__)

TRACE_TOLERANCE = 1e-10
HERMITIAN_TOLERANCE = 1e-12
POSITIVITY_TOLERANCE = 1e-10
TOP_POPULATION_LIMIT = 1e-8
TRAJECTORY_TRACE_TOLERANCE = 1e-9
TRAJECTORY_POSITIVITY_TOLERANCE = 1e-8


@dataclass(frozen=True, eq=False)
class OscillatorState:
    """Density matrix on Fock states |0⟩ … |n_fock⟩."""

    n_fock: int
    rho: np.ndarray

    def __post_init__(self):
        if self.n_fock < 2:
            raise CutoffError(f"n_fock must be >= 2, got {self.n_fock}")
        rho = np.asarray(self.rho, dtype=complex)
        dim = self.n_fock + 1
        if rho.shape != (dim, dim):
            raise ValueError(f"rho must be {dim}x{dim} for n_fock={self.n_fock}, got {rho.shape}")
        if abs(np.trace(rho) - 1.0) > TRACE_TOLERANCE:
            raise ValueError(f"rho must have unit trace, got {np.trace(rho)}")
        if np.max(np.abs(rho - rho.conj().T)) > HERMITIAN_TOLERANCE:
            raise ValueError("rho must be Hermitian")
        if np.min(np.linalg.eigvalsh(rho)) < -POSITIVITY_TOLERANCE:
            raise ValueError("rho must be positive semidefinite")
        object.__setattr__(self, "rho", rho)

    @staticmethod
    def _from_trajectory(n_fock: int, rho: np.ndarray) -> "OscillatorState":
        state = object.__new__(OscillatorState)
        object.__setattr__(state, "n_fock", n_fock)
        object.__setattr__(state, "rho", rho)
        return state

    @property
    def dim(self) -> int:
        return self.n_fock + 1

    @staticmethod
    def fock(n: int, n_fock: int) -> "OscillatorState":
        """The number state |n⟩⟨n|."""
        if not 0 <= n <= n_fock:
            raise CutoffError(f"Fock level {n} is outside the cutoff n_fock={n_fock}")
        rho = np.zeros((n_fock + 1, n_fock + 1), dtype=complex)
        rho[n, n] = 1.0
        return OscillatorState(n_fock, rho)

    @staticmethod
    def superposition(amplitudes, n_fock: int) -> "OscillatorState":
        """Pure state Σ c_n|n⟩ with the amplitudes normalized."""
        psi = np.zeros(n_fock + 1, dtype=complex)
        amplitudes = np.asarray(amplitudes, dtype=complex)
        if amplitudes.size > n_fock + 1:
            raise CutoffError(f"{amplitudes.size} amplitudes do not fit below n_fock={n_fock}")
        psi[: amplitudes.size] = amplitudes
        norm = np.linalg.norm(psi)
        if norm == 0.0:
            raise ValueError("amplitudes must not all vanish")
        psi /= norm
        return OscillatorState(n_fock, np.outer(psi, psi.conj()))

    def n_expect(self) -> float:
        return float(np.real(np.trace(number_operator(self.n_fock) @ self.rho)))

    def trace(self) -> float:
        return float(np.real(np.trace(self.rho)))

    def purity(self) -> float:
        return float(np.real(np.trace(self.rho @ self.rho)))

    def top_population(self) -> float:
        """Population of the two highest Fock levels."""
        return float(np.real(self.rho[-1, -1] + self.rho[-2, -2]))


def annihilation(n_fock: int) -> np.ndarray:
    """b with ⟨n−1|b|n⟩ = √n."""
    return np.diag(np.sqrt(np.arange(1, n_fock + 1, dtype=float)), k=1).astype(complex)


def number_operator(n_fock: int) -> np.ndarray:
    return np.diag(np.arange(n_fock + 1, dtype=float)).astype(complex)


def lindblad_rhs(kappa: float, lamb_shift: float, n_fock: int):
    """
    dρ/dt = −i[δ_LS b†b, ρ] + κ(bρb† − ½{b†b, ρ}) acting on flattened ρ.

    The derivative is symmetrized so ρ stays Hermitian step by step.
    """
    b = annihilation(n_fock)
    b_dag = b.conj().T
    n_op = b_dag @ b
    dim = n_fock + 1

    def rhs(t: float, y: np.ndarray) -> np.ndarray:
        rho = y.reshape(dim, dim)
        drho = -1j * lamb_shift * (n_op @ rho - rho @ n_op)
        drho += kappa * (b @ rho @ b_dag - 0.5 * (n_op @ rho + rho @ n_op))
        drho = 0.5 * (drho + drho.conj().T)
        return drho.ravel()

    return rhs


def evolve_oscillator(
    res: GkslResult,
    osc: OscillatorParams,
    state0: OscillatorState,
    times,
    rel_tol: float = 1e-9,
) -> list[OscillatorState]:
    """
    Integrate the master equation with κ(ω₀) and δ_LS(ω₀) from ``res``.

    The constant Lamb term is a scalar and drops out of the commutator.

    Raises:
        ValueError: If the Lamb shift is not finite (ω₀ on a band edge).
        IntegrationError: On step-size underflow.
    """
    if not math.isfinite(res.lamb_shift):
        raise ValueError(f"Lamb shift at omega0={osc.omega0} is not finite; move omega0 off the band edge")
    times = np.asarray(times, dtype=float)
    rhs = lindblad_rhs(res.kappa, res.lamb_shift, state0.n_fock)
    trajectory = ode_evolve(rhs, state0.rho.ravel(), times, rel_tol=rel_tol, abs_tol=1e-14)
    dim = state0.dim
    states = []
    worst_top = 0.0
    worst_trace = 0.0
    worst_eig = 0.0
    for y in trajectory.states:
        rho = y.reshape(dim, dim)
        rho = 0.5 * (rho + rho.conj().T)
        state = OscillatorState._from_trajectory(state0.n_fock, rho)
        worst_trace = max(worst_trace, abs(state.trace() - 1.0))
        worst_eig = min(worst_eig, float(np.min(np.linalg.eigvalsh(rho))))
        worst_top = max(worst_top, state.top_population())
        states.append(state)
    if worst_trace > TRAJECTORY_TRACE_TOLERANCE or worst_eig < -TRAJECTORY_POSITIVITY_TOLERANCE:
        raise IntegrationError(
            f"evolution lost positivity or trace: trace drift {worst_trace:.3e}, min eigenvalue {worst_eig:.3e}"
        )
    if worst_top >= TOP_POPULATION_LIMIT:
        logger.warning(
            "Fock cutoff n_fock=%d too small: top two levels reach population %.3e",
            state0.n_fock,
            worst_top,
        )
    logger.debug("evolved %d states with kappa=%.6g lamb_shift=%.6g", len(states), res.kappa, res.lamb_shift)
    return states


def trajectory_table(times, states: list[OscillatorState]) -> pd.DataFrame:
    times = np.asarray(times, dtype=float)
    if times.size != len(states):
        raise ValueError("times and states must have the same length")
    return pd.DataFrame(
        {
            "t": times,
            "n_expect": [s.n_expect() for s in states],
            "trace": [s.trace() for s in states],
            "purity": [s.purity() for s in states],
        }
    )


def trajectory_csv(times, states: list[OscillatorState], params: Optional[dict[str, Any]] = None) -> str:
    return render_csv(trajectory_table(times, states), "gksl-evolution", params or {})
