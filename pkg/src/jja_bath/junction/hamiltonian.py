"""Single-junction operators in the truncated charge basis."""

import logging
from dataclasses import dataclass
from typing import Any

import numpy as np
from scipy import linalg

from jja_bath.errors import CutoffError

logger = logging.getLogger(__name__)

DEFAULT_N_MAX = 20
DEGENERACY_GAP = 1e-8


@dataclass(frozen=True)
class JunctionParams:
    """Charging and Josephson energy of one junction."""

    e_c: float
    e_j: float

    def __post_init__(self):
        if not self.e_c > 0.0:
            raise ValueError(f"e_c must be positive, got {self.e_c}")
        if not self.e_j >= 0.0:
            raise ValueError(f"e_j must be nonnegative, got {self.e_j}")

    @property
    def lam(self) -> float:
        """λ = E_J / E_C."""
        return self.e_j / self.e_c

    def to_dict(self) -> dict[str, Any]:
        return {"e_c": self.e_c, "e_j": self.e_j}

    @staticmethod
    def from_dict(data: dict[str, Any]) -> "JunctionParams":
        return JunctionParams(e_c=float(data["e_c"]), e_j=float(data.get("e_j", 0.0)))


@dataclass(frozen=True, eq=False)
class ChargeBasisOperator:
    """Dense operator on charge states n = -n_max, ..., n_max (row/column order)."""

    n_max: int
    entries: np.ndarray

    def __post_init__(self):
        _check_cutoff(self.n_max)
        entries = np.asarray(self.entries, dtype=complex)
        if entries.shape != (self.dim, self.dim):
            raise ValueError(f"expected a {self.dim}x{self.dim} matrix, got {entries.shape}")
        object.__setattr__(self, "entries", entries)

    @property
    def dim(self) -> int:
        return 2 * self.n_max + 1

    @property
    def charges(self) -> np.ndarray:
        return np.arange(-self.n_max, self.n_max + 1)

    def is_hermitian(self, atol: float = 1e-12) -> bool:
        scale = max(1.0, float(np.max(np.abs(self.entries))))
        return bool(np.allclose(self.entries, self.entries.conj().T, rtol=0.0, atol=atol * scale))

    def __matmul__(self, other: "ChargeBasisOperator") -> "ChargeBasisOperator":
        return ChargeBasisOperator(self.n_max, self.entries @ other.entries)

    def commutator(self, other: "ChargeBasisOperator") -> "ChargeBasisOperator":
        return ChargeBasisOperator(self.n_max, self.entries @ other.entries - other.entries @ self.entries)


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    """Ascending energies, eigenvector columns and their charge-conjugation parities."""

    n_max: int
    energies: np.ndarray
    states: np.ndarray
    parities: np.ndarray


def _check_cutoff(n_max: int) -> None:
    if int(n_max) != n_max or n_max < 1:
        raise CutoffError(f"charge cutoff n_max must be an integer >= 1, got {n_max}")


def charge_operator(n_max: int) -> ChargeBasisOperator:
    """N = Σ n|n⟩⟨n|."""
    _check_cutoff(n_max)
    return ChargeBasisOperator(n_max, np.diag(np.arange(-n_max, n_max + 1)).astype(complex))


def cos_phi_operator(n_max: int) -> ChargeBasisOperator:
    """cos φ = (|n+1⟩⟨n| + |n⟩⟨n+1|)/2, truncated at ±n_max."""
    _check_cutoff(n_max)
    dim = 2 * n_max + 1
    off = 0.5 * np.ones(dim - 1)
    return ChargeBasisOperator(n_max, np.diag(off, 1) + np.diag(off, -1))


def parity_operator(n_max: int) -> ChargeBasisOperator:
    """Charge conjugation 𝒞|n⟩ = |−n⟩."""
    _check_cutoff(n_max)
    return ChargeBasisOperator(n_max, np.fliplr(np.eye(2 * n_max + 1)))


def build_hamiltonian(p: JunctionParams, n_max: int = DEFAULT_N_MAX) -> ChargeBasisOperator:
    """
    H = E_C N² − E_J cos φ.

    Diagonal n²E_C and nearest-neighbour entries −E_J/2.

    Raises:
        CutoffError: If n_max < 1.
    """
    _check_cutoff(n_max)
    n = np.arange(-n_max, n_max + 1, dtype=float)
    off = np.full(2 * n_max, -0.5 * p.e_j)
    h = np.diag(p.e_c * n**2) + np.diag(off, 1) + np.diag(off, -1)
    return ChargeBasisOperator(n_max, h)


def _clusters(energies: np.ndarray, gap: float) -> list[slice]:
    out = []
    start = 0
    for i in range(1, energies.size + 1):
        if i == energies.size or energies[i] - energies[i - 1] >= gap:
            out.append(slice(start, i))
            start = i
    return out


def diagonalize(h: ChargeBasisOperator) -> SpectralDecomposition:
    """
    Hermitian eigendecomposition with exact charge-conjugation parities.

    Inside each cluster of levels closer than 1e-8 of the level scale the
    eigensolver's arbitrary rotation is replaced by the eigenbasis of 𝒞, then
    every vector is projected onto its parity sector and renormalized.

    Raises:
        ValueError: If h is not Hermitian.
    """
    if not h.is_hermitian():
        raise ValueError("diagonalize needs a Hermitian operator")
    energies, states = linalg.eigh(h.entries)
    c = parity_operator(h.n_max).entries

    scale = float(np.max(np.abs(energies))) / h.n_max**2 or 1.0
    for block in _clusters(energies, DEGENERACY_GAP * scale):
        if block.stop - block.start < 2:
            continue
        vecs = states[:, block]
        _, rotation = linalg.eigh(vecs.conj().T @ c @ vecs)
        states[:, block] = vecs @ rotation

    parities = np.empty(energies.size, dtype=int)
    for k in range(energies.size):
        psi = states[:, k]
        parity = 1 if np.real(np.vdot(psi, c @ psi)) >= 0.0 else -1
        projected = 0.5 * (psi + parity * (c @ psi))
        states[:, k] = projected / np.linalg.norm(projected)
        parities[k] = parity
    return SpectralDecomposition(h.n_max, energies, states, parities)
