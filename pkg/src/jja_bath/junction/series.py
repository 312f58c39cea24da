"""Sampled correlation functions and their CSV form."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

import numpy as np
import pandas as pd

from jja_bath.io.tables import parse_csv, render_csv


class SeriesSource(str, Enum):
    """Which formula or route produced a series."""

    EXACT = "exact"
    PERTURBATIVE_LOW_T = "perturbative-lowT"
    PERTURBATIVE_EPS = "perturbative-eps"
    HIGH_T = "highT"
    MATSUBARA = "matsubara"
    CHAIN_DISCRETE = "chain-discrete"
    CHAIN_CONTINUUM = "chain-continuum"
    CHAIN_SPECTRAL = "chain-spectral"
    HARMONIC = "harmonic"


@dataclass(frozen=True, eq=False)
class CorrelationSeries:
    """
    Complex G(t) or Γ(t) on an ascending time grid.

    ``params`` echoes the physical inputs; ``flags`` holds validity-window and
    cutoff checks (True means the check passed).
    """

    times: np.ndarray
    values: np.ndarray
    source: SeriesSource
    params: dict[str, Any] = field(default_factory=dict)
    flags: dict[str, bool] = field(default_factory=dict)

    def __post_init__(self):
        times = np.asarray(self.times, dtype=float)
        values = np.asarray(self.values, dtype=complex)
        if times.ndim != 1 or times.shape != values.shape:
            raise ValueError("times and values must be 1-D arrays of equal length")
        if times.size > 1 and np.any(np.diff(times) <= 0):
            raise ValueError("times must be strictly increasing")
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "source", SeriesSource(self.source))

    def __len__(self) -> int:
        return self.times.size

    @property
    def real(self) -> np.ndarray:
        return self.values.real

    @property
    def imag(self) -> np.ndarray:
        return self.values.imag

    @property
    def valid(self) -> bool:
        return all(self.flags.values())

    def with_offset(self, offset: complex) -> "CorrelationSeries":
        """Same series shifted by a constant, e.g. the thermal offset Γ₀."""
        params = dict(self.params, offset=float(np.real(offset)))
        return CorrelationSeries(self.times, self.values + offset, self.source, params, dict(self.flags))

    def relative_l2_error(self, reference: "CorrelationSeries") -> float:
        """‖self − reference‖₂ / ‖reference‖₂ over the shared grid."""
        if not np.array_equal(self.times, reference.times):
            raise ValueError("series are sampled on different grids")
        norm = np.linalg.norm(reference.values)
        if norm == 0.0:
            return float(np.linalg.norm(self.values))
        return float(np.linalg.norm(self.values - reference.values) / norm)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"t": self.times, "re": self.real, "im": self.imag})

    def to_csv(self) -> str:
        echo = dict(self.params)
        echo.update(self.flags)
        return render_csv(self.to_frame(), self.source.value, echo)

    @classmethod
    def from_csv(cls, text: str) -> "CorrelationSeries":
        source, echoed, frame = parse_csv(text)
        params = {k: v for k, v in echoed.items() if not isinstance(v, bool)}
        flags = {k: v for k, v in echoed.items() if isinstance(v, bool)}
        values = frame["re"].to_numpy() + 1j * frame["im"].to_numpy()
        return cls(frame["t"].to_numpy(), values, SeriesSource(source), params, flags)
