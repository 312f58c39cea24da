"""Effective spectral density J(E) with explicit support."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable

import numpy as np
import pandas as pd

from jja_bath.io.tables import render_csv
from jja_bath.numerics.quadrature import quad_adaptive


class DensityKind(str, Enum):
    LARGE_EC = "large-EC"
    HARMONIC = "harmonic"
    CLOSED_FORM = "closed-form"
    TABULATED = "tabulated"


@dataclass(frozen=True, eq=False)
class SpectralDensity:
    """
    J(E) on ``support``; zero outside it.

    ``breakpoints`` are interior energies where J may have kinks (images of
    monotone-interval ends); quadratures split there.
    """

    support: tuple[float, float]
    function: Callable[[float], float]
    kind: DensityKind
    breakpoints: tuple[float, ...] = ()
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        lo, hi = (float(v) for v in self.support)
        if not lo < hi:
            raise ValueError(f"support must be an increasing interval, got {self.support}")
        object.__setattr__(self, "support", (lo, hi))
        object.__setattr__(self, "kind", DensityKind(self.kind))
        object.__setattr__(self, "breakpoints", tuple(sorted(b for b in self.breakpoints if lo < b < hi)))

    def _scalar(self, energy: float) -> float:
        lo, hi = self.support
        if energy < lo or energy > hi:
            return 0.0
        return float(self.function(energy))

    def evaluate(self, energy):
        """J at a scalar or an array of energies."""
        if np.ndim(energy) == 0:
            return self._scalar(float(energy))
        return np.array([self._scalar(float(e)) for e in np.ravel(energy)]).reshape(np.shape(energy))

    __call__ = evaluate

    def pieces(self) -> list[tuple[float, float]]:
        edges = [self.support[0], *self.breakpoints, self.support[1]]
        return list(zip(edges[:-1], edges[1:]))

    def area(self, rel_tol: float = 1e-10) -> float:
        """∫ J(E) dE over the support."""
        return float(sum(quad_adaptive(self._scalar, a, b, rel_tol=rel_tol).value for a, b in self.pieces()))

    def tabulate(self, grid) -> pd.DataFrame:
        grid = np.asarray(grid, dtype=float)
        return pd.DataFrame({"E": grid, "J": self.evaluate(grid)})

    def to_csv(self, grid) -> str:
        echo = dict(self.params)
        echo.update(support_lo=self.support[0], support_hi=self.support[1])
        return render_csv(self.tabulate(grid), self.kind.value, echo)

    def default_grid(self, points: int = 401, padding: float = 0.2) -> np.ndarray:
        """Frequency grid over the support padded by ``padding`` of its width on each side."""
        lo, hi = self.support
        pad = padding * (hi - lo)
        return np.linspace(max(lo - pad, 0.0), hi + pad, points)

    @staticmethod
    def box(level: float, lo: float, hi: float) -> "SpectralDensity":
        """Constant J = level on [lo, hi]."""
        return SpectralDensity((lo, hi), lambda e: level, DensityKind.CLOSED_FORM, params={"level": level})

    @staticmethod
    def zero(lo: float = 0.0, hi: float = 1.0) -> "SpectralDensity":
        return SpectralDensity((lo, hi), lambda e: 0.0, DensityKind.CLOSED_FORM)
