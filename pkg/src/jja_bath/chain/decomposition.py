"""Piecewise inversion of a monotone energy coordinate x ↦ E(x)."""

import logging
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy import optimize

from jja_bath.chain.profiles import Profile
from jja_bath.chain.spec import SAMPLES_PER_INTERVAL
from jja_bath.errors import DecompositionError

logger = logging.getLogger(__name__)

INVERSION_XTOL = 1e-12
ENDPOINT_NUDGE = 1e-9


def check_monotone(profile: Profile, interval: tuple[float, float], samples: int = SAMPLES_PER_INTERVAL) -> int:
    """
    Sign (+1 or -1) of the derivative on an interval.

    The derivative is sampled at ``samples`` points; zeros are tolerated only
    at the two endpoints.

    Raises:
        DecompositionError: If the sampled derivative vanishes inside the
            interval or changes sign.
    """
    lo, hi = interval
    slopes = np.asarray(profile.derivative(np.linspace(lo, hi, samples)), dtype=float)
    inner = np.sign(slopes[1:-1])
    edges = np.sign(slopes[[0, -1]])
    if inner.size == 0 or np.any(inner == 0) or np.any(inner != inner[0]):
        raise DecompositionError(f"profile is not strictly monotonic on [{lo}, {hi}]", interval=(lo, hi))
    if np.any((edges != 0) & (edges != inner[0])):
        raise DecompositionError(f"profile changes direction at an end of [{lo}, {hi}]", interval=(lo, hi))
    return int(inner[0])


@dataclass(frozen=True)
class _Branch:
    interval: tuple[float, float]
    sign: int
    image: tuple[float, float]


class MonotoneDecomposition:
    """
    Inverse branches x_k(E) of a coordinate profile over its monotone intervals.

    Every branch is bisected to 1e-12 of its interval length. Where the
    coordinate has a stationary endpoint the preimage is moved 1e-9 of the
    interval length inward so that |dx/dE| stays finite.
    """

    def __init__(self, coordinate: Profile, intervals: Sequence[tuple[float, float]]):
        self.coordinate = coordinate
        branches = []
        for interval in intervals:
            sign = check_monotone(coordinate, interval)
            a, b = coordinate.value(interval[0]), coordinate.value(interval[1])
            branches.append(_Branch(tuple(interval), sign, (min(a, b), max(a, b))))
        self.branches: tuple[_Branch, ...] = tuple(branches)

    @property
    def support(self) -> tuple[float, float]:
        return (
            min(br.image[0] for br in self.branches),
            max(br.image[1] for br in self.branches),
        )

    @property
    def breakpoints(self) -> tuple[float, ...]:
        lo, hi = self.support
        edges = {e for br in self.branches for e in br.image}
        return tuple(sorted(e for e in edges if lo < e < hi))

    def _invert(self, branch: _Branch, energy: float) -> float:
        lo, hi = branch.interval
        f_lo = self.coordinate.value(lo)
        f_hi = self.coordinate.value(hi)
        if energy == f_lo:
            x = lo
        elif energy == f_hi:
            x = hi
        else:
            x = optimize.bisect(
                lambda s: self.coordinate.value(s) - energy,
                lo,
                hi,
                xtol=INVERSION_XTOL * (hi - lo),
            )
        if self.coordinate.derivative(x) == 0.0:
            step = ENDPOINT_NUDGE * (hi - lo)
            x = x + step if x - lo <= hi - x else x - step
        return x

    def preimages(self, energy: float) -> list[tuple[float, float]]:
        """All (x_k, |dx_k/dE|) with E(x_k) = energy."""
        out = []
        for branch in self.branches:
            if branch.image[0] <= energy <= branch.image[1]:
                x = self._invert(branch, energy)
                out.append((x, 1.0 / abs(self.coordinate.derivative(x))))
        return out

    def density(self, weight: Callable[[float], float]) -> Callable[[float], float]:
        """E ↦ Σ_k weight(x_k(E)) |dx_k/dE|."""

        def evaluate(energy: float) -> float:
            return float(sum(weight(x) * jac for x, jac in self.preimages(energy)))

        return evaluate
