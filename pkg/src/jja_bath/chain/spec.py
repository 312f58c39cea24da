"""Discrete and continuum descriptions of the junction chain."""

from dataclasses import dataclass, field
from typing import Any, Union

import numpy as np

from jja_bath.chain.profiles import Profile, SqrtProduct
from jja_bath.junction.hamiltonian import JunctionParams

SAMPLES_PER_INTERVAL = 1024

LARGE_EC = "large-ec"
HARMONIC = "harmonic"


@dataclass(frozen=True)
class DiscreteChain:
    """An explicit list of junctions sharing the coupling ε_I."""

    junctions: tuple[JunctionParams, ...]
    coupling_eps: float

    def __post_init__(self):
        object.__setattr__(self, "junctions", tuple(self.junctions))
        if not self.junctions:
            raise ValueError("a discrete chain needs at least one junction")
        if not self.coupling_eps > 0.0:
            raise ValueError("coupling_eps must be positive")

    def __len__(self) -> int:
        return len(self.junctions)

    @property
    def e_c(self) -> np.ndarray:
        return np.array([j.e_c for j in self.junctions])

    @property
    def e_j(self) -> np.ndarray:
        return np.array([j.e_j for j in self.junctions])

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": "discrete",
            "eps_i": self.coupling_eps,
            "junctions": [j.to_dict() for j in self.junctions],
        }

    @staticmethod
    def from_dict(data: dict[str, Any]) -> "DiscreteChain":
        return DiscreteChain(
            junctions=tuple(JunctionParams.from_dict(j) for j in data["junctions"]),
            coupling_eps=float(data["eps_i"]),
        )


@dataclass(frozen=True, eq=False)
class ContinuumChain:
    """
    Junction density ν(x) with position profiles E_C(x), E_J(x).

    ``monotone_intervals`` tile ``domain`` left to right; the relevant energy
    coordinate (E_C for large-E_C chains, ω = √(2E_J E_C) for harmonic ones)
    must be strictly monotonic on each.
    """

    domain: tuple[float, float]
    density: Profile
    ec_profile: Profile
    ej_profile: Profile
    monotone_intervals: tuple[tuple[float, float], ...]
    coupling_eps: float
    regime: str = LARGE_EC
    label: str = ""
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        lo, hi = (float(v) for v in self.domain)
        if not lo < hi:
            raise ValueError(f"domain must be an increasing interval, got {self.domain}")
        object.__setattr__(self, "domain", (lo, hi))
        intervals = tuple((float(a), float(b)) for a, b in self.monotone_intervals)
        if not intervals:
            raise ValueError("at least one monotone interval is required")
        if intervals[0][0] != lo or intervals[-1][1] != hi:
            raise ValueError("monotone intervals must start and end at the domain edges")
        if any(not a < b for a, b in intervals) or any(
            left[1] != right[0] for left, right in zip(intervals, intervals[1:])
        ):
            raise ValueError(f"monotone intervals must be contiguous and increasing, got {intervals}")
        object.__setattr__(self, "monotone_intervals", intervals)
        if self.regime not in (LARGE_EC, HARMONIC):
            raise ValueError(f"regime must be {LARGE_EC!r} or {HARMONIC!r}")
        if not self.coupling_eps > 0.0:
            raise ValueError("coupling_eps must be positive")
        for a, b in intervals:
            nu = np.asarray(self.density.value(np.linspace(a, b, SAMPLES_PER_INTERVAL)))
            if np.any(nu < 0.0):
                raise ValueError(f"junction density is negative on [{a}, {b}]")

    def omega_profile(self) -> Profile:
        """Plasma frequency ω(x) = √(2E_J(x)E_C(x))."""
        return SqrtProduct(2.0, self.ej_profile, self.ec_profile)

    def coordinate_profile(self) -> Profile:
        return self.ec_profile if self.regime == LARGE_EC else self.omega_profile()

    def grid(self, points: int = 2049) -> np.ndarray:
        return np.linspace(self.domain[0], self.domain[1], points)

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": "continuum" if self.regime == LARGE_EC else "harmonic",
            "label": self.label,
            "domain": list(self.domain),
            "eps_i": self.coupling_eps,
            "profiles": {
                "nu": self.density.to_dict(),
                "ec": self.ec_profile.to_dict(),
                "ej": self.ej_profile.to_dict(),
            },
            "monotone_intervals": [list(iv) for iv in self.monotone_intervals],
            "params": dict(self.params),
        }

    @staticmethod
    def from_dict(data: dict[str, Any]) -> "ContinuumChain":
        profiles = data["profiles"]
        return ContinuumChain(
            domain=tuple(data["domain"]),
            density=Profile.from_dict(profiles["nu"]),
            ec_profile=Profile.from_dict(profiles["ec"]),
            ej_profile=Profile.from_dict(profiles["ej"]),
            monotone_intervals=tuple(tuple(iv) for iv in data["monotone_intervals"]),
            coupling_eps=float(data["eps_i"]),
            regime=HARMONIC if data.get("kind") == "harmonic" else LARGE_EC,
            label=data.get("label", ""),
            params=dict(data.get("params", {})),
        )


ChainSpec = Union[DiscreteChain, ContinuumChain]


def chain_from_dict(data: dict[str, Any]) -> ChainSpec:
    """
    Dispatch a chain document on its ``kind``.

    Raises:
        ValueError: If the kind is unknown.
    """
    kind = data.get("kind")
    if kind == "discrete":
        return DiscreteChain.from_dict(data)
    if kind in ("continuum", "harmonic"):
        return ContinuumChain.from_dict(data)
    raise ValueError(f"unknown chain kind {kind!r}")
