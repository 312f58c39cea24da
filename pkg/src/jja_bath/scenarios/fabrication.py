"""Junction energies from the oxide thickness of a tunnel barrier."""

import logging
import math
from dataclasses import asdict, dataclass
from typing import Any

import numpy as np

from jja_bath.junction.hamiltonian import JunctionParams

logger = logging.getLogger(__name__)

LARGE_EC_MARGIN = 0.1


@dataclass(frozen=True)
class FabricationConstants:
    """
    Energy-space description of a thickness-disordered chain.

    Thicknesses are mapped linearly onto charging energies, E_C = (E_ζ/ζ)·w,
    so the thickness statistics (w_min, w₀, δw) appear here through their
    images (e_min, e_0, delta_ec). ``zeta`` is the barrier length scale.
    """

    f_j_a_over_zeta: float
    e_zeta: float
    e_min: float
    e_0: float
    delta_ec: float
    zeta: float = 1.0

    def __post_init__(self):
        for name in ("f_j_a_over_zeta", "e_zeta", "e_min", "e_0", "delta_ec", "zeta"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")

    @classmethod
    def fig6(cls, e_0: float = 1.0, delta_ec: float = 0.1) -> "FabricationConstants":
        """F_JA/ζ = E_0/100 and E_min = E_ζ = E_0/5."""
        return cls(f_j_a_over_zeta=e_0 / 100.0, e_zeta=e_0 / 5.0, e_min=e_0 / 5.0, e_0=e_0, delta_ec=delta_ec)

    @property
    def energy_per_thickness(self) -> float:
        return self.e_zeta / self.zeta

    def thickness(self, e_c):
        """w for a given charging energy."""
        return np.asarray(e_c, dtype=float) / self.energy_per_thickness

    def josephson_energy(self, e_c):
        """E_J = (F_JA/ζ) / sinh(E_C/E_ζ)."""
        out = self.f_j_a_over_zeta / np.sinh(np.asarray(e_c, dtype=float) / self.e_zeta)
        return float(out) if np.ndim(e_c) == 0 else out

    def large_ec_margin(self) -> float:
        """(F_JA/ζ) / [E_min sinh(E_min/E_ζ)]; the large-E_C description needs this ≪ 1."""
        return self.f_j_a_over_zeta / (self.e_min * math.sinh(self.e_min / self.e_zeta))

    def with_width(self, delta_ec: float) -> "FabricationConstants":
        values = asdict(self)
        values["delta_ec"] = delta_ec
        return FabricationConstants(**values)

    def to_dict(self) -> dict[str, float]:
        return asdict(self)

    @staticmethod
    def from_dict(data: dict[str, Any]) -> "FabricationConstants":
        return FabricationConstants(**{k: float(v) for k, v in data.items()})


def fabrication_params(w: float, fab: FabricationConstants) -> JunctionParams:
    """
    E_C = (E_ζ/ζ)·w and E_J = (F_JA/ζ)/sinh(w/ζ) for a barrier of thickness w.

    Thin barriers leave the large-E_C regime; that is logged, not rejected.
    """
    if not w > 0.0:
        raise ValueError(f"thickness must be positive, got {w}")
    e_c = fab.energy_per_thickness * w
    e_j = fab.f_j_a_over_zeta / math.sinh(w / fab.zeta)
    p = JunctionParams(e_c=e_c, e_j=e_j)
    if e_j > LARGE_EC_MARGIN * e_c:
        logger.warning("thickness w=%.4g gives E_J/E_C = %.3g; not a large-E_C junction", w, e_j / e_c)
    return p
