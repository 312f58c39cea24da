from typing import Literal, Optional, TypedDict

Command = Literal["correlation", "spectral", "gksl", "evolve", "duality", "disorder", "markovianity", "figure"]


class CriteriaPayload(TypedDict):
    bm: bool
    secular: bool


class GkslReportPayload(TypedDict):
    kappa: float
    lamb_shift: Optional[float]
    constant_shift: Optional[float]
    omega0: float
    omega_b: float
    zeta_m: float
    bm_margin: float
    secular_margin: float
    criteria: CriteriaPayload
    units: str


class DisorderSummaryPayload(TypedDict):
    n_j: int
    seed: int
    delta_ec: float
    sample_mean: float
    analytic_mean: float
    standard_error: float
    max_deviation: float
    tolerance: float


class RunSummary(TypedDict):
    command: Command
    output: str
    artifacts: list[str]
