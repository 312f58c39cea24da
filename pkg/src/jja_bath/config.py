"""Run configuration: JSON documents merged with command-line flags."""

import json
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Optional, Union

import fsspec
import numpy as np

from jja_bath.chain.spec import ChainSpec, chain_from_dict
from jja_bath.errors import ConfigError
from jja_bath.gksl.markovianity import MarkovianityThresholds
from jja_bath.junction.hamiltonian import DEFAULT_N_MAX, JunctionParams
from jja_bath.scenarios.disorder import DisorderChainParams
from jja_bath.scenarios.fabrication import FabricationConstants
from jja_bath.scenarios.lorentzian import LorentzianChainParams

logger = logging.getLogger(__name__)

COMMANDS = ("correlation", "spectral", "gksl", "evolve", "duality", "disorder", "markovianity", "figure")
FIGURES = ("fig2", "fig3", "fig4", "fig5", "fig6")
FAMILIES = ("lorentzian", "disorder", "junction", "chain")

DEFAULT_TIME_POINTS = 2001
DEFAULT_FREQUENCY_POINTS = 401
DEFAULT_N_FOCK = 10

Scenario = Union[LorentzianChainParams, DisorderChainParams, JunctionParams, ChainSpec]


@dataclass(frozen=True)
class GridSpec:
    """Uniform grid of ``points`` values from ``start`` to ``stop``."""

    start: float
    stop: float
    points: int

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.points)

    def to_dict(self) -> dict[str, Any]:
        return {"start": self.start, "stop": self.stop, "points": self.points}


@dataclass(frozen=True)
class ScenarioConfig:
    """A scenario family with its parameters, or a full chain document."""

    family: str = "lorentzian"
    params: dict[str, Any] = field(default_factory=dict)

    def build(self) -> Scenario:
        """
        Construct the scenario object.

        Raises:
            ValueError: If the parameters do not describe a valid scenario.
        """
        if self.family == "lorentzian":
            return LorentzianChainParams.from_dict(self.params)
        if self.family == "disorder":
            params = dict(self.params)
            if "fab" in params and {"e_0", "delta_ec"} & set(params):
                raise ValueError("give either fab or e_0/delta_ec, not both")
            fab = FabricationConstants.fig6(
                e_0=float(params.pop("e_0", 1.0)), delta_ec=float(params.pop("delta_ec", 0.1))
            )
            if "fab" in params:
                fab = FabricationConstants.from_dict(params.pop("fab"))
            scenario = DisorderChainParams(
                fab=fab,
                n_j=int(params.pop("n_j", 10_000)),
                seed=int(params.pop("seed", 0)),
                eps_i=float(params.pop("eps_i", 0.01)),
            )
            if params:
                raise ValueError(f"unknown disorder parameters: {', '.join(sorted(params))}")
            return scenario
        if self.family == "junction":
            return JunctionParams.from_dict(self.params)
        if self.family == "chain":
            return chain_from_dict(self.params)
        raise ValueError(f"unknown scenario family {self.family!r}")

    def to_dict(self) -> dict[str, Any]:
        return {"family": self.family, "params": dict(self.params)}


@dataclass(frozen=True)
class RunConfig:
    command: str
    scenario: ScenarioConfig = field(default_factory=ScenarioConfig)
    output_path: str = "jja_bath_out"
    grid: Optional[GridSpec] = None
    frequency_grid: Optional[GridSpec] = None
    seed: Optional[int] = None
    omega0: Optional[float] = None
    e_q: Optional[float] = None
    beta: float = math.inf
    n_max: int = DEFAULT_N_MAX
    n_fock: int = DEFAULT_N_FOCK
    n_initial: int = 1
    thresholds: MarkovianityThresholds = field(default_factory=MarkovianityThresholds)
    figure: Optional[str] = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "scenario": self.scenario.to_dict(),
            "output_path": self.output_path,
            "grid": self.grid.to_dict() if self.grid else None,
            "frequency_grid": self.frequency_grid.to_dict() if self.frequency_grid else None,
            "seed": self.seed,
            "omega0": self.omega0,
            "e_q": self.e_q,
            "beta": self.beta if math.isfinite(self.beta) else None,
            "n_max": self.n_max,
            "n_fock": self.n_fock,
            "n_initial": self.n_initial,
            "thresholds": self.thresholds.to_dict(),
            "figure": self.figure,
        }


def _read_json(path: str) -> Any:
    with fsspec.open(path, "r") as f:
        return json.load(f)


def _number(value: Any, path: str, problems: dict[str, str], positive: bool = False) -> Optional[float]:
    if isinstance(value, bool) or not isinstance(value, (int, float, str)):
        problems[path] = "must be a number"
        return None
    try:
        number = float(value)
    except ValueError:
        problems[path] = "must be a number"
        return None
    if math.isnan(number) or (positive and not number > 0.0):
        problems[path] = "must be positive" if positive else "must be a number"
        return None
    return number


def _integer(value: Any, path: str, problems: dict[str, str], minimum: int = 0) -> Optional[int]:
    if isinstance(value, bool) or not isinstance(value, int):
        if isinstance(value, float) and value.is_integer():
            value = int(value)
        else:
            problems[path] = "must be an integer"
            return None
    if value < minimum:
        problems[path] = f"must be >= {minimum}"
        return None
    return value


def _grid(data: Any, path: str, problems: dict[str, str]) -> Optional[GridSpec]:
    if data is None:
        return None
    if not isinstance(data, dict):
        problems[path] = "must be an object with start, stop, points"
        return None
    start = _number(data.get("start", 0.0), f"{path}.start", problems)
    stop = _number(data.get("stop"), f"{path}.stop", problems)
    points = _integer(data.get("points", DEFAULT_TIME_POINTS), f"{path}.points", problems, minimum=2)
    if start is None or stop is None or points is None:
        return None
    if not start < stop:
        problems[path] = "must be strictly increasing (start < stop)"
        return None
    return GridSpec(start, stop, points)


def _scenario(data: Any, problems: dict[str, str]) -> ScenarioConfig:
    if data is None:
        return ScenarioConfig()
    if isinstance(data, str):
        if data in FAMILIES:
            return ScenarioConfig(family=data)
        try:
            data = _read_json(data)
        except (OSError, ValueError) as e:
            problems["scenario"] = f"not a known family and not a readable JSON document ({e})"
            return ScenarioConfig()
    if not isinstance(data, dict):
        problems["scenario"] = "must be a family name, a path or an object"
        return ScenarioConfig()
    if "kind" in data:
        return ScenarioConfig(family="chain", params=data)
    family = data.get("family", "lorentzian")
    params = data.get("params", {})
    if family not in FAMILIES:
        problems["scenario.family"] = f"must be one of {', '.join(FAMILIES)}"
        return ScenarioConfig()
    if not isinstance(params, dict):
        problems["scenario.params"] = "must be an object"
        return ScenarioConfig(family=family)
    return ScenarioConfig(family=family, params=params)


def parse_run_config(data: dict[str, Any]) -> RunConfig:
    """
    Validate a configuration document.

    Raises:
        ConfigError: Listing every invalid field by its dotted path.
    """
    problems: dict[str, str] = {}
    command = data.get("command")
    if command not in COMMANDS:
        problems["command"] = f"must be one of {', '.join(COMMANDS)}"

    scenario = _scenario(data.get("scenario"), problems)
    if data.get("scenario") is None and command == "disorder":
        scenario = ScenarioConfig(family="disorder")
    if "scenario" not in problems and not any(k.startswith("scenario.") for k in problems):
        try:
            scenario.build()
        except (KeyError, TypeError, ValueError) as e:
            problems["scenario.params"] = str(e)

    grid = _grid(data.get("grid"), "grid", problems)
    frequency_grid = _grid(data.get("frequency_grid"), "frequency_grid", problems)

    seed = data.get("seed")
    if seed is not None:
        seed = _integer(seed, "seed", problems)
        if seed is not None and seed >= 2**64:
            problems["seed"] = "must fit in 64 bits"

    omega0 = data.get("omega0")
    if omega0 is not None:
        omega0 = _number(omega0, "omega0", problems, positive=True)
    e_q = data.get("e_q")
    if e_q is not None:
        e_q = _number(e_q, "e_q", problems, positive=True)
    beta = data.get("beta")
    if beta is None:
        beta = math.inf
    else:
        beta = _number(beta, "beta", problems, positive=True) or math.inf

    n_max = _integer(data.get("n_max", DEFAULT_N_MAX), "n_max", problems, minimum=1)
    n_fock = _integer(data.get("n_fock", DEFAULT_N_FOCK), "n_fock", problems, minimum=2)
    n_initial = _integer(data.get("n_initial", 1), "n_initial", problems)
    if n_fock is not None and n_initial is not None and n_initial > n_fock:
        problems["n_initial"] = f"must not exceed n_fock={n_fock}"

    thresholds = MarkovianityThresholds()
    raw_thresholds = data.get("thresholds")
    if raw_thresholds is not None:
        if not isinstance(raw_thresholds, dict):
            problems["thresholds"] = "must be an object with bm, secular"
        else:
            bm = _number(raw_thresholds.get("bm", 0.01), "thresholds.bm", problems, positive=True)
            secular = _number(raw_thresholds.get("secular", 0.01), "thresholds.secular", problems, positive=True)
            if bm is not None and secular is not None:
                thresholds = MarkovianityThresholds(bm, secular)

    figure = data.get("figure")
    if command == "figure" and figure not in FIGURES:
        problems["figure"] = f"must be one of {', '.join(FIGURES)}"
    if command == "duality" and scenario.family not in ("lorentzian", "chain"):
        problems["scenario"] = "duality needs a continuum chain (lorentzian or a chain document)"
    if command == "evolve" and scenario.family == "junction":
        problems["scenario"] = "evolve needs a bath, not a single junction"
    if command == "disorder" and scenario.family != "disorder":
        problems["scenario"] = "disorder needs a disorder scenario"

    output_path = data.get("output_path", "jja_bath_out")
    if not isinstance(output_path, str) or not output_path:
        problems["output_path"] = "must be a nonempty string"

    if problems:
        raise ConfigError(problems)
    return RunConfig(
        command=command,
        scenario=scenario,
        output_path=output_path,
        grid=grid,
        frequency_grid=frequency_grid,
        seed=seed,
        omega0=omega0,
        e_q=e_q,
        beta=beta,
        n_max=n_max,
        n_fock=n_fock,
        n_initial=n_initial,
        thresholds=thresholds,
        figure=figure,
    )


def load_run_config(path: Optional[str] = None, overrides: Optional[dict[str, Any]] = None) -> RunConfig:
    """
    Read a JSON configuration (any fsspec URL) and apply flag overrides on top.

    Overrides whose value is None are ignored, so unset flags never mask the file.

    Raises:
        ConfigError: If the file cannot be read or any field is invalid.
    """
    data: dict[str, Any] = {}
    if path is not None:
        try:
            loaded = _read_json(path)
        except (OSError, ValueError) as e:
            raise ConfigError({"config": f"cannot read {path}: {e}"}) from e
        if not isinstance(loaded, dict):
            raise ConfigError({"config": "top level must be a JSON object"})
        data.update(loaded)
    for key, value in (overrides or {}).items():
        if value is not None:
            data[key] = value
    logger.debug("run configuration keys: %s", ", ".join(sorted(data)))
    return parse_run_config(data)
