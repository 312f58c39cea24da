"""Command implementations: build the scenario, compute, write artifacts."""

import dataclasses
import logging
import math
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np
import pandas as pd

from jja_bath.chain.correlation import (
    delta_profile,
    gamma_continuum,
    gamma_discrete,
    offset_gamma0,
    offset_ratio,
    spectral_density_large_ec,
    zero_temperature_gamma0,
)
from jja_bath.chain.harmonic import harmonic_gamma, harmonic_spectral_density
from jja_bath.chain.spec import HARMONIC, ContinuumChain, DiscreteChain
from jja_bath.chain.spectral import SpectralDensity
from jja_bath.config import DEFAULT_TIME_POINTS, RunConfig
from jja_bath.duality.mapping import map_to_large_ej, mapped_chain, verify_duality
from jja_bath.errors import ConfigError
from jja_bath.gksl.coefficients import (
    GkslResult,
    OscillatorParams,
    decay_rate_sweep,
    gksl_coefficients,
    lamb_shift_sweep,
)
from jja_bath.gksl.evolution import OscillatorState, evolve_oscillator, trajectory_table
from jja_bath.gksl.markovianity import MarkovianityReport, markovianity_report
from jja_bath.io.artifacts import ArtifactStore
from jja_bath.junction.correlation import exact_correlation
from jja_bath.junction.hamiltonian import JunctionParams
from jja_bath.perturbation.closed_form import g_low_t, g_moderate
from jja_bath.perturbation.matsubara import matsubara_correlation
from jja_bath.scenarios.disorder import (
    DisorderChainParams,
    disorder_gamma_analytic,
    disorder_spectral_density,
    gaussian_disorder_chain,
    sampled_energy_moments,
)
from jja_bath.scenarios.lorentzian import LorentzianChainParams, lorentzian_chain
from jja_bath.typing_ import DisorderSummaryPayload, GkslReportPayload, RunSummary

logger = logging.getLogger(__name__)

DECAY_WINDOW = 50.0
EVOLUTION_DECAY_TIMES = 5.0
DUALITY_PROBES = 101
THERMAL_RATIO = 0.42
FIG2_JOSEPHSON = 0.01
FIG2_TEMPERATURES = (0.05, 0.1)
FIG6_WIDTHS = np.linspace(0.02, 0.4, 20)
FIG6_FREQUENCIES = np.linspace(0.25, 2.0, 36)
FIG6_TIMES = np.linspace(0.0, 200.0, 401)


@dataclass(frozen=True, eq=False)
class Bath:
    """A bath reduced to what the oscillator sees: J(E) and default oscillator data."""

    j: SpectralDensity
    eps_i: float
    omega0: float
    e_q: float
    unit: str
    scenario: object


def _scenario(cfg: RunConfig):
    scenario = cfg.scenario.build()
    if isinstance(scenario, DisorderChainParams) and cfg.seed is not None:
        scenario = dataclasses.replace(scenario, seed=cfg.seed)
    return scenario


def _bath(scenario) -> Bath:
    if isinstance(scenario, LorentzianChainParams):
        chain, _ = lorentzian_chain(scenario)
        return Bath(
            spectral_density_large_ec(chain),
            scenario.eps_i,
            scenario.peak_frequency(),
            100.0 * scenario.e_c0,
            "E_C0",
            scenario,
        )
    if isinstance(scenario, DisorderChainParams):
        e_0 = scenario.fab.e_0
        return Bath(disorder_spectral_density(scenario), scenario.eps_i, e_0, 2.0 * e_0, "E_0", scenario)
    if isinstance(scenario, ContinuumChain):
        j = harmonic_spectral_density(scenario) if scenario.regime == HARMONIC else spectral_density_large_ec(scenario)
        middle = 0.5 * (j.support[0] + j.support[1])
        return Bath(j, scenario.coupling_eps, middle, 100.0 * middle, "1", scenario)
    raise ValueError(f"a {type(scenario).__name__} scenario has no continuous spectral density")


def _osc(cfg: RunConfig, bath: Bath) -> OscillatorParams:
    return OscillatorParams(cfg.omega0 or bath.omega0, cfg.e_q or bath.e_q, bath.eps_i)


def _times(cfg: RunConfig, stop: float) -> np.ndarray:
    if cfg.grid is not None:
        return cfg.grid.values()
    return np.linspace(0.0, stop, DEFAULT_TIME_POINTS)


def _frequencies(cfg: RunConfig, j: SpectralDensity) -> np.ndarray:
    if cfg.frequency_grid is not None:
        return cfg.frequency_grid.values()
    return j.default_grid()


def _summary(cfg: RunConfig, store: ArtifactStore) -> RunSummary:
    store.write_manifest(cfg.command, cfg.to_dict())
    return {"command": cfg.command, "output": store.url, "artifacts": list(store.written)}


def _markovianity_source(bath: Bath) -> Union[LorentzianChainParams, SpectralDensity]:
    if isinstance(bath.scenario, LorentzianChainParams):
        return bath.scenario
    return bath.j


def gksl_payload(res: GkslResult, report: MarkovianityReport, unit: str) -> GkslReportPayload:
    """The JSON report of one oscillator frequency."""
    data = res.to_dict()
    diagnostics = res.diagnostics or report.diagnostics()
    return {
        "kappa": res.kappa,
        "lamb_shift": data["lamb_shift"],
        "constant_shift": data["constant_shift"],
        "omega0": res.omega0,
        "omega_b": report.omega_b,
        "zeta_m": report.zeta_m,
        "bm_margin": diagnostics["bm_margin"],
        "secular_margin": diagnostics["secular_margin"],
        "criteria": {"bm": report.bm, "secular": report.secular},
        "units": unit,
    }


def _chain_correlation(cfg: RunConfig, chain: ContinuumChain, store: ArtifactStore, prefix: str = "") -> None:
    if chain.regime == HARMONIC:
        j = harmonic_spectral_density(chain)
        times = _times(cfg, DECAY_WINDOW / (j.support[1] - j.support[0]))
        series, _ = harmonic_gamma(chain, cfg.beta, times)
        store.write_series(f"{prefix}gamma.csv", series)
        return
    j = spectral_density_large_ec(chain)
    times = _times(cfg, DECAY_WINDOW / (j.support[1] - j.support[0]))
    series = gamma_continuum(chain, times)
    if math.isfinite(cfg.beta):
        gamma0 = offset_gamma0(chain, cfg.beta)
        series = series.with_offset(gamma0)
        store.write_json(
            f"{prefix}offset.json",
            {"beta": cfg.beta, "gamma0": gamma0, "offset_ratio": offset_ratio(chain, cfg.beta)},
        )
    store.write_series(f"{prefix}gamma.csv", series)


def run_correlation(cfg: RunConfig) -> RunSummary:
    """Single-junction G(t) or whole-bath Γ(t), depending on the scenario."""
    store = ArtifactStore(cfg.output_path)
    scenario = _scenario(cfg)
    if isinstance(scenario, JunctionParams):
        times = _times(cfg, 100.0 / scenario.e_c)
        store.write_series("correlation_exact.csv", exact_correlation(scenario, cfg.n_max, cfg.beta, times))
        if math.isinf(cfg.beta):
            store.write_series("correlation_perturbative.csv", g_low_t(scenario, times))
        else:
            store.write_series("correlation_perturbative.csv", g_moderate(scenario, cfg.beta, times))
            store.write_series("correlation_matsubara.csv", matsubara_correlation(scenario, cfg.beta, times))
    elif isinstance(scenario, LorentzianChainParams):
        chain, _ = lorentzian_chain(scenario)
        _chain_correlation(cfg, chain, store)
    elif isinstance(scenario, DisorderChainParams):
        times = _times(cfg, DECAY_WINDOW / scenario.fab.delta_ec)
        store.write_series("gamma.csv", disorder_gamma_analytic(scenario, scenario.eps_i, times))
    elif isinstance(scenario, DiscreteChain):
        times = _times(cfg, 100.0 / float(np.mean(scenario.e_c)))
        store.write_series("gamma.csv", gamma_discrete(scenario, times))
    else:
        _chain_correlation(cfg, scenario, store)
    return _summary(cfg, store)


def _profile_table(chain: ContinuumChain, points: int = 401) -> pd.DataFrame:
    x = chain.grid(points)
    return pd.DataFrame(
        {
            "x": x,
            "nu": chain.density.value(x),
            "e_c": chain.ec_profile.value(x),
            "e_j": chain.ej_profile.value(x),
        }
    )


def run_spectral(cfg: RunConfig) -> RunSummary:
    """J(E) tabulated on the frequency grid; the Lorentzian chain adds its closed form and profiles."""
    store = ArtifactStore(cfg.output_path)
    scenario = _scenario(cfg)
    bath = _bath(scenario)
    grid = _frequencies(cfg, bath.j)
    store.write_text("spectral_density.csv", bath.j.to_csv(grid))
    if isinstance(scenario, LorentzianChainParams):
        chain, closed = lorentzian_chain(scenario)
        store.write_text("spectral_density_closed_form.csv", closed.to_csv(grid))
        store.write_table("junction_profiles.csv", _profile_table(chain), "profiles", scenario.to_dict())
    return _summary(cfg, store)


def _sweep_table(j: SpectralDensity, osc: OscillatorParams, omegas: np.ndarray) -> pd.DataFrame:
    return pd.DataFrame(
        {
            "omega0": omegas,
            "kappa": decay_rate_sweep(j, osc, omegas),
            "lamb_shift": lamb_shift_sweep(j, osc, omegas),
        }
    )


def run_gksl(cfg: RunConfig) -> RunSummary:
    """κ, δ_LS and the Markovianity verdict at ω₀, plus κ(ω) and δ_LS(ω) sweeps."""
    store = ArtifactStore(cfg.output_path)
    bath = _bath(_scenario(cfg))
    osc = _osc(cfg, bath)
    report = markovianity_report(_markovianity_source(bath), osc, cfg.thresholds)
    res = gksl_coefficients(bath.j, osc, report.diagnostics())
    store.write_json("gksl.json", gksl_payload(res, report, bath.unit))
    store.write_table(
        "gksl_sweep.csv", _sweep_table(bath.j, osc, _frequencies(cfg, bath.j)), "gksl-sweep", osc.to_dict()
    )
    return _summary(cfg, store)


def run_evolve(cfg: RunConfig) -> RunSummary:
    """Photon-number decay of the oscillator from the Fock state ``n_initial``."""
    store = ArtifactStore(cfg.output_path)
    bath = _bath(_scenario(cfg))
    osc = _osc(cfg, bath)
    report = markovianity_report(_markovianity_source(bath), osc, cfg.thresholds)
    res = gksl_coefficients(bath.j, osc, report.diagnostics())
    stop = EVOLUTION_DECAY_TIMES / res.kappa if res.kappa > 0.0 else 100.0 / osc.omega0
    times = _times(cfg, stop)
    state0 = OscillatorState.fock(cfg.n_initial, cfg.n_fock)
    states = evolve_oscillator(res, osc, state0, times)
    params = {**osc.to_dict(), "kappa": res.kappa, "lamb_shift": res.lamb_shift, "n_initial": cfg.n_initial}
    store.write_table("trajectory.csv", trajectory_table(times, states), "gksl-evolution", params)
    store.write_json("gksl.json", res.to_dict())
    return _summary(cfg, store)


def run_duality(cfg: RunConfig) -> RunSummary:
    """Map the large-E_C chain to its large-E_J partner and compare both baths."""
    store = ArtifactStore(cfg.output_path)
    scenario = _scenario(cfg)
    if isinstance(scenario, LorentzianChainParams):
        chain, _ = lorentzian_chain(scenario)
    elif isinstance(scenario, ContinuumChain):
        chain = scenario
    else:
        raise ValueError("duality needs a continuum chain scenario")
    bath = _bath(scenario)
    dmap = map_to_large_ej(chain, cfg.beta)
    probes = np.linspace(bath.j.support[0], bath.j.support[1], DUALITY_PROBES)
    report = verify_duality(dmap, probes, _osc(cfg, bath))
    store.write_json("duality.json", {"map": dmap.to_dict(), "report": report.to_dict()})
    store.write_json("mapped_chain.json", mapped_chain(dmap).to_dict())
    return _summary(cfg, store)


def disorder_summary(
    p: DisorderChainParams, chain: DiscreteChain, sampled, analytic
) -> DisorderSummaryPayload:
    """Sampled-versus-analytic agreement of a disordered chain."""
    mean, var = sampled_energy_moments(p)
    gamma_zero = float(analytic.real[0])
    return {
        "n_j": p.n_j,
        "seed": p.seed,
        "delta_ec": p.fab.delta_ec,
        "sample_mean": float(np.mean(chain.e_c)),
        "analytic_mean": mean,
        "standard_error": math.sqrt(var / p.n_j),
        "max_deviation": float(np.max(np.abs(sampled.values - analytic.values))),
        "tolerance": 5.0 * gamma_zero / math.sqrt(p.n_j),
    }


def run_disorder(cfg: RunConfig) -> RunSummary:
    """Sample a disordered chain and compare its Γ(t) with the continuum quadrature."""
    store = ArtifactStore(cfg.output_path)
    scenario = _scenario(cfg)
    if not isinstance(scenario, DisorderChainParams):
        raise ConfigError({"scenario": "disorder needs a disorder scenario"})
    chain = gaussian_disorder_chain(scenario)
    times = _times(cfg, EVOLUTION_DECAY_TIMES / scenario.fab.delta_ec)
    sampled = gamma_discrete(chain, times)
    analytic = disorder_gamma_analytic(scenario, scenario.eps_i, times)
    junctions = pd.DataFrame({"e_c": chain.e_c, "e_j": chain.e_j})
    store.write_table("disorder_junctions.csv", junctions, "disorder-sample", {"seed": scenario.seed})
    store.write_series("gamma_sampled.csv", sampled)
    store.write_series("gamma_analytic.csv", analytic)
    store.write_json("disorder.json", disorder_summary(scenario, chain, sampled, analytic))
    return _summary(cfg, store)


def run_markovianity(cfg: RunConfig) -> RunSummary:
    store = ArtifactStore(cfg.output_path)
    bath = _bath(_scenario(cfg))
    osc = _osc(cfg, bath)
    report = markovianity_report(_markovianity_source(bath), osc, cfg.thresholds)
    store.write_json("markovianity.json", {**report.to_dict(), "thresholds": cfg.thresholds.to_dict()})
    return _summary(cfg, store)


def _fig2(cfg: RunConfig, store: ArtifactStore) -> None:
    p = JunctionParams(1.0, FIG2_JOSEPHSON)
    times = _times(cfg, 100.0 / p.e_c)
    for temperature in FIG2_TEMPERATURES:
        beta = 1.0 / temperature
        store.write_series(f"fig2_perturbative_T{temperature}.csv", g_moderate(p, beta, times))
        store.write_series(f"fig2_exact_T{temperature}.csv", exact_correlation(p, cfg.n_max, beta, times))


def _fig3(cfg: RunConfig, store: ArtifactStore) -> None:
    p = LorentzianChainParams()
    chain, closed = lorentzian_chain(p)
    j = spectral_density_large_ec(chain)
    store.write_table("fig3_junction_density.csv", _profile_table(chain), "profiles", p.to_dict())
    energies = np.linspace(j.support[0], j.support[1], 401)
    table = pd.DataFrame({"E": energies, "J": j.evaluate(energies), "J_closed_form": closed.evaluate(energies)})
    store.write_table("fig3_spectral_density.csv", table, "large-EC", p.to_dict())

    osc = OscillatorParams(p.e_c0, 100.0 * p.e_c0, p.eps_i)
    omegas = cfg.frequency_grid.values() if cfg.frequency_grid else np.linspace(0.5, 1.7, 241) * p.e_c0
    sweep = _sweep_table(j, osc, omegas)
    sweep["kappa_over_width"] = sweep["kappa"] / p.width
    sweep["kappa_over_omega0"] = sweep["kappa"] / sweep["omega0"]
    sweep["lamb_shift_over_omega0"] = sweep["lamb_shift"] / sweep["omega0"]
    store.write_table("fig3_rates.csv", sweep, "gksl-sweep", osc.to_dict())
    times = _times(cfg, DECAY_WINDOW / p.width)
    series = gamma_continuum(chain, times)
    store.write_series("fig3_gamma.csv", series)


def _offset_figure(cfg: RunConfig, store: ArtifactStore, p: LorentzianChainParams, name: str) -> None:
    chain, _ = lorentzian_chain(p)
    delta_star = delta_profile(chain).delta_star
    beta = cfg.beta if math.isfinite(cfg.beta) else 1.0 / (THERMAL_RATIO * delta_star)
    times = _times(cfg, DECAY_WINDOW / p.width)
    zero_t = gamma_continuum(chain, times)
    gamma0 = offset_gamma0(chain, beta)
    norm = zero_temperature_gamma0(chain)
    table = pd.DataFrame(
        {"t": times, "re_zero_temperature": zero_t.real / norm, "re_thermal": (zero_t.real + gamma0) / norm}
    )
    params = {**p.to_dict(), "beta": beta, "delta_star": delta_star}
    store.write_table(f"{name}_gamma.csv", table, "chain-continuum", params)
    store.write_json(
        f"{name}_offset.json",
        {"delta_star": delta_star, "beta": beta, "gamma0": gamma0, "offset_ratio": gamma0 / norm},
    )


def _fig4(cfg: RunConfig, store: ArtifactStore) -> None:
    _offset_figure(cfg, store, LorentzianChainParams(), "fig4")


def _fig5(cfg: RunConfig, store: ArtifactStore) -> None:
    _offset_figure(cfg, store, LorentzianChainParams.high_temperature_variant(), "fig5")


def _fig6(cfg: RunConfig, store: ArtifactStore) -> None:
    base = DisorderChainParams.fig6(seed=cfg.seed or 0)
    e_0 = base.fab.e_0
    times = cfg.grid.values() if cfg.grid else FIG6_TIMES * (1.0 / e_0)
    omegas = cfg.frequency_grid.values() if cfg.frequency_grid else FIG6_FREQUENCIES * e_0
    correlation_rows = []
    rate_rows = []
    for width in FIG6_WIDTHS * e_0:
        p = base.with_width(float(width))
        series = disorder_gamma_analytic(p, p.eps_i, times)
        correlation_rows.append(
            pd.DataFrame({"t": times, "delta_ec": width, "abs_re_normalized": np.abs(series.real) / series.real[0]})
        )
        j = disorder_spectral_density(p)
        osc = OscillatorParams(e_0, 2.0 * e_0, p.eps_i)
        sweep = _sweep_table(j, osc, omegas)
        rate_rows.append(
            pd.DataFrame(
                {
                    "delta_ec": width,
                    "omega0": omegas,
                    "kappa_over_e0": sweep["kappa"] / e_0,
                    "lamb_shift_over_e0": sweep["lamb_shift"] / e_0,
                }
            )
        )
    params = {"n_j": base.n_j, "e_q": 2.0 * e_0, "eps_i": base.eps_i, **base.fab.to_dict()}
    params.pop("delta_ec")
    store.write_table("fig6_correlation.csv", pd.concat(correlation_rows, ignore_index=True), "disorder", params)
    store.write_table("fig6_rates.csv", pd.concat(rate_rows, ignore_index=True), "disorder", params)


FIGURE_PRESETS: dict[str, Callable[[RunConfig, ArtifactStore], None]] = {
    "fig2": _fig2,
    "fig3": _fig3,
    "fig4": _fig4,
    "fig5": _fig5,
    "fig6": _fig6,
}


def run_figure(cfg: RunConfig) -> RunSummary:
    """Emit the data behind one figure preset with its caption parameters."""
    store = ArtifactStore(cfg.output_path)
    FIGURE_PRESETS[cfg.figure](cfg, store)
    return _summary(cfg, store)


COMMAND_RUNNERS: dict[str, Callable[[RunConfig], RunSummary]] = {
    "correlation": run_correlation,
    "spectral": run_spectral,
    "gksl": run_gksl,
    "evolve": run_evolve,
    "duality": run_duality,
    "disorder": run_disorder,
    "markovianity": run_markovianity,
    "figure": run_figure,
}


def run(cfg: RunConfig) -> RunSummary:
    """Dispatch a validated configuration to its command."""
    logger.debug("running %s into %s", cfg.command, cfg.output_path)
    return COMMAND_RUNNERS[cfg.command](cfg)
