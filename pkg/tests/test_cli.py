"""Tests for the jja_bath command line."""

import dataclasses
import json
import math

import fsspec
import pytest
from click.testing import CliRunner

from jja_bath import __version__
from jja_bath.cli import EXIT_CONFIG, EXIT_OK, app, main
from jja_bath.config import ScenarioConfig, parse_run_config
from jja_bath.errors import ConfigError
from jja_bath.io import ArtifactStore, parse_csv
from jja_bath.junction import CorrelationSeries
from jja_bath.runtime import run


def write_config(url: str, payload: dict) -> str:
    with fsspec.open(url, "w") as f:
        json.dump(payload, f)
    return url


@pytest.fixture
def runner():
    return CliRunner()


class TestCli:
    """Tests for command dispatch and exit codes."""

    def test_version(self, runner):
        """Test the version option."""
        result = runner.invoke(app, ["--version"])
        assert result.exit_code == 0
        assert __version__ in result.output

    def test_junction_correlation(self, runner):
        """Test exact, perturbative and Matsubara series of one junction."""
        config = write_config(
            "memory://jja_cli_cfg/junction.json",
            {
                "scenario": {"family": "junction", "params": {"e_c": 1.0, "e_j": 0.05}},
                "grid": {"start": 0.0, "stop": 5.0, "points": 11},
                "beta": 10.0,
            },
        )
        out = "memory://jja_cli_junction"
        result = runner.invoke(app, ["correlation", "--config", config, "--out", out])
        assert result.exit_code == EXIT_OK, result.output
        store = ArtifactStore(out)
        assert store.list_artifacts() == [
            "correlation_exact.csv",
            "correlation_matsubara.csv",
            "correlation_perturbative.csv",
            "manifest.json",
        ]
        exact = CorrelationSeries.from_csv(store.read_text("correlation_exact.csv"))
        assert len(exact.times) == 11
        manifest = store.read_json("manifest.json")
        assert manifest["command"] == "correlation"
        assert manifest["params"]["beta"] == 10.0

    def test_markovianity_default_chain(self, runner):
        """Test the closed-form Markovianity verdict of the default Lorentzian chain."""
        out = "memory://jja_cli_markov"
        result = runner.invoke(app, ["markovianity", "--out", out])
        assert result.exit_code == EXIT_OK, result.output
        assert "Wrote 2 artifacts" in result.output
        report = ArtifactStore(out).read_json("markovianity.json")
        assert report["method"] == "empirical"
        assert report["criteria"] == {"bm": True, "secular": True}
        assert report["thresholds"] == {"bm": 0.01, "secular": 0.01}

    def test_gksl_report(self, runner):
        """Test κ at the Lorentzian peak and a short frequency sweep."""
        config = write_config(
            "memory://jja_cli_cfg/gksl.json",
            {"frequency_grid": {"start": 1.05, "stop": 1.15, "points": 3}},
        )
        out = "memory://jja_cli_gksl"
        result = runner.invoke(app, ["gksl", "--config", config, "--out", out])
        assert result.exit_code == EXIT_OK, result.output
        store = ArtifactStore(out)
        report = store.read_json("gksl.json")
        assert report["kappa"] == pytest.approx(1.9684e-5, rel=1e-3)
        assert report["lamb_shift"] is not None
        assert report["units"] == "E_C0"
        assert report["bm_margin"] == pytest.approx(report["kappa"] / report["omega_b"], rel=1e-2)
        assert report["secular_margin"] == pytest.approx(report["zeta_m"], rel=1e-12)
        assert store.read_text("gksl_sweep.csv").startswith("# source=gksl-sweep")

    def test_disorder_seed_flag(self, runner):
        """Test that --seed reaches the sampled chain."""
        config = write_config(
            "memory://jja_cli_cfg/disorder.json",
            {
                "scenario": {"family": "disorder", "params": {"n_j": 200, "seed": 1}},
                "grid": {"start": 0.0, "stop": 20.0, "points": 11},
            },
        )
        out = "memory://jja_cli_disorder"
        result = runner.invoke(app, ["disorder", "--config", config, "--out", out, "--seed", "7"])
        assert result.exit_code == EXIT_OK, result.output
        summary = ArtifactStore(out).read_json("disorder.json")
        assert summary["seed"] == 7
        assert summary["n_j"] == 200

    def test_config_error_exit(self, runner):
        """Test exit code 2 and the dotted path for an invalid flag combination."""
        result = runner.invoke(app, ["evolve", "--n-fock", "3", "--n-initial", "5", "--out", "memory://jja_cli_bad"])
        assert result.exit_code == EXIT_CONFIG
        assert "Error:" in result.output
        assert "n_initial" in result.output

    def test_unreadable_config(self, runner):
        """Test exit code 2 for a missing configuration file."""
        result = runner.invoke(app, ["gksl", "--config", "memory://jja_cli_cfg/none.json"])
        assert result.exit_code == EXIT_CONFIG
        assert "config" in result.output


class TestMain:
    """Tests for the non-standalone entry point."""

    def test_returns_exit_code(self):
        """Test that main returns the command's exit code."""
        assert main(["markovianity", "--out", "memory://jja_cli_main"]) == EXIT_OK

    def test_duality_rejects_junction(self):
        """Test that duality on a junction is a configuration error."""
        assert main(["duality", "--scenario", "junction", "--out", "memory://jja_cli_dual"]) == EXIT_CONFIG

    def test_disorder_rejects_lorentzian(self):
        """Test that the disorder command does not silently swap in another scenario."""
        assert main(["disorder", "--scenario", "lorentzian", "--out", "memory://jja_cli_disorder_bad"]) == EXIT_CONFIG
        assert not ArtifactStore("memory://jja_cli_disorder_bad").exists("disorder.json")

    def test_unknown_figure(self):
        """Test that an unknown preset is a usage error."""
        assert main(["figure", "fig9"]) == EXIT_CONFIG


class TestRuntime:
    """Tests for the command runners behind the CLI."""

    def test_spectral(self):
        """Test the Lorentzian density, its closed form and the profiles."""
        summary = run(parse_run_config({"command": "spectral", "output_path": "memory://jja_rt_spectral"}))
        assert summary["artifacts"] == [
            "spectral_density.csv",
            "spectral_density_closed_form.csv",
            "junction_profiles.csv",
            "manifest.json",
        ]
        store = ArtifactStore(summary["output"])
        _, _, table = parse_csv(store.read_text("spectral_density.csv"))
        assert list(table.columns) == ["E", "J"]
        assert table["J"].max() == pytest.approx(50.0, rel=1e-3)

    def test_evolve(self):
        """Test that the photon number decays as e^{−κt}."""
        cfg = parse_run_config(
            {
                "command": "evolve",
                "grid": {"start": 0.0, "stop": 1.0e5, "points": 11},
                "n_fock": 4,
                "output_path": "memory://jja_rt_evolve",
            }
        )
        store = ArtifactStore(run(cfg)["output"])
        gksl = store.read_json("gksl.json")
        kappa = gksl["kappa"]
        assert set(gksl["diagnostics"]) == {"omega_b", "zeta_m", "bm_margin", "secular_margin"}
        source, params, table = parse_csv(store.read_text("trajectory.csv"))
        assert source == "gksl-evolution"
        assert params["n_initial"] == 1
        assert table["n_expect"].iloc[-1] == pytest.approx(math.exp(-kappa * 1.0e5), rel=1e-5)

    def test_disorder_needs_disorder_scenario(self):
        """Test that run_disorder raises ConfigError for a Lorentzian scenario."""
        cfg = dataclasses.replace(
            parse_run_config({"command": "disorder", "output_path": "memory://jja_rt_disorder_bad"}),
            scenario=ScenarioConfig(),
        )
        with pytest.raises(ConfigError) as exc:
            run(cfg)
        assert "scenario" in exc.value.problems

    def test_fig2(self):
        """Test the two temperatures of the single-junction preset."""
        cfg = parse_run_config(
            {
                "command": "figure",
                "figure": "fig2",
                "grid": {"start": 0.0, "stop": 10.0, "points": 11},
                "output_path": "memory://jja_rt_fig2",
            }
        )
        artifacts = run(cfg)["artifacts"]
        assert "fig2_exact_T0.05.csv" in artifacts
        assert "fig2_perturbative_T0.1.csv" in artifacts

    def test_fig4_offset(self):
        """Test the thermal offset ratio written by the low-temperature preset."""
        cfg = parse_run_config(
            {
                "command": "figure",
                "figure": "fig4",
                "grid": {"start": 0.0, "stop": 100.0, "points": 11},
                "output_path": "memory://jja_rt_fig4",
            }
        )
        store = ArtifactStore(run(cfg)["output"])
        offset = store.read_json("fig4_offset.json")
        assert offset["delta_star"] == pytest.approx(1.0 / math.log(20.0), rel=1e-9)
        assert offset["offset_ratio"] == pytest.approx(1.016, abs=0.02)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
