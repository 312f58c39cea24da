import logging
from typing import Any, Callable

import click

from jja_bath import __version__
from jja_bath.config import FIGURES, load_run_config
from jja_bath.errors import ConfigError, NumericalError
from jja_bath.runtime import run

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

_OVERRIDES = {
    "out": "output_path",
    "scenario": "scenario",
    "seed": "seed",
    "omega0": "omega0",
    "beta": "beta",
    "e_q": "e_q",
    "n_max": "n_max",
    "n_fock": "n_fock",
    "n_initial": "n_initial",
}


def configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )


def cmd_run(command: str, options: dict[str, Any]) -> int:
    """Validate flags and config, run one command and report the artifacts."""
    configure_logging(bool(options.get("verbose")))
    overrides = {key: options.get(flag) for flag, key in _OVERRIDES.items()}
    overrides["command"] = command
    if options.get("figure") is not None:
        overrides["figure"] = options["figure"]
    try:
        cfg = load_run_config(options.get("config"), overrides)
        summary = run(cfg)
    except NumericalError as e:
        click.echo(f"Error: {e}", err=True)
        return EXIT_NUMERICAL
    except ConfigError as e:
        click.echo(f"Error: {e}", err=True)
        return EXIT_CONFIG
    except (ValueError, FileNotFoundError) as e:
        click.echo(f"Error: {e}", err=True)
        return EXIT_CONFIG
    click.echo(f"Wrote {len(summary['artifacts'])} artifacts to {summary['output']}")
    return EXIT_OK


def run_options(fn: Callable) -> Callable:
    """Flags shared by every command; unset flags leave the config file in charge."""
    decorators = [
        click.option("--config", "config", type=click.Path(dir_okay=False), help="JSON run configuration."),
        click.option("--out", "out", help="Output directory or fsspec URL (e.g. memory://run)."),
        click.option("--seed", type=click.IntRange(0, 2**64 - 1), help="Seed for sampled chains."),
        click.option("--scenario", help="lorentzian, disorder, junction, or a path to a scenario JSON."),
        click.option("--omega0", type=float, help="Oscillator frequency."),
        click.option("--beta", type=float, help="Inverse bath temperature (omit for zero temperature)."),
        click.option("--e-q", "e_q", type=float, help="Oscillator charging energy E_Q."),
        click.option("--n-max", "n_max", type=int, help="Charge-basis cutoff."),
        click.option("--n-fock", "n_fock", type=int, help="Fock-space cutoff of the oscillator."),
        click.option("--n-initial", "n_initial", type=int, help="Initial Fock level for evolve."),
        click.option("--verbose", "-v", is_flag=True, help="Log numerical progress."),
    ]
    for decorator in reversed(decorators):
        fn = decorator(fn)
    return fn


@click.group(name="jja_bath")
@click.version_option(__version__, prog_name="jja_bath")
def app() -> None:
    """Josephson-junction-array bath: correlations, master-equation coefficients and figure data."""


def _command(name: str, help_text: str) -> None:
    @app.command(name=name, help=help_text)
    @run_options
    @click.pass_context
    def command(ctx: click.Context, **options: Any) -> None:
        ctx.exit(cmd_run(name, options))


_command("correlation", "Correlation function G(t) of a junction or Γ(t) of a bath.")
_command("spectral", "Effective spectral density J(E).")
_command("gksl", "Decay rate, Lamb shift and Markovianity at the oscillator frequency.")
_command("evolve", "Master-equation evolution of the oscillator photon number.")
_command("duality", "Map a large-E_C chain to its large-E_J partner and compare.")
_command("disorder", "Sample a thickness-disordered chain and compare with the continuum.")
_command("markovianity", "Born-Markov and secular margins.")


@app.command(help="Data behind one figure preset.")
@click.argument("name", type=click.Choice(FIGURES))
@run_options
@click.pass_context
def figure(ctx: click.Context, name: str, **options: Any) -> None:
    ctx.exit(cmd_run("figure", {**options, "figure": name}))


def main(argv=None) -> int:
    try:
        result = app.main(args=argv, prog_name="jja_bath", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return EXIT_CONFIG
    except click.exceptions.Abort:
        return 1
    return int(result or 0)


if __name__ == "__main__":
    raise SystemExit(main())
