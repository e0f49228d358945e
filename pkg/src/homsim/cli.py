"""Command-line front end.

Subcommands: run, sweep-trotter, sweep-theta, circuit-report. Results go
to stdout unless --out is given; a directory --out gets an auto-generated
filename embedding the config hash. Exit codes: 0 success, 2 invalid
config, 3 internal invariant violation.
"""
from __future__ import annotations

import csv
import functools
import io
import json
import math
import sys
from pathlib import Path

import click

from .circuit import InternalError
from .experiments import (
    ExperimentConfig,
    circuit_report,
    run_hom,
    sweep_theta,
    sweep_trotter,
    theta_grid,
)
from .statevector import NormDriftError

EXIT_INVALID_CONFIG = 2
EXIT_INTERNAL = 3


def _guarded(f):
    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except ValueError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_INVALID_CONFIG)
        except (InternalError, NormDriftError) as exc:
            click.echo(f"internal error: {exc}", err=True)
            sys.exit(EXIT_INTERNAL)

    return wrapper


def _config_options(f):
    for opt in reversed(
        [
            click.option("--theta", type=float, default=math.pi / 4, show_default=True),
            click.option("--steps", type=int, default=1, show_default=True),
            click.option("--shots", type=int, default=10_000, show_default=True),
            click.option("--seed", type=int, default=1234, show_default=True),
            click.option("--reduced", is_flag=True, help="Use the pruned interaction."),
            click.option("--exact", is_flag=True, help="Bypass the circuit; dense oracle."),
            click.option("--qubits-per-mode", type=int, default=2, show_default=True),
        ]
    ):
        f = opt(f)
    return f


def _build_config(theta, steps, shots, seed, reduced, exact, qubits_per_mode):
    return ExperimentConfig(
        theta=theta,
        trotter_steps=steps,
        shots=shots,
        seed=seed,
        reduced=reduced,
        exact=exact,
        qubits_per_mode=qubits_per_mode,
    )


def _write(text: str, out: str | None, default_name: str) -> None:
    if out is None:
        click.echo(text, nl=False)
        return
    path = Path(out)
    if path.is_dir():
        path = path / default_name
    path.write_text(text)
    click.echo(f"wrote {path}", err=True)


def _rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _rows_out(rows: list[dict], fmt: str, out: str | None, stem: str) -> None:
    if fmt == "csv":
        _write(_rows_to_csv(rows), out, f"{stem}.csv")
    else:
        _write(json.dumps(rows, indent=2) + "\n", out, f"{stem}.json")


@click.group()
def main():
    """Beam-splitter compilation and two-photon interference runs."""


@main.command("run")
@_config_options
@click.option("--out", type=click.Path(), default=None)
@_guarded
def run_cmd(out, **kwargs):
    """Single interference run; JSON report."""
    config = _build_config(**kwargs)
    report = run_hom(config)
    _write(report.to_json(), out, f"hom-run-{config.hash()}.json")


@main.command("sweep-trotter")
@_config_options
@click.option("--steps-list", default="1,2,4,8,16", show_default=True,
              help="Comma-separated Trotter step counts.")
@click.option("--out", type=click.Path(), default=None)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json",
              show_default=True)
@_guarded
def sweep_trotter_cmd(steps_list, out, fmt, **kwargs):
    """Coincidence suppression vs Trotter step count."""
    config = _build_config(**kwargs)
    steps = [int(s) for s in steps_list.split(",") if s.strip()]
    rows = sweep_trotter(config, steps)
    _rows_out(rows, fmt, out, f"hom-sweep-trotter-{config.hash()}")


@main.command("sweep-theta")
@_config_options
@click.option("--points", type=int, default=17, show_default=True)
@click.option("--circuit", "use_circuit", is_flag=True,
              help="Use the Trotterized circuit instead of the exact oracle.")
@click.option("--out", type=click.Path(), default=None)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json",
              show_default=True)
@_guarded
def sweep_theta_cmd(points, use_circuit, out, fmt, **kwargs):
    """Coincidence probability across splitter angles."""
    config = _build_config(**kwargs)
    rows = sweep_theta(config, theta_grid(points), use_circuit=use_circuit)
    _rows_out(rows, fmt, out, f"hom-sweep-theta-{config.hash()}")


@main.command("circuit-report")
@_config_options
@click.option("--out", type=click.Path(), default=None)
@click.option("--qasm-out", type=click.Path(), default=None,
              help="Directory for full/reduced QASM dumps.")
@_guarded
def circuit_report_cmd(out, qasm_out, **kwargs):
    """Full vs reduced circuit metrics, plus QASM export."""
    config = _build_config(**kwargs)
    report = circuit_report(config)
    if qasm_out is not None:
        qdir = Path(qasm_out)
        qdir.mkdir(parents=True, exist_ok=True)
        for name in ("full", "reduced"):
            path = qdir / f"hom-{name}-{config.hash()}.qasm"
            path.write_text(report[name]["qasm"])
            report[name]["qasm_path"] = str(path)
            del report[name]["qasm"]
    _write(
        json.dumps(report, indent=2) + "\n",
        out,
        f"hom-circuit-report-{config.hash()}.json",
    )


if __name__ == "__main__":
    main()
