"""End-to-end interference experiment runs and sweeps.

Each run prepares one photon per mode with X gates, evolves through either
the synthesized Trotter circuit or the exact dense unitary, and reports
probabilities, a seeded shot histogram, circuit metrics, and fidelity to
the exact evolution. Defaults reproduce the reference setup: 2 qubits per
mode, a 1:1 splitter (θ = π/4), 10,000 shots.
"""
from __future__ import annotations

import hashlib
import json
import math
from dataclasses import asdict, dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import circuit as circ
from . import statevector as sv
from .beamsplitter import Interaction, exact_unitary, interaction, reduced_interaction
from .gray import FockEncoding, gray_bits


@dataclass(frozen=True)
class ExperimentConfig:
    theta: float = math.pi / 4
    trotter_steps: int = 1
    shots: int = 10_000
    seed: int = 1234
    reduced: bool = False
    exact: bool = False
    qubits_per_mode: int = 2

    def validate(self) -> None:
        if self.trotter_steps < 1:
            raise ValueError("trotter_steps must be >= 1")
        if self.shots < 1:
            raise ValueError("shots must be >= 1")
        if self.qubits_per_mode < 1:
            raise ValueError("qubits_per_mode must be >= 1")
        if self.reduced and self.qubits_per_mode != 2:
            raise ValueError("reduced interaction exists only for 2 qubits per mode")
        if not math.isfinite(self.theta):
            raise ValueError("theta must be finite")

    def hash(self) -> str:
        payload = json.dumps(asdict(self), sort_keys=True)
        return hashlib.sha256(payload.encode()).hexdigest()[:12]


@dataclass(frozen=True)
class ExperimentReport:
    config: ExperimentConfig
    probabilities: dict[str, float]
    counts: sv.Histogram
    metrics: Optional[dict]
    fidelity_to_exact: float
    rng: dict = field(
        default_factory=lambda: {"algorithm": sv.RNG_ALGORITHM, "seed": 0}
    )

    def to_dict(self) -> dict:
        return {
            "config": asdict(self.config),
            "probabilities": self.probabilities,
            "counts": dict(self.counts.counts),
            "shots": self.counts.shots,
            "metrics": self.metrics,
            "fidelity_to_exact": self.fidelity_to_exact,
            "rng": self.rng,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ExperimentReport":
        return cls(
            config=ExperimentConfig(**d["config"]),
            probabilities=d["probabilities"],
            counts=sv.Histogram(counts=d["counts"], shots=d["shots"]),
            metrics=d["metrics"],
            fidelity_to_exact=d["fidelity_to_exact"],
            rng=d["rng"],
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ExperimentReport":
        return cls.from_dict(json.loads(text))


def _single_photon_label(encoding: FockEncoding) -> str:
    # One photon in each mode; "0101" for the 2-qubit encoding.
    one = gray_bits(encoding, 1)
    return one + one


def _prep_circuit(n_qubits: int, label: str) -> circ.Circuit:
    gates = tuple(
        circ.Gate("X", q) for q, bit in enumerate(label) if bit == "1"
    )
    return circ.Circuit(n_qubits, gates)


def _interaction_for(config: ExperimentConfig) -> Interaction:
    if config.reduced:
        return reduced_interaction()
    return interaction(FockEncoding(config.qubits_per_mode))


def _report_metrics(c: circ.Circuit) -> dict:
    m = circ.metrics(c)
    return {
        "depth": m["depth"],
        "cx": m["cx_count"],
        "gate_counts": m["gate_counts"],
        "total_gates": m["total_gates"],
    }


def run_hom(config: ExperimentConfig) -> ExperimentReport:
    """One interference run: prep, evolve, measure statistics."""
    config.validate()
    encoding = FockEncoding(config.qubits_per_mode)
    n = 2 * config.qubits_per_mode
    label = _single_photon_label(encoding)
    initial = sv.init_basis(n, label)

    exact_state = sv.apply_dense(
        initial, exact_unitary(config.theta, interaction(encoding))
    )

    metrics_out: Optional[dict] = None
    if config.exact:
        out = exact_state
    else:
        bs_circuit = circ.synthesize(
            _interaction_for(config), config.theta, config.trotter_steps
        )
        out = sv.apply_circuit(initial, bs_circuit)
        metrics_out = _report_metrics(bs_circuit)

    probs = sv.probabilities(out)
    prob_map = {
        format(i, f"0{n}b"): float(p) for i, p in enumerate(probs)
    }
    histogram = sv.sample(out, config.shots, config.seed)
    return ExperimentReport(
        config=config,
        probabilities=prob_map,
        counts=histogram,
        metrics=metrics_out,
        fidelity_to_exact=sv.fidelity(exact_state, out),
        rng={"algorithm": sv.RNG_ALGORITHM, "seed": config.seed},
    )


def sweep_trotter(
    config: ExperimentConfig, steps_list: Sequence[int]
) -> list[dict]:
    """One row per Trotter step count; row seeds derive from the base seed."""
    if not steps_list:
        raise ValueError("steps_list must be non-empty")
    config.validate()
    encoding = FockEncoding(config.qubits_per_mode)
    coincidence = _single_photon_label(encoding)
    both_a = gray_bits(encoding, 0) + gray_bits(encoding, 2)
    both_b = gray_bits(encoding, 2) + gray_bits(encoding, 0)

    rows = []
    for i, steps in enumerate(steps_list):
        row_config = ExperimentConfig(
            **{
                **asdict(config),
                "trotter_steps": int(steps),
                "seed": config.seed + i,
                "exact": False,
            }
        )
        report = run_hom(row_config)
        rows.append(
            {
                "steps": int(steps),
                f"p_{coincidence}": report.probabilities[coincidence],
                f"p_{both_a}": report.probabilities[both_a],
                f"p_{both_b}": report.probabilities[both_b],
                "fidelity": report.fidelity_to_exact,
                "depth": report.metrics["depth"],
                "cx_count": report.metrics["cx"],
            }
        )
    return rows


def sweep_theta(
    config: ExperimentConfig,
    theta_grid: Sequence[float],
    use_circuit: bool = False,
) -> list[dict]:
    """Coincidence probability across splitter angles.

    Uses the exact dense oracle unless ``use_circuit`` requests the
    Trotterized circuit path.
    """
    if len(theta_grid) == 0:
        raise ValueError("theta_grid must be non-empty")
    coincidence = _single_photon_label(FockEncoding(config.qubits_per_mode))
    rows = []
    for theta in theta_grid:
        row_config = ExperimentConfig(
            **{**asdict(config), "theta": float(theta), "exact": not use_circuit}
        )
        report = run_hom(row_config)
        rows.append(
            {
                "theta": float(theta),
                f"p_{coincidence}": report.probabilities[coincidence],
            }
        )
    return rows


def circuit_report(config: ExperimentConfig) -> dict:
    """Side-by-side metrics and QASM for the full and reduced circuits."""
    config.validate()
    if config.exact:
        raise ValueError("circuit report requires the circuit path")
    if config.qubits_per_mode != 2:
        raise ValueError("reduced comparison exists only for 2 qubits per mode")
    encoding = FockEncoding(config.qubits_per_mode)
    full = circ.synthesize(interaction(encoding), config.theta, config.trotter_steps)
    reduced = circ.synthesize(
        reduced_interaction(), config.theta, config.trotter_steps
    )
    return {
        "config": asdict(config),
        "full": {
            "metrics": _report_metrics(full),
            "qasm": circ.export_qasm(full),
        },
        "reduced": {
            "metrics": _report_metrics(reduced),
            "qasm": circ.export_qasm(reduced),
        },
    }


def theta_grid(points: int, stop: float = math.pi / 2) -> list[float]:
    """Evenly spaced splitter angles over [0, stop]."""
    return [float(t) for t in np.linspace(0.0, stop, points)]
