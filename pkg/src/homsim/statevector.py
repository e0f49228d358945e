"""Dense statevector execution, oracle matrix application, and seeded sampling.

Label convention everywhere: the leftmost character of a bitstring label is
qubit 0 and the highest-order bit of the amplitude index. Sampling uses
numpy's PCG64 generator; the algorithm name is surfaced in reports so
histograms are reproducible across platforms.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field

import numpy as np

from .circuit import Circuit, Gate

NORM_TOL = 1e-10
MAX_GATE_QUBITS = 24

RNG_ALGORITHM = "numpy-pcg64"


class NormDriftError(RuntimeError):
    """Statevector norm left the unit sphere beyond tolerance."""


@dataclass(frozen=True)
class StateVector:
    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.amplitudes.shape != (2 ** self.n_qubits,):
            raise ValueError("amplitude count must be 2^n_qubits")
        norm = float(np.sum(np.abs(self.amplitudes) ** 2))
        if abs(norm - 1.0) > NORM_TOL:
            raise NormDriftError(f"norm^2 = {norm} drifted beyond {NORM_TOL}")


@dataclass(frozen=True)
class Histogram:
    counts: dict[str, int] = field(default_factory=dict)
    shots: int = 0

    def __post_init__(self):
        if sum(self.counts.values()) != self.shots:
            raise ValueError("counts must sum to shots")


def init_basis(n_qubits: int, label: str) -> StateVector:
    """Unit amplitude on one computational basis state, by bitstring label."""
    if len(label) != n_qubits or any(c not in "01" for c in label):
        raise ValueError(f"malformed basis label {label!r} for {n_qubits} qubits")
    amps = np.zeros(2 ** n_qubits, dtype=complex)
    amps[int(label, 2)] = 1.0
    return StateVector(n_qubits, amps)


@functools.lru_cache(maxsize=None)
def _gate_matrix(kind: str, angle: float | None) -> np.ndarray:
    if kind == "X":
        return np.array([[0, 1], [1, 0]], dtype=complex)
    if kind == "H":
        return np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2)
    if kind == "RX":
        c, s = math.cos(angle / 2), math.sin(angle / 2)
        return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)
    if kind == "RZ":
        return np.array(
            [[np.exp(-0.5j * angle), 0], [0, np.exp(0.5j * angle)]],
            dtype=complex,
        )
    raise ValueError(f"no dense 1q matrix for {kind}")


def _apply_gate_raw(psi: np.ndarray, g: Gate, n: int) -> np.ndarray:
    psi = psi.reshape([2] * n)
    if g.kind == "CNOT":
        psi = psi.copy()
        sel1 = [slice(None)] * n
        sel1[g.control] = 1
        flipped = np.flip(psi[tuple(sel1)], axis=_axis_after(g.control, g.target))
        psi[tuple(sel1)] = flipped
    else:
        m = _gate_matrix(g.kind, g.angle)
        psi = np.moveaxis(
            np.tensordot(m, psi, axes=([1], [g.target])), 0, g.target
        )
    return np.ascontiguousarray(psi.reshape(-1))


def _axis_after(removed: int, axis: int) -> int:
    # Axis index of `axis` once the `removed` axis has been sliced away.
    return axis - 1 if axis > removed else axis


def _check_gate(g: Gate, n: int) -> None:
    if n > MAX_GATE_QUBITS:
        raise ValueError(f"gate path capped at {MAX_GATE_QUBITS} qubits")
    if any(q < 0 or q >= n for q in g.qubits):
        raise ValueError(f"gate {g} outside register of {n}")


def apply_gate(s: StateVector, g: Gate) -> StateVector:
    _check_gate(g, s.n_qubits)
    return StateVector(s.n_qubits, _apply_gate_raw(s.amplitudes, g, s.n_qubits))


def apply_circuit(s: StateVector, c: Circuit) -> StateVector:
    if c.n_qubits != s.n_qubits:
        raise ValueError("register width mismatch")
    psi = s.amplitudes
    for g in c.gates:
        _check_gate(g, c.n_qubits)
        psi = _apply_gate_raw(psi, g, c.n_qubits)
    return StateVector(s.n_qubits, psi)


def apply_dense(s: StateVector, m: np.ndarray) -> StateVector:
    """Apply a unitary matrix directly (the oracle path)."""
    dim = 2 ** s.n_qubits
    if m.shape != (dim, dim):
        raise ValueError(f"matrix shape {m.shape} does not match {dim}-dim state")
    if np.max(np.abs(m @ m.conj().T - np.eye(dim))) > NORM_TOL:
        raise ValueError("matrix is not unitary within tolerance")
    return StateVector(s.n_qubits, m @ s.amplitudes)


def circuit_unitary(c: Circuit) -> np.ndarray:
    """Dense unitary of a circuit, column by column through the gate path."""
    dim = 2 ** c.n_qubits
    out = np.zeros((dim, dim), dtype=complex)
    for j in range(dim):
        label = format(j, f"0{c.n_qubits}b")
        out[:, j] = apply_circuit(init_basis(c.n_qubits, label), c).amplitudes
    return out


def probabilities(s: StateVector) -> np.ndarray:
    return np.abs(s.amplitudes) ** 2


def sample(s: StateVector, shots: int, seed: int) -> Histogram:
    """Seeded i.i.d. measurement shots, aggregated into a label histogram."""
    if shots < 1:
        raise ValueError("shots must be >= 1")
    p = probabilities(s)
    p = p / p.sum()
    rng = np.random.default_rng(seed)
    draws = rng.multinomial(shots, p)
    counts = {
        format(i, f"0{s.n_qubits}b"): int(k)
        for i, k in enumerate(draws)
        if k > 0
    }
    return Histogram(counts=dict(sorted(counts.items())), shots=shots)


def fidelity(a: StateVector, b: StateVector) -> float:
    """|<a|b>|^2, insensitive to global phase."""
    if a.n_qubits != b.n_qubits:
        raise ValueError("register width mismatch")
    return float(abs(np.vdot(a.amplitudes, b.amplitudes)) ** 2)
