"""Two-mode beam-splitter interaction and its exact unitary.

The register holds two modes with the same encoding: mode B on qubits
0..N_q-1 (left half of every state label), mode A on qubits N_q..2N_q-1.
The interaction Hamiltonian is b†a + ba†; its exact unitary exp(+iθH) is
the dense oracle every circuit is checked against. A hand-reduced variant
for the two-photon interference setup drops the hops through photon
number 3 and the vacuum<->vacuum-adjacent transitions that the |1,1>
initial state never reaches.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gray import FockEncoding, annihilation_op, creation_op, ladder, projector
from .pauli import MAX_DENSE_QUBITS, PauliOp


@dataclass(frozen=True)
class Interaction:
    """Hermitian two-mode hopping Hamiltonian over 2*N_q qubits."""

    op: PauliOp
    encoding: FockEncoding
    reduced: bool


def interaction(encoding: FockEncoding) -> Interaction:
    """Full beam-splitter Hamiltonian b†a + ba†, both modes identically encoded."""
    b_dag = creation_op(encoding)
    b = annihilation_op(encoding)
    op = b_dag.tensor(b) + b.tensor(b_dag)
    return Interaction(op=op, encoding=encoding, reduced=False)


def reduced_interaction() -> Interaction:
    """Pruned Hamiltonian keeping only the hops the |1,1> input ever explores.

    Derived by hand for the 2-qubits-per-mode encoding only: the dynamics
    from one photon per mode stay inside {|0>, |1>, |2>} of each mode.
    """
    encoding = FockEncoding(2)
    p0, p1 = projector(0), projector(1)
    q0, q1 = ladder(0), ladder(1)

    def prod4(a, b, c, d):
        return a.tensor(b).tensor(c).tensor(d)

    t1 = prod4(p0, q1, q0, p1)  # B: 0->1, A: 2->1
    t2 = prod4(q1, p1, p0, q0)  # B: 1->2, A: 1->0
    op = (t1 + t1.adjoint() + t2 + t2.adjoint()).scale(math.sqrt(2))
    return Interaction(op=op, encoding=encoding, reduced=True)


def exact_unitary(theta: float, inter: Interaction) -> np.ndarray:
    """exp(+iθH) via Hermitian eigendecomposition; unitary to 1e-12."""
    if not math.isfinite(theta):
        raise ValueError("theta must be finite")
    if inter.op.width > MAX_DENSE_QUBITS:
        raise ValueError("register too wide for the dense path")
    if not inter.op.is_hermitian():
        raise ValueError("interaction must be Hermitian")
    h = inter.op.to_matrix()
    w, v = np.linalg.eigh(h)
    return (v * np.exp(1j * theta * w)) @ v.conj().T
