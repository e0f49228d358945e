import numpy as np
import pytest

from homsim.pauli import PauliOp


def pauli_exp(axes: str, alpha: float) -> np.ndarray:
    """Independent dense oracle for exp(-i*alpha*P) via eigendecomposition."""
    p = PauliOp.from_label(axes).to_matrix()
    w, v = np.linalg.eigh(p)
    return (v * np.exp(-1j * alpha * w)) @ v.conj().T


def phase_fidelity(u: np.ndarray, v: np.ndarray) -> float:
    """|tr(U† V)| / dim: 1 iff U and V agree up to global phase."""
    return abs(np.trace(u.conj().T @ v)) / u.shape[0]


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
