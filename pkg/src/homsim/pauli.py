"""Exact algebra over complex-weighted sums of Pauli strings.

A Pauli string is written left-to-right, qubit 0 first ("XZIY" puts X on
qubit 0). Products track phases exactly in the 4-element group {1, i, -1, -i},
so long chains of multiplications never accumulate floating-point phase error.
Dense matrices (qubit 0 = most significant bit) serve as the verification
oracle for every other module.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable

import numpy as np

AXES = "IXYZ"

# Coefficients below this magnitude are dropped during simplification.
DROP_TOL = 1e-12

# Dense path cap: 2^12 x 2^12 is the largest matrix we ever materialize.
MAX_DENSE_QUBITS = 12

_SINGLE = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

# (a, b) -> (power of i, resulting axis) for single-qubit products a*b.
_MUL: dict[tuple[str, str], tuple[int, str]] = {}
for _a in AXES:
    _MUL[("I", _a)] = (0, _a)
    _MUL[(_a, "I")] = (0, _a)
    _MUL[(_a, _a)] = (0, "I")
_MUL[("X", "Y")] = (1, "Z")
_MUL[("Y", "X")] = (3, "Z")
_MUL[("Y", "Z")] = (1, "X")
_MUL[("Z", "Y")] = (3, "X")
_MUL[("Z", "X")] = (1, "Y")
_MUL[("X", "Z")] = (3, "Y")

_PHASE = (1, 1j, -1, -1j)


@dataclass(frozen=True)
class PauliTerm:
    """One weighted Pauli string: ``coeff * axes[0] (x) axes[1] (x) ...``."""

    coeff: complex
    axes: str

    def __post_init__(self):
        if any(a not in AXES for a in self.axes):
            raise ValueError(f"invalid Pauli axes string {self.axes!r}")

    @property
    def width(self) -> int:
        return len(self.axes)

    def __mul__(self, other: "PauliTerm") -> "PauliTerm":
        if self.width != other.width:
            raise ValueError(
                f"width mismatch: {self.width} vs {other.width}"
            )
        phase_pow = 0
        axes = []
        for a, b in zip(self.axes, other.axes):
            p, c = _MUL[(a, b)]
            phase_pow = (phase_pow + p) % 4
            axes.append(c)
        return PauliTerm(self.coeff * other.coeff * _PHASE[phase_pow], "".join(axes))

    def to_matrix(self) -> np.ndarray:
        _check_dense_width(self.width)
        mats = [_SINGLE[a] for a in self.axes]
        return self.coeff * reduce(np.kron, mats, np.eye(1, dtype=complex))


class PauliOp:
    """Sum of Pauli terms over a fixed register width.

    Simplified on construction: like strings collected, negligible terms
    dropped, remaining terms in lexicographic order of their axes strings.
    """

    __slots__ = ("width", "terms")

    def __init__(self, terms: Iterable[PauliTerm], width: int | None = None):
        terms = list(terms)
        if width is None:
            if not terms:
                raise ValueError("width required for an empty operator")
            width = terms[0].width
        for t in terms:
            if t.width != width:
                raise ValueError(
                    f"width mismatch: term {t.axes!r} in width-{width} operator"
                )
        acc: dict[str, complex] = {}
        for t in terms:
            acc[t.axes] = acc.get(t.axes, 0) + t.coeff
        self.width = width
        self.terms = tuple(
            PauliTerm(c, axes)
            for axes, c in sorted(acc.items())
            if abs(c) > DROP_TOL
        )

    @classmethod
    def from_label(cls, axes: str, coeff: complex = 1.0) -> "PauliOp":
        return cls([PauliTerm(coeff, axes)])

    @classmethod
    def zero(cls, width: int) -> "PauliOp":
        return cls([], width=width)

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "PauliOp") -> "PauliOp":
        if self.width != other.width:
            raise ValueError(f"width mismatch: {self.width} vs {other.width}")
        return PauliOp(self.terms + other.terms, width=self.width)

    def __sub__(self, other: "PauliOp") -> "PauliOp":
        return self + other.scale(-1)

    def scale(self, c: complex) -> "PauliOp":
        return PauliOp(
            [PauliTerm(t.coeff * c, t.axes) for t in self.terms], width=self.width
        )

    def __mul__(self, other: "PauliOp") -> "PauliOp":
        if self.width != other.width:
            raise ValueError(f"width mismatch: {self.width} vs {other.width}")
        return PauliOp(
            [a * b for a in self.terms for b in other.terms], width=self.width
        )

    def tensor(self, other: "PauliOp") -> "PauliOp":
        return PauliOp(
            [
                PauliTerm(a.coeff * b.coeff, a.axes + b.axes)
                for a in self.terms
                for b in other.terms
            ],
            width=self.width + other.width,
        )

    def adjoint(self) -> "PauliOp":
        # Pauli strings are self-adjoint; only coefficients conjugate.
        return PauliOp(
            [PauliTerm(t.coeff.conjugate(), t.axes) for t in self.terms],
            width=self.width,
        )

    def is_hermitian(self) -> bool:
        return len(self - self.adjoint()) == 0

    def to_matrix(self) -> np.ndarray:
        _check_dense_width(self.width)
        dim = 2 ** self.width
        out = np.zeros((dim, dim), dtype=complex)
        for t in self.terms:
            out += t.to_matrix()
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, PauliOp):
            return NotImplemented
        return self.width == other.width and self.terms == other.terms

    def __hash__(self):
        return hash((self.width, self.terms))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(_fmt_coeff(t.coeff) + "·" + t.axes for t in self.terms)

    def __repr__(self) -> str:
        return f"PauliOp({self})"


def _fmt_coeff(c: complex) -> str:
    if abs(c.imag) <= DROP_TOL:
        return f"{c.real:.12g}"
    if abs(c.real) <= DROP_TOL:
        return f"{c.imag:.12g}j"
    return f"({c.real:.12g}{c.imag:+.12g}j)"


def _check_dense_width(width: int) -> None:
    if width > MAX_DENSE_QUBITS:
        raise ValueError(
            f"dense realization capped at {MAX_DENSE_QUBITS} qubits, got {width}"
        )
