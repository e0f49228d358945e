import math

import numpy as np
import pytest

from conftest import pauli_exp, phase_fidelity
from homsim.beamsplitter import Interaction, interaction, reduced_interaction
from homsim.circuit import (
    Circuit,
    Gate,
    InternalError,
    export_qasm,
    metrics,
    rotation_circuit,
    synthesize,
    trotter_sequence,
)
from homsim.gray import FockEncoding
from homsim.pauli import PauliOp, PauliTerm
from homsim.statevector import circuit_unitary

ENC = FockEncoding(2)


class TestGateValidation:
    def test_cnot_needs_distinct_control(self):
        with pytest.raises(ValueError):
            Gate("CNOT", target=1, control=1)

    def test_rotation_needs_angle(self):
        with pytest.raises(ValueError):
            Gate("RX", target=0)

    def test_gate_outside_register(self):
        with pytest.raises(ValueError):
            Circuit(2, (Gate("X", 2),))


class TestTrotterSequence:
    def test_single_term(self):
        h = Interaction(
            op=PauliOp.from_label("XX", 0.7), encoding=ENC, reduced=False
        )
        seq = trotter_sequence(h, theta=0.5, steps=1)
        assert seq == [(PauliTerm(0.7 + 0j, "XX"), 0.5 * 0.7)]

    def test_entry_count_scales_with_steps(self):
        inter = interaction(ENC)
        k = len(trotter_sequence(inter, 1.0, 1))
        assert len(trotter_sequence(inter, 1.0, 5)) == 5 * k

    def test_identity_terms_skipped(self):
        h = Interaction(
            op=PauliOp.from_label("II", 2.0) + PauliOp.from_label("ZZ", 1.0),
            encoding=ENC,
            reduced=False,
        )
        seq = trotter_sequence(h, 1.0, 1)
        assert [t.axes for t, _ in seq] == ["ZZ"]

    def test_non_hermitian_rejected(self):
        h = Interaction(op=PauliOp.from_label("XY", 1j), encoding=ENC, reduced=False)
        with pytest.raises(ValueError):
            trotter_sequence(h, 1.0, 1)

    def test_per_term_exponentials_converge(self):
        inter = interaction(ENC)
        theta = math.pi / 4
        from homsim.beamsplitter import exact_unitary

        exact = exact_unitary(theta, inter)
        errors = {}
        for steps in (4, 8):
            u = np.eye(16, dtype=complex)
            for term, angle in trotter_sequence(inter, theta, steps):
                u = pauli_exp(term.axes, -angle) @ u
            errors[steps] = np.max(np.abs(u - exact))
        assert 0.3 < errors[8] / errors[4] < 0.7


class TestRotationCircuit:
    def test_single_x_is_one_rx(self):
        c = rotation_circuit("X", 0.3)
        assert c.gates == (Gate("RX", 0, angle=0.6),)

    def test_xy_structure(self):
        c = rotation_circuit("XY", 0.25)
        assert c.gates == (
            Gate("H", 0),
            Gate("RX", 1, angle=math.pi / 2),
            Gate("CNOT", target=1, control=0),
            Gate("RZ", 1, angle=0.5),
            Gate("CNOT", target=1, control=0),
            Gate("RX", 1, angle=-math.pi / 2),
            Gate("H", 0),
        )

    def test_identity_qubits_skipped_in_ladder(self):
        c = rotation_circuit("XIZY", 0.1)
        cnots = [(g.control, g.target) for g in c.gates if g.kind == "CNOT"]
        assert cnots == [(0, 2), (2, 3), (2, 3), (0, 2)]
        assert not any(1 in g.qubits for g in c.gates)

    def test_all_identity_rejected(self):
        with pytest.raises(ValueError):
            rotation_circuit("III", 0.1)

    def test_random_strings_match_exponential_oracle(self, rng):
        for _ in range(50):
            width = rng.integers(1, 5)
            axes = "".join(rng.choice(list("IXYZ"), size=width))
            if set(axes) == {"I"}:
                continue
            alpha = rng.uniform(-math.pi, math.pi)
            u = circuit_unitary(rotation_circuit(axes, alpha))
            assert phase_fidelity(u, pauli_exp(axes, alpha)) >= 1 - 1e-10


class TestSynthesize:
    def test_theta_zero_gives_identity(self):
        u = circuit_unitary(synthesize(interaction(ENC), 0.0, 1))
        assert phase_fidelity(u, np.eye(16)) >= 1 - 1e-10

    def test_single_step_matches_per_term_product(self):
        theta = math.pi / 4
        inter = interaction(ENC)
        u_circ = circuit_unitary(synthesize(inter, theta, 1))
        u_ref = np.eye(16, dtype=complex)
        for term, angle in trotter_sequence(inter, theta, 1):
            u_ref = pauli_exp(term.axes, -angle) @ u_ref
        assert phase_fidelity(u_circ, u_ref) >= 1 - 1e-10

    def test_fidelity_monotone_on_doubling_ladder(self):
        from homsim.beamsplitter import exact_unitary

        theta = math.pi / 4
        inter = interaction(ENC)
        exact = exact_unitary(theta, inter)
        fids = [
            phase_fidelity(circuit_unitary(synthesize(inter, theta, n)), exact)
            for n in (1, 2, 4, 8, 16)
        ]
        assert fids == sorted(fids)

    def test_deterministic(self):
        a = synthesize(interaction(ENC), 0.7, 3)
        b = synthesize(interaction(ENC), 0.7, 3)
        assert a == b


class TestMetrics:
    def test_single_gate(self):
        m = metrics(Circuit(1, (Gate("X", 0),)))
        assert m["depth"] == 1 and m["cx_count"] == 0

    def test_xy_rotation_has_two_cnots(self):
        assert metrics(rotation_circuit("XY", 0.3))["cx_count"] == 2

    def test_depth_lower_bound(self):
        c = synthesize(interaction(ENC), math.pi / 4, 1)
        m = metrics(c)
        assert m["depth"] >= math.ceil(m["total_gates"] / c.n_qubits)

    def test_full_hom_circuit_scale(self):
        m = metrics(synthesize(interaction(ENC), math.pi / 4, 1))
        assert 32 <= m["cx_count"] <= 512
        assert 60 <= m["depth"] <= 400

    def test_reduced_smaller_than_full(self):
        full = metrics(synthesize(interaction(ENC), math.pi / 4, 1))
        red = metrics(synthesize(reduced_interaction(), math.pi / 4, 1))
        assert red["cx_count"] < full["cx_count"]


class TestQasmExport:
    def test_single_x(self):
        text = export_qasm(Circuit(1, (Gate("X", 0),)))
        assert text.count("x q[0];") == 1

    def test_empty_circuit_is_header_only(self):
        text = export_qasm(Circuit(3, ()))
        assert text == 'OPENQASM 2.0;\ninclude "qelib1.inc";\nqreg q[3];\n'

    def test_line_count_matches_gate_count(self):
        c = synthesize(interaction(ENC), math.pi / 4, 1)
        text = export_qasm(c)
        assert len(text.splitlines()) == len(c.gates) + 3

    def test_byte_identical_across_runs(self):
        a = export_qasm(synthesize(interaction(ENC), 0.37, 2))
        b = export_qasm(synthesize(interaction(ENC), 0.37, 2))
        assert a == b

    def test_angle_formatting(self):
        text = export_qasm(Circuit(1, (Gate("RZ", 0, angle=math.pi),)))
        assert "rz(3.14159265358979) q[0];" in text
