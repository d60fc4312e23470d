"""Interchange and CLI tests: QASM emit/parse, role sidecars, PGM I/O, and
every CLI subcommand including failure exit codes."""
import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ctkit.arithmetic import build_adder
from ctkit.cli import run_cli
from ctkit.metrics import classify_outputs
from ctkit.ir import Gate, GateKind, extend, new_circuit, primary_input
from ctkit.pgm import PgmError, read_pgm, write_pgm
from ctkit.qasm import (
    QasmError,
    emit_qasm,
    parse_qasm,
    parse_roles_sidecar,
    roles_sidecar,
    structurally_equal,
)
from ctkit.qft import build_qft
from ctkit.sim import unitary_of


def bare(n):
    qs = tuple(range(n))
    return new_circuit(n, {"q": qs}, {q: primary_input("q", q) for q in qs})


# -- QASM ---------------------------------------------------------------------


def test_emit_contains_header_and_gates():
    text = emit_qasm(build_qft(2))
    lines = text.splitlines()
    assert lines[0] == "OPENQASM 2.0;"
    assert lines[1] == 'include "qelib1.inc";'
    assert "cu1(pi/2) q[0],q[1];" in lines


def test_emit_is_deterministic():
    assert emit_qasm(build_adder(3)) == emit_qasm(build_adder(3))


_KINDS = st.sampled_from(
    [GateKind.H, GateKind.T, GateKind.TDG, GateKind.S, GateKind.SDG, GateKind.X]
)


@given(st.lists(st.tuples(_KINDS, st.integers(0, 4)), min_size=1, max_size=30))
@settings(max_examples=40, deadline=None)
def test_round_trip_random_single_qubit_circuits(ops):
    circuit = bare(5)
    extend(circuit, [Gate(kind, (q,)) for kind, q in ops])
    assert structurally_equal(circuit, parse_qasm(emit_qasm(circuit)))


def test_round_trip_preserves_unitary():
    circuit = build_qft(3)
    back = parse_qasm(emit_qasm(circuit))
    u, v = unitary_of(circuit), unitary_of(back)
    # round-trip relabels wires contiguously; qft uses one register so the
    # layout is unchanged and the unitaries must agree exactly
    assert np.abs(u - v).max() < 1e-12


def test_parse_reports_line_numbers():
    text = 'OPENQASM 2.0;\nqreg q[2];\nfrobnicate q[0];\n'
    with pytest.raises(QasmError, match="line 3"):
        parse_qasm(text)


def test_parse_rejects_bad_operand_and_register():
    with pytest.raises(QasmError):
        parse_qasm("qreg q[1];\nx r[0];\n")
    with pytest.raises(QasmError):
        parse_qasm("qreg q[1];\nx q[4];\n")
    with pytest.raises(QasmError):
        parse_qasm("x q[0];\n")


def test_parse_rejects_non_power_of_two_cu1():
    with pytest.raises(QasmError):
        parse_qasm("qreg q[2];\ncu1(pi/3) q[0],q[1];\n")


def test_roles_sidecar_round_trip():
    # the sidecar renumbers qubits into the emitted contiguous layout, so a
    # parse of (emitted qasm, sidecar) carries full role information
    circuit = build_adder(2)
    parsed = parse_qasm(emit_qasm(circuit))
    inputs, outputs = parse_roles_sidecar(roles_sidecar(circuit))
    parsed.input_roles.update(inputs)
    parsed.declared_outputs = outputs
    kinds = sorted(r.kind.name for r in circuit.input_roles.values())
    assert sorted(r.kind.name for r in parsed.input_roles.values()) == kinds
    assert len(parsed.declared_outputs) == len(circuit.declared_outputs)
    _, garbage = classify_outputs(parsed)
    assert garbage == 0


def test_structural_equality_detects_difference():
    a = extend(bare(2), [Gate(GateKind.CNOT, (0, 1))])
    b = extend(bare(2), [Gate(GateKind.CNOT, (1, 0))])
    assert not structurally_equal(a, b)


# -- PGM ----------------------------------------------------------------------


def test_pgm_round_trip_with_comments():
    text = "P2\n# a comment\n3 2 # inline\n9\n1 2 3\n4 5 6\n"
    grid = read_pgm(text)
    assert grid.shape == (2, 3) and grid[1, 2] == 6
    again = read_pgm(write_pgm(grid, 9))
    assert np.array_equal(grid, again)


def test_pgm_rejects_malformed_input():
    with pytest.raises(PgmError):
        read_pgm("P5\n2 2\n255\n0 0 0 0\n")
    with pytest.raises(PgmError):
        read_pgm("P2\n2 2\n255\n0 0 0\n")
    with pytest.raises(PgmError):
        read_pgm("P2\n1 1\n8\n9\n")


# -- CLI ----------------------------------------------------------------------


def test_cli_build_writes_files(tmp_path):
    out = tmp_path / "adder.qasm"
    code, text = run_cli(["build", "adder", "--n", "2", "--out", str(out)])
    assert code == 0 and text == ""
    assert out.exists() and out.with_suffix(".qasm.roles.json").exists()
    circuit = parse_qasm(out.read_text())
    assert circuit.n_qubits == 6


def test_cli_build_requires_n():
    code, _ = run_cli(["build", "adder"])
    assert code == 2


def test_cli_metrics_on_file_with_sidecar(tmp_path):
    out = tmp_path / "sub.qasm"
    assert run_cli(["build", "subtractor", "--n", "3", "--out", str(out)])[0] == 0
    code, text = run_cli(["metrics", str(out), "--format", "json"])
    assert code == 0
    payload = json.loads(text)
    assert payload["garbage_count"] == 0
    assert payload["family"] == "sub.qasm"


def test_cli_metrics_without_sidecar_reports_undetermined(tmp_path):
    path = tmp_path / "loose.qasm"
    path.write_text("OPENQASM 2.0;\nqreg q[2];\ncx q[0],q[1];\n")
    code, text = run_cli(["metrics", str(path)])
    assert code == 0
    assert json.loads(text)["garbage_count"] == "undetermined"


def test_cli_metrics_table_format():
    code, text = run_cli(["metrics", "adder", "--n", "2", "--format", "table"])
    assert code == 0
    assert "t_count" in text and "{" not in text


def test_cli_metrics_epsilon_verdict():
    code, text = run_cli(
        ["metrics", "adder", "--n", "2", "--epsilon", "0.01"]
    )
    assert code == 0
    payload = json.loads(text)
    assert payload["verdict"] in ("deliverable", "needs-QEC")


def test_cli_metrics_qft_approximability_error():
    code, _ = run_cli(["metrics", "qft", "--n", "3"])
    assert code == 1


def test_cli_simulate_classical_bits(tmp_path):
    # via a file the registers are contiguous: A[0:2] B[2:4] anc[4:6]
    out = tmp_path / "adder.qasm"
    assert run_cli(["build", "adder", "--n", "2", "--out", str(out)])[0] == 0
    code, text = run_cli(["simulate", str(out), "--input", "010100"])
    assert code == 0 and text == "010001\n"  # 2 + 2 = 4, carry-out set


def test_cli_simulate_input_validation():
    code, _ = run_cli(["simulate", "adder", "--n", "2", "--input", "01"])
    assert code == 2
    code, _ = run_cli(["simulate", "adder", "--n", "2"])
    assert code == 2


def test_cli_simulate_statevector_distribution():
    code, text = run_cli(["simulate", "qft", "--n", "2", "--input", "00"])
    assert code == 0
    dist = json.loads(text)["distribution"]
    assert dist == {"00": 0.25, "01": 0.25, "10": 0.25, "11": 0.25}


def test_cli_verify_pass_and_fail_exit_codes():
    assert run_cli(["verify", "adder", "--n", "2"])[0] == 0
    assert run_cli(["verify", "nonsense", "--n", "2"])[0] == 2


def test_cli_lower_expands_toffoli():
    code, text = run_cli(["lower", "multiplier", "--n", "1"])
    assert code == 0
    assert "ccx" not in text and "t " in text


def test_cli_rotate_round_trip(tmp_path):
    grid = np.arange(16).reshape(4, 4)
    src = tmp_path / "in.pgm"
    dst = tmp_path / "out.pgm"
    src.write_text(write_pgm(grid, 15))
    code, _ = run_cli(
        ["rotate", "--size", "4", "--theta", "30", "--frac", "4",
         "--in", str(src), "--out", str(dst)]
    )
    assert code == 0
    rotated = read_pgm(dst.read_text())
    assert sorted(rotated.ravel().tolist()) == list(range(16))


def test_cli_rotate_size_mismatch(tmp_path):
    src = tmp_path / "in.pgm"
    src.write_text(write_pgm(np.zeros((4, 4), dtype=int), 1))
    code, _ = run_cli(
        ["rotate", "--size", "8", "--theta", "10", "--frac", "4",
         "--in", str(src), "--out", str(tmp_path / "o.pgm")]
    )
    assert code == 2


def test_cli_missing_file_is_usage_error():
    assert run_cli(["metrics", "/no/such/file.qasm"])[0] == 2
