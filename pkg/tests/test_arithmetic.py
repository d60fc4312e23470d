"""Arithmetic builder tests beyond the exhaustive acceptance sweeps: block
structure, larger spot checks, and the division reference's error handling."""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ctkit.arithmetic import (
    build_adder,
    build_addsub,
    build_conditional_adder,
    build_divider,
    build_multiplier,
    build_subtractor,
    carry_block,
    nonrestoring_reference,
)
from ctkit.ir import Block, CircuitError, GateKind, iter_gates
from ctkit.sim import run_classical


def _load(circuit, **regs):
    bits = [0] * circuit.n_qubits
    for name, value in regs.items():
        for i, q in enumerate(circuit.registers[name]):
            bits[q] = (value >> i) & 1
    return bits


def _read(circuit, out, name):
    return sum(out[q] << i for i, q in enumerate(circuit.registers[name]))


def test_adder_block_structure():
    circuit = build_adder(3)
    names = [item.name for item in circuit.body if isinstance(item, Block)]
    assert names == ["MAJ"] * 3 + ["UMA"] * 3
    # carry-out CNOT sits between the MAJ ladder and the UMA ladder
    assert sum(1 for _ in iter_gates(circuit.body)) == 6 * 3 + 1


def test_carry_block_names_and_kinds():
    for kind, arity in (("MAJ", 3), ("UMA", 3), ("CMAJ", 4), ("CUMA", 4)):
        block = carry_block(kind, *range(arity))
        assert block.name == kind
    with pytest.raises(CircuitError):
        carry_block("NOPE", 0, 1, 2)


@given(st.integers(0, 127), st.integers(0, 127), st.integers(0, 1))
@settings(max_examples=50, deadline=None)
def test_adder_n7_random(a, b, c0):
    circuit = build_adder(7)
    bits = _load(circuit, A=a, B=b, anc=c0)
    out = run_classical(circuit, bits)
    total = _read(circuit, out, "B") + (out[circuit.registers["anc"][1]] << 7)
    assert total == a + b + c0
    assert _read(circuit, out, "A") == a


@given(st.integers(0, 63), st.integers(0, 63))
@settings(max_examples=50, deadline=None)
def test_subtractor_n6_random(a, b):
    circuit = build_subtractor(6)
    out = run_classical(circuit, _load(circuit, A=a, B=b))
    diff = _read(circuit, out, "B") + (out[circuit.registers["anc"][1]] << 6)
    assert diff == (b - a) % (1 << 7)


@given(st.integers(0, 31), st.integers(0, 31), st.integers(0, 1))
@settings(max_examples=50, deadline=None)
def test_addsub_n5_random(a, b, ctrl):
    circuit = build_addsub(5)
    out = run_classical(circuit, _load(circuit, A=a, B=b, Ctrl=ctrl))
    result = _read(circuit, out, "B") + (out[circuit.registers["anc"][1]] << 5)
    want = a + b if ctrl == 0 else (b - a) % (1 << 6)
    assert result == want
    assert out[circuit.registers["Ctrl"][0]] == ctrl


@given(st.integers(0, 31), st.integers(0, 31))
@settings(max_examples=30, deadline=None)
def test_multiplier_n5_random(a, b):
    circuit = build_multiplier(5)
    out = run_classical(circuit, _load(circuit, A=a, B=b))
    assert _read(circuit, out, "P") == a * b
    assert _read(circuit, out, "A") == a and _read(circuit, out, "B") == b


def test_multiplier_qubit_budget():
    for n in (1, 2, 3):
        assert build_multiplier(n).n_qubits == 4 * n + 1


def test_divider_qubit_budget_and_n5_spot_checks():
    circuit = build_divider(5)
    assert circuit.n_qubits == 3 * 5 - 1
    q_wires = [circuit.registers["A"][-1]] + list(circuit.registers["anc"])
    r_wires = list(circuit.registers["A"][:-1])
    for a, b in ((13, 3), (15, 4), (0, 7), (9, 9), (14, 1)):
        out = run_classical(circuit, _load(circuit, A=a, B=b))
        quotient = sum(out[q] << i for i, q in enumerate(q_wires))
        remainder = sum(out[q] << i for i, q in enumerate(r_wires))
        assert (quotient, remainder) == (a // b, a % b)
        assert _read(circuit, out, "B") == b


def test_nonrestoring_reference_domain_errors():
    with pytest.raises(ZeroDivisionError):
        nonrestoring_reference(3, 0, 4)
    with pytest.raises(ValueError):
        nonrestoring_reference(8, 1, 4)  # a must fit in n-1 bits
    with pytest.raises(ValueError):
        nonrestoring_reference(1, 8, 4)
    with pytest.raises(ValueError):
        nonrestoring_reference(0, 1, 1)


def test_builders_reject_nonpositive_width():
    for build in (
        build_adder,
        build_subtractor,
        build_addsub,
        build_conditional_adder,
        build_multiplier,
    ):
        with pytest.raises(CircuitError):
            build(0)
    with pytest.raises(CircuitError):
        build_divider(1)


def test_conditional_adder_is_classical_only():
    kinds = {g.kind for g in iter_gates(build_conditional_adder(3).body)}
    assert kinds <= {GateKind.X, GateKind.CNOT, GateKind.TOFFOLI}
