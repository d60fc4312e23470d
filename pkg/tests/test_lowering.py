"""Lowering tests: Clifford+T replacement networks, pass-through rules,
rejection of approximate-only phases, and Bennett wrapping."""
import numpy as np
import pytest

from ctkit.ir import (
    Block,
    Gate,
    GateKind,
    extend,
    iter_gates,
    new_circuit,
    primary_input,
)
from ctkit.lowering import (
    LoweringError,
    bennett_wrap,
    fredkin_cliffordT,
    lower,
    toffoli_cliffordT,
)
from ctkit.metrics import classify_outputs
from ctkit.sim import run_classical, unitary_of


def bare(n):
    qs = tuple(range(n))
    return new_circuit(n, {"q": qs}, {q: primary_input("q", q) for q in qs})


def _permutation(pairs):
    mat = np.eye(8)
    for a, b in pairs:
        mat[[a, b], [a, b]] = 0.0
        mat[a, b] = mat[b, a] = 1.0
    return mat


def _up_to_phase(u, v, tol):
    pivot = np.unravel_index(np.argmax(np.abs(u)), u.shape)
    phase = v[pivot] / u[pivot]
    return np.abs(u * phase - v).max() < tol


@pytest.mark.parametrize("wires", [(0, 1, 2), (2, 0, 1), (1, 2, 0)])
def test_toffoli_network_unitary(wires):
    circuit = extend(bare(3), [toffoli_cliffordT(*wires)])
    c1, c2, t = wires
    flip = (1 << c1) | (1 << c2)
    target = _permutation([(flip, flip | (1 << t))])
    assert _up_to_phase(unitary_of(circuit), target, 1e-10)


@pytest.mark.parametrize("wires", [(0, 1, 2), (2, 1, 0)])
def test_fredkin_network_unitary(wires):
    circuit = extend(bare(3), [fredkin_cliffordT(*wires)])
    c, t1, t2 = wires
    pairs = []
    for idx in range(8):
        if idx & (1 << c) and (idx >> t1) & 1 != (idx >> t2) & 1:
            swapped = idx ^ (1 << t1) ^ (1 << t2)
            if idx < swapped:
                pairs.append((idx, swapped))
    assert _up_to_phase(unitary_of(circuit), _permutation(pairs), 1e-10)


def test_lowered_blocks_keep_classical_equiv():
    circuit = extend(bare(3), [Gate(GateKind.TOFFOLI, (0, 1, 2))])
    lowered = lower(circuit)
    assert isinstance(lowered.body[0], Block)
    assert lowered.body[0].classical_equiv.kind is GateKind.TOFFOLI
    assert run_classical(lowered, [1, 1, 0]) == (1, 1, 1)


def test_lower_passes_clifford_t_through():
    circuit = extend(
        bare(2),
        [
            Gate(GateKind.H, (0,)),
            Gate(GateKind.T, (1,)),
            Gate(GateKind.CPHASE, (0, 1), k=1),
        ],
    )
    lowered = lower(circuit)
    assert lowered.body == circuit.body


def test_lower_rejects_deep_cphase():
    circuit = extend(bare(2), [Gate(GateKind.CPHASE, (0, 1), k=2)])
    with pytest.raises(LoweringError):
        lower(circuit)


def test_lower_preserves_hierarchy():
    circuit = extend(
        bare(3),
        [Block("stage", (Gate(GateKind.TOFFOLI, (0, 1, 2)), Gate(GateKind.X, (0,))))],
    )
    lowered = lower(circuit)
    stage = lowered.body[0]
    assert stage.name == "stage"
    assert stage.children[0].name == "toffoli"
    kinds = {g.kind for g in iter_gates(lowered.body)}
    assert GateKind.TOFFOLI not in kinds


def test_bennett_wrap_copies_and_restores():
    circuit = extend(
        bare(3),
        [Gate(GateKind.TOFFOLI, (0, 1, 2)), Gate(GateKind.CNOT, (2, 0))],
    )
    wrapped = bennett_wrap(circuit, [2])
    assert wrapped.n_qubits == 4
    for a in range(2):
        for b in range(2):
            out = run_classical(wrapped, [a, b, 0, 0])
            assert out[:3] == (a, b, 0)
            assert out[3] == a & b
    roles, garbage = classify_outputs(wrapped)
    assert garbage == 0


def test_bennett_wrap_validates_result_qubits():
    circuit = extend(bare(2), [Gate(GateKind.CNOT, (0, 1))])
    with pytest.raises(LoweringError):
        bennett_wrap(circuit, [])
    with pytest.raises(LoweringError):
        bennett_wrap(circuit, [7])
