"""Lowering to Clifford+T and Bennett garbage removal.

Toffoli and Fredkin gates are replaced by canonical Clifford+T networks;
ControlledPhase(k) with k >= 2 is rejected because such phases admit only
approximate Clifford+T synthesis. `bennett_wrap` applies the
compute / copy / uncompute pattern that removes garbage outputs.
"""
from __future__ import annotations

from typing import Sequence

from .ir import (
    ANCILLA_ZERO,
    Block,
    Circuit,
    CircuitError,
    Gate,
    GateKind,
    Item,
    QubitRole,
    RoleKind,
    declared_output,
    _invert_item,
)


class LoweringError(ValueError):
    pass


# Canonical 16-gate Clifford+T Toffoli network, operand slots (0=control1,
# 1=control2, 2=target). T-count 7, CNOT-count 7; arranged so that ASAP
# layering measures T-depth 3 and CNOT-depth 7 (the T gates fall into exactly
# three dependency layers). Verified against the 8x8 Toffoli permutation.
_TOFFOLI_NET: tuple[tuple[GateKind, tuple[int, ...]], ...] = (
    (GateKind.H, (2,)),
    (GateKind.T, (2,)),
    (GateKind.CNOT, (0, 1)),
    (GateKind.T, (0,)),
    (GateKind.TDG, (1,)),
    (GateKind.CNOT, (2, 0)),
    (GateKind.CNOT, (0, 1)),
    (GateKind.TDG, (0,)),
    (GateKind.TDG, (1,)),
    (GateKind.CNOT, (2, 1)),
    (GateKind.CNOT, (1, 0)),
    (GateKind.T, (1,)),
    (GateKind.T, (0,)),
    (GateKind.CNOT, (2, 0)),
    (GateKind.CNOT, (1, 0)),
    (GateKind.H, (2,)),
)


def toffoli_cliffordT(c1: int, c2: int, t: int) -> Block:
    """Clifford+T Toffoli block on (control1, control2, target)."""
    wires = (c1, c2, t)
    if len(set(wires)) != 3:
        raise CircuitError(f"duplicate operands in Toffoli({wires})")
    gates = tuple(
        Gate(kind, tuple(wires[slot] for slot in slots)) for kind, slots in _TOFFOLI_NET
    )
    return Block("toffoli", gates, classical_equiv=Gate(GateKind.TOFFOLI, wires))


def fredkin_cliffordT(c: int, t1: int, t2: int) -> Block:
    """Clifford+T Fredkin block: a Toffoli conjugated by CNOT(t2->t1)."""
    wires = (c, t1, t2)
    if len(set(wires)) != 3:
        raise CircuitError(f"duplicate operands in Fredkin({wires})")
    bridge = Gate(GateKind.CNOT, (t2, t1))
    return Block(
        "fredkin",
        (bridge, toffoli_cliffordT(c, t1, t2), bridge),
        classical_equiv=Gate(GateKind.FREDKIN, wires),
    )


def _lower_item(item: Item) -> Item:
    if isinstance(item, Block):
        return Block(
            item.name,
            tuple(_lower_item(c) for c in item.children),
            classical_equiv=item.classical_equiv,
        )
    if item.kind is GateKind.TOFFOLI:
        return toffoli_cliffordT(*item.qubits)
    if item.kind is GateKind.FREDKIN:
        return fredkin_cliffordT(*item.qubits)
    if item.kind is GateKind.CPHASE and item.k >= 2:
        raise LoweringError(
            f"ControlledPhase(k={item.k}) is not exactly Clifford+T synthesizable; "
            "phases e^(i*pi/2^k) with k >= 2 admit only approximate synthesis"
        )
    return item


def lower(circuit: Circuit) -> Circuit:
    """Replace every Toffoli/Fredkin by its Clifford+T block.

    Hierarchy is preserved; H/T/Tdg/S/Sdg/X/CNOT and ControlledPhase(1)
    (exactly a controlled-S) pass through unchanged.
    """
    return Circuit(
        circuit.n_qubits,
        dict(circuit.registers),
        [_lower_item(item) for item in circuit.body],
        dict(circuit.input_roles),
        dict(circuit.declared_outputs),
    )


def bennett_wrap(circuit: Circuit, result_qubits: Sequence[int]) -> Circuit:
    """Compute-copy-uncompute wrapper removing garbage outputs.

    Step 1 runs the circuit, Step 2 CNOT-copies each result qubit onto a
    fresh zero ancilla, Step 3 runs the inverse circuit. The fresh qubits are
    the declared outputs; every original qubit ends restored to its input.
    """
    results = list(result_qubits)
    if not results:
        raise LoweringError("bennett_wrap needs at least one result qubit")
    n = circuit.n_qubits
    for q in results:
        if not 0 <= q < n:
            raise LoweringError(f"result qubit {q} out of range")
    m = len(results)
    registers = dict(circuit.registers)
    registers["out"] = tuple(range(n, n + m))
    input_roles = dict(circuit.input_roles)
    outputs: dict[int, QubitRole] = {}
    for q in range(n):
        kind = (
            RoleKind.RESTORED_INPUT
            if circuit.input_roles[q].kind is RoleKind.PRIMARY_INPUT
            else RoleKind.RESTORED_ANCILLA
        )
        outputs[q] = QubitRole(kind)
    for i in range(m):
        input_roles[n + i] = ANCILLA_ZERO
        outputs[n + i] = declared_output("out", i)
    body: list[Item] = [Block("compute", tuple(circuit.body))]
    body.extend(Gate(GateKind.CNOT, (q, n + i)) for i, q in enumerate(results))
    body.append(
        Block("uncompute", tuple(_invert_item(it) for it in reversed(circuit.body)))
    )
    return Circuit(n + m, registers, body, input_roles, outputs)
