"""Reversible bitvector simulation for {X, CNOT, Toffoli, Fredkin} circuits."""
from __future__ import annotations

from typing import Sequence

import numpy as np

from ..ir import Block, Circuit, Gate, GateKind, Item


class ClassicalSimError(ValueError):
    """A non-classical gate appeared; use the statevector simulator."""


def is_classical(circuit: Circuit) -> bool:
    """True when the classical simulator can run the circuit.

    Blocks carrying a `classical_equiv` gate count as classical regardless of
    their (possibly Clifford+T) expansion.
    """

    def walk(items: Sequence[Item]) -> bool:
        for item in items:
            if isinstance(item, Gate):
                if item.kind not in _CLASSICAL:
                    return False
            elif item.classical_equiv is None and not walk(item.children):
                return False
        return True

    return walk(circuit.body)


_CLASSICAL = {GateKind.X, GateKind.CNOT, GateKind.TOFFOLI, GateKind.FREDKIN}


def _apply_gate(gate: Gate, bits: list) -> None:
    q = gate.qubits
    if gate.kind is GateKind.X:
        bits[q[0]] ^= 1
    elif gate.kind is GateKind.CNOT:
        bits[q[1]] ^= bits[q[0]]
    elif gate.kind is GateKind.TOFFOLI:
        bits[q[2]] ^= bits[q[0]] & bits[q[1]]
    elif gate.kind is GateKind.FREDKIN:
        c, a, b = q
        diff = (bits[a] ^ bits[b]) & bits[c]
        bits[a] ^= diff
        bits[b] ^= diff
    else:
        raise ClassicalSimError(f"{gate.kind.name} requires statevector simulation")


def _apply_body(items: Sequence[Item], bits: list) -> None:
    for item in items:
        if isinstance(item, Gate):
            _apply_gate(item, bits)
        elif item.classical_equiv is not None:
            _apply_gate(item.classical_equiv, bits)
        else:
            _apply_body(item.children, bits)


def run_classical(circuit: Circuit, bits: Sequence[int]) -> tuple[int, ...]:
    """Apply gate truth tables in order; returns the output bit tuple."""
    if len(bits) != circuit.n_qubits:
        raise ClassicalSimError(
            f"input has {len(bits)} bits, circuit has {circuit.n_qubits} qubits"
        )
    state = [int(b) & 1 for b in bits]
    _apply_body(circuit.body, state)
    return tuple(state)


def run_classical_sweep(circuit: Circuit, columns: np.ndarray) -> np.ndarray:
    """Vectorized run over many inputs at once.

    `columns` has shape (n_qubits, n_inputs) with uint8 entries; each column
    of the transpose is one basis input. Returns an array of the same shape
    with the outputs. The Fredkin branch works because ^ and & operate
    elementwise on the per-qubit rows.
    """
    state = [columns[q].copy() for q in range(circuit.n_qubits)]
    _apply_body(circuit.body, state)
    return np.array(state, dtype=np.uint8)


def bits_to_int(bits: Sequence[int]) -> int:
    """Little-endian bits to integer (bit i is qubit i)."""
    return sum(int(b) << i for i, b in enumerate(bits))


def int_to_bits(value: int, width: int) -> tuple[int, ...]:
    return tuple((value >> i) & 1 for i in range(width))
