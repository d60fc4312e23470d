"""Quantum Fourier transform builder and its DFT-matrix oracle."""
from __future__ import annotations

import numpy as np

from .ir import Block, Circuit, CircuitError, Gate, GateKind, extend, new_circuit, primary_input

#: Under the little-endian basis convention the H + controlled-phase ladder
#: needs a terminal qubit reversal (swaps as 3 CNOTs) for its unitary to equal
#: dft_matrix. Determined numerically once (exact for n = 1..4) and frozen.
QFT_NEEDS_REVERSAL = True


def dft_matrix(n_qubits: int) -> np.ndarray:
    """DFT matrix: entry (x, y) = exp(2*pi*j*x*y/N)/sqrt(N), N = 2^n."""
    if not 1 <= n_qubits <= 10:
        raise CircuitError("dft_matrix supports 1..10 qubits")
    dim = 1 << n_qubits
    grid = np.arange(dim)
    return np.exp(2j * np.pi * np.outer(grid, grid) / dim) / np.sqrt(dim)


def build_qft(n_qubits: int) -> Circuit:
    """H + ControlledPhase(k) ladder, MSB down, plus the reversal swaps.

    For n=2 this is exactly the published sequence: H on the second qubit,
    controlled-S (ControlledPhase(1)), H on the first, then the qubit-order
    correction. Circuits with n >= 3 contain ControlledPhase(k >= 2) and are
    deliberately not lowerable to exact Clifford+T.
    """
    if n_qubits < 1:
        raise CircuitError("n must be positive")
    circuit = new_circuit(
        n_qubits,
        {"q": tuple(range(n_qubits))},
        {q: primary_input("q", q) for q in range(n_qubits)},
    )
    for j in range(n_qubits - 1, -1, -1):
        extend(circuit, [Gate(GateKind.H, (j,))])
        for k in range(j - 1, -1, -1):
            extend(circuit, [Gate(GateKind.CPHASE, (k, j), k=j - k)])
    if QFT_NEEDS_REVERSAL:
        for i in range(n_qubits // 2):
            j = n_qubits - 1 - i
            swap = Block(
                "SWAP",
                (
                    Gate(GateKind.CNOT, (i, j)),
                    Gate(GateKind.CNOT, (j, i)),
                    Gate(GateKind.CNOT, (i, j)),
                ),
            )
            extend(circuit, [swap])
    return circuit
