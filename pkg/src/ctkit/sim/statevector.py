"""Dense statevector simulation of the full gate set, plus measurement.

Basis index convention is little-endian throughout: index b encodes qubit i
as bit i of b, matching LSB-first registers.
"""
from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from ..ir import Circuit, Gate, GateKind, flatten, iter_gates
from . import kernels

QUBIT_LIMIT = 20
UNITARY_LIMIT = 12

_SQRT_HALF = 1.0 / math.sqrt(2.0)


class SimulationError(ValueError):
    pass


def basis_state(n_qubits: int, index: int = 0) -> np.ndarray:
    amp = np.zeros(1 << n_qubits, dtype=np.complex128)
    amp[index] = 1.0
    return amp


def _apply(gate: Gate, amp: np.ndarray, n: int) -> None:
    kind = gate.kind
    q = gate.qubits
    if kind is GateKind.H:
        kernels.apply_1q(amp, n, q[0], _SQRT_HALF, _SQRT_HALF, _SQRT_HALF, -_SQRT_HALF)
    elif kind is GateKind.X:
        kernels.apply_1q(amp, n, q[0], 0.0, 1.0, 1.0, 0.0)
    elif kind is GateKind.T:
        kernels.apply_phase(amp, n, q[0], np.exp(0.25j * np.pi))
    elif kind is GateKind.TDG:
        kernels.apply_phase(amp, n, q[0], np.exp(-0.25j * np.pi))
    elif kind is GateKind.S:
        kernels.apply_phase(amp, n, q[0], 1.0j)
    elif kind is GateKind.SDG:
        kernels.apply_phase(amp, n, q[0], -1.0j)
    elif kind is GateKind.CNOT:
        kernels.apply_cnot(amp, n, q[0], q[1])
    elif kind is GateKind.CPHASE:
        phase = np.exp((-1.0j if gate.adjoint else 1.0j) * np.pi / (1 << gate.k))
        kernels.apply_cphase(amp, n, q[0], q[1], phase)
    elif kind is GateKind.TOFFOLI:
        kernels.apply_toffoli(amp, n, q[0], q[1], q[2])
    elif kind is GateKind.FREDKIN:
        kernels.apply_fredkin(amp, n, q[0], q[1], q[2])
    else:  # pragma: no cover
        raise SimulationError(f"unhandled gate kind {kind}")


def run_statevector(
    circuit: Circuit,
    initial: Sequence[complex] | np.ndarray,
    limit: int = QUBIT_LIMIT,
) -> np.ndarray:
    """Apply the circuit's unitary to `initial`; returns a fresh array."""
    n = circuit.n_qubits
    if n > limit:
        raise SimulationError(f"{n} qubits exceeds the statevector limit of {limit}")
    amp = np.array(initial, dtype=np.complex128)
    if amp.shape != (1 << n,):
        raise SimulationError(f"state length {amp.shape} != 2^{n}")
    for gate in iter_gates(circuit.body):
        _apply(gate, amp, n)
    return amp


def unitary_of(circuit: Circuit) -> np.ndarray:
    """Full unitary matrix, built column by column from basis inputs."""
    n = circuit.n_qubits
    if n > UNITARY_LIMIT:
        raise SimulationError(f"{n} qubits exceeds the unitary limit of {UNITARY_LIMIT}")
    dim = 1 << n
    mat = np.empty((dim, dim), dtype=np.complex128)
    flat = flatten(circuit)
    for col in range(dim):
        mat[:, col] = run_statevector(flat, basis_state(n, col))
    return mat


def measure(
    state: Sequence[complex] | np.ndarray, shots: int, seed: int
) -> tuple[np.ndarray, dict[int, int]]:
    """Born-rule readout.

    Returns the exact outcome distribution p(b) = |amplitude_b|^2 and a
    histogram of `shots` draws. Sampling is inverse-CDF over the exact
    distribution using numpy's seeded PCG64 generator, so histograms are
    deterministic across platforms for a fixed seed.
    """
    amp = np.asarray(state, dtype=np.complex128)
    probs = np.abs(amp) ** 2
    total = probs.sum()
    if abs(total - 1.0) > 1e-6:
        raise SimulationError(f"state is not normalized (sum of probs {total})")
    probs = probs / total
    if shots < 1:
        raise SimulationError("shots must be positive")
    rng = np.random.default_rng(seed)
    draws = np.searchsorted(np.cumsum(probs), rng.random(shots), side="right")
    outcomes, counts = np.unique(draws, return_counts=True)
    histogram = {int(o): int(c) for o, c in zip(outcomes, counts)}
    return probs, histogram
