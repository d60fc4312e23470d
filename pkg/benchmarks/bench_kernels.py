"""Benchmark the compiled statevector kernels against the numpy fallback.

Runs the same random Clifford+T workload through both kernel modules and
prints per-backend wall time plus the speedup. Invoke directly:

    python benchmarks/bench_kernels.py [--qubits 16] [--gates 400] [--repeat 3]
"""
from __future__ import annotations

import argparse
import math
import time

import numpy as np

from ctkit.sim import kernels_py

try:
    from ctkit.sim import _kernels
except ImportError:  # pragma: no cover - source-only checkout
    _kernels = None

_SQRT_HALF = 1.0 / math.sqrt(2.0)


def make_workload(n_qubits: int, n_gates: int, seed: int = 7):
    """A reproducible gate tape: (op name, operands, extra parameter)."""
    rng = np.random.default_rng(seed)
    tape = []
    for _ in range(n_gates):
        roll = rng.random()
        if roll < 0.25:
            tape.append(("h", (int(rng.integers(n_qubits)),), None))
        elif roll < 0.45:
            phase = np.exp(1j * np.pi / 4)
            tape.append(("phase", (int(rng.integers(n_qubits)),), phase))
        elif roll < 0.75:
            c, t = (int(q) for q in rng.choice(n_qubits, size=2, replace=False))
            tape.append(("cnot", (c, t), None))
        elif roll < 0.9:
            a, b, c = (int(q) for q in rng.choice(n_qubits, size=3, replace=False))
            tape.append(("toffoli", (a, b, c), None))
        else:
            a, b, c = (int(q) for q in rng.choice(n_qubits, size=3, replace=False))
            tape.append(("fredkin", (a, b, c), None))
    return tape


def run_tape(module, tape, n_qubits: int) -> float:
    amp = np.zeros(1 << n_qubits, dtype=np.complex128)
    amp[0] = 1.0
    start = time.perf_counter()
    for op, qs, extra in tape:
        if op == "h":
            module.apply_1q(amp, n_qubits, qs[0], _SQRT_HALF, _SQRT_HALF, _SQRT_HALF, -_SQRT_HALF)
        elif op == "phase":
            module.apply_phase(amp, n_qubits, qs[0], extra)
        elif op == "cnot":
            module.apply_cnot(amp, n_qubits, qs[0], qs[1])
        elif op == "toffoli":
            module.apply_toffoli(amp, n_qubits, qs[0], qs[1], qs[2])
        else:
            module.apply_fredkin(amp, n_qubits, qs[0], qs[1], qs[2])
    elapsed = time.perf_counter() - start
    norm = float(np.linalg.norm(amp))
    assert abs(norm - 1.0) < 1e-9, f"norm drifted to {norm}"
    return elapsed


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--qubits", type=int, default=16)
    parser.add_argument("--gates", type=int, default=400)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    tape = make_workload(args.qubits, args.gates)
    backends = {"numpy fallback": kernels_py}
    if _kernels is not None:
        backends["compiled"] = _kernels

    print(f"workload: {args.qubits} qubits, {args.gates} gates, best of {args.repeat}")
    times = {}
    for name, module in backends.items():
        best = min(run_tape(module, tape, args.qubits) for _ in range(args.repeat))
        times[name] = best
        rate = args.gates / best
        print(f"  {name:16s} {best * 1e3:9.2f} ms   {rate:10.0f} gates/s")
    if len(times) == 2:
        ratio = times["numpy fallback"] / times["compiled"]
        print(f"  speedup: compiled is {ratio:.2f}x the fallback")


if __name__ == "__main__":
    main()
