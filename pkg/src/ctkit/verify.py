"""Exhaustive functional verification of every builder against integer
oracles. Shared by the CLI `verify` subcommand and the test suite; each
checker returns a list of failure descriptions (empty means pass)."""
from __future__ import annotations

import numpy as np

from .arithmetic import (
    build_addsub,
    build_adder,
    build_conditional_adder,
    build_divider,
    build_multiplier,
    build_subtractor,
    nonrestoring_reference,
)
from .ir import Circuit
from .lowering import fredkin_cliffordT, lower, toffoli_cliffordT
from .qft import build_qft, dft_matrix
from .rotation import (
    FixedPointFormat,
    PixelCoord,
    ShearParams,
    build_shear_circuit,
    shear_functional,
)
from .sim import run_classical, unitary_of


def _set_reg(circuit: Circuit, bits: list[int], name: str, value: int) -> None:
    for i, q in enumerate(circuit.registers[name]):
        bits[q] = (value >> i) & 1


def _get_reg(circuit: Circuit, bits: tuple[int, ...], name: str) -> int:
    return sum(bits[q] << i for i, q in enumerate(circuit.registers[name]))


def _equal_up_to_phase(u: np.ndarray, v: np.ndarray, tol: float) -> bool:
    flat = u.ravel()
    pivot = np.argmax(np.abs(flat))
    if abs(flat[pivot]) < tol:
        return bool(np.abs(u - v).max() < tol)
    phase = v.ravel()[pivot] / flat[pivot]
    return bool(np.abs(u * phase - v).max() < tol)


def verify_adder(n: int) -> list[str]:
    circuit = build_adder(n)
    failures = []
    for a in range(1 << n):
        for b in range(1 << n):
            for c0 in (0, 1):
                bits = [0] * circuit.n_qubits
                _set_reg(circuit, bits, "A", a)
                _set_reg(circuit, bits, "B", b)
                _set_reg(circuit, bits, "anc", c0)  # anc bit 0 is the carry-in
                out = run_classical(circuit, bits)
                total = _get_reg(circuit, out, "B") + (
                    out[circuit.registers["anc"][1]] << n
                )
                if total != a + b + c0 or _get_reg(circuit, out, "A") != a:
                    failures.append(f"adder n={n} a={a} b={b} c0={c0} -> {total}")
                if out[circuit.registers["anc"][0]] != c0:
                    failures.append(f"adder n={n}: carry-in not restored")
    return failures


def verify_subtractor(n: int) -> list[str]:
    circuit = build_subtractor(n)
    failures = []
    for a in range(1 << n):
        for b in range(1 << n):
            bits = [0] * circuit.n_qubits
            _set_reg(circuit, bits, "A", a)
            _set_reg(circuit, bits, "B", b)
            out = run_classical(circuit, bits)
            diff = _get_reg(circuit, out, "B") + (
                out[circuit.registers["anc"][1]] << n
            )
            want = (b - a) % (1 << (n + 1))
            if diff != want or _get_reg(circuit, out, "A") != a:
                failures.append(f"subtractor n={n} a={a} b={b} -> {diff} != {want}")
    return failures


def verify_addsub(n: int) -> list[str]:
    circuit = build_addsub(n)
    failures = []
    for ctrl in (0, 1):
        for a in range(1 << n):
            for b in range(1 << n):
                bits = [0] * circuit.n_qubits
                _set_reg(circuit, bits, "Ctrl", ctrl)
                _set_reg(circuit, bits, "A", a)
                _set_reg(circuit, bits, "B", b)
                out = run_classical(circuit, bits)
                result = _get_reg(circuit, out, "B") + (
                    out[circuit.registers["anc"][1]] << n
                )
                want = (a + b) if ctrl == 0 else (b - a) % (1 << (n + 1))
                if result != want or _get_reg(circuit, out, "A") != a:
                    failures.append(
                        f"addsub n={n} ctrl={ctrl} a={a} b={b} -> {result} != {want}"
                    )
    return failures


def verify_conditional_adder(n: int) -> list[str]:
    circuit = build_conditional_adder(n)
    failures = []
    for ctrl in (0, 1):
        for a in range(1 << n):
            for b in range(1 << n):
                bits = [0] * circuit.n_qubits
                _set_reg(circuit, bits, "Ctrl", ctrl)
                _set_reg(circuit, bits, "A", a)
                _set_reg(circuit, bits, "B", b)
                out = run_classical(circuit, bits)
                result = _get_reg(circuit, out, "B") + (
                    out[circuit.registers["anc"][1]] << n
                )
                want = a + b if ctrl else b
                if (
                    result != want
                    or _get_reg(circuit, out, "A") != a
                    or out[circuit.registers["Ctrl"][0]] != ctrl
                ):
                    failures.append(
                        f"conditional adder n={n} ctrl={ctrl} a={a} b={b} -> {result}"
                    )
    return failures


def verify_multiplier(n: int) -> list[str]:
    circuit = build_multiplier(n)
    failures = []
    for a in range(1 << n):
        for b in range(1 << n):
            bits = [0] * circuit.n_qubits
            _set_reg(circuit, bits, "A", a)
            _set_reg(circuit, bits, "B", b)
            out = run_classical(circuit, bits)
            product = _get_reg(circuit, out, "P")
            if (
                product != a * b
                or _get_reg(circuit, out, "A") != a
                or _get_reg(circuit, out, "B") != b
                or out[circuit.registers["anc"][0]] != 0
            ):
                failures.append(f"multiplier n={n} a={a} b={b} -> {product}")
    return failures


def verify_divider(n: int) -> list[str]:
    circuit = build_divider(n)
    failures = []
    top = 1 << (n - 1)
    q_wires = [circuit.registers["A"][-1]] + list(circuit.registers["anc"])
    r_wires = list(circuit.registers["A"][:-1])
    for a in range(top):
        for b in range(1, top):
            ref = nonrestoring_reference(a, b, n)
            if ref != (a // b, a % b):
                failures.append(f"reference n={n} a={a} b={b} -> {ref}")
                continue
            bits = [0] * circuit.n_qubits
            _set_reg(circuit, bits, "A", a)
            _set_reg(circuit, bits, "B", b)
            out = run_classical(circuit, bits)
            quotient = sum(out[q] << j for j, q in enumerate(q_wires))
            remainder = sum(out[q] << j for j, q in enumerate(r_wires))
            if (quotient, remainder) != ref or _get_reg(circuit, out, "B") != b:
                failures.append(
                    f"divider n={n} a={a} b={b} -> ({quotient}, {remainder}) != {ref}"
                )
    return failures


def verify_qft(n: int) -> list[str]:
    u = unitary_of(build_qft(n))
    if not _equal_up_to_phase(u, dft_matrix(n), 1e-9):
        return [f"qft n={n}: unitary differs from dft_matrix"]
    return []


def verify_toffoli(_: int = 0) -> list[str]:
    target = np.eye(8)
    target[[3, 7], [3, 7]] = 0
    target[3, 7] = target[7, 3] = 1
    from .ir import new_circuit, primary_input, extend

    circuit = new_circuit(3, {"q": (0, 1, 2)}, {q: primary_input("q", q) for q in range(3)})
    extend(circuit, [toffoli_cliffordT(0, 1, 2)])
    if not _equal_up_to_phase(unitary_of(circuit), target, 1e-10):
        return ["toffoli: lowered unitary differs from the permutation matrix"]
    return []


def verify_fredkin(_: int = 0) -> list[str]:
    target = np.eye(8)
    # controlled swap of qubits 1, 2: |c=1, t1, t2> -> |c=1, t2, t1>
    target[[3, 5], [3, 5]] = 0
    target[3, 5] = target[5, 3] = 1
    from .ir import new_circuit, primary_input, extend

    circuit = new_circuit(3, {"q": (0, 1, 2)}, {q: primary_input("q", q) for q in range(3)})
    extend(circuit, [fredkin_cliffordT(0, 1, 2)])
    if not _equal_up_to_phase(unitary_of(circuit), target, 1e-10):
        return ["fredkin: lowered unitary differs from controlled-swap"]
    return []


def verify_shear(n: int, f: int | None = None) -> list[str]:
    f = min(2, n) if f is None else f
    failures = []
    fmt = FixedPointFormat(n, f)
    alpha = (1 << f) - 1  # largest f-bit constant, exercises every stage
    ref_value = (1 << n) // 2
    params = ShearParams(0.0, alpha, alpha, ref_value, ref_value, fmt)
    for axis in ("horizontal", "vertical"):
        for case in ("le_ref", "gt_ref"):
            circuit = build_shear_circuit(axis, case, n, f)
            for x in range(1 << n):
                for y in range(1 << n):
                    source = y if axis == "horizontal" else x
                    in_case = (source <= ref_value) == (case == "le_ref")
                    if not in_case:
                        continue
                    bits = [0] * circuit.n_qubits
                    _set_reg(circuit, bits, "x", x)
                    _set_reg(circuit, bits, "y", y)
                    _set_reg(circuit, bits, "ref", ref_value)
                    _set_reg(circuit, bits, "alpha", alpha)
                    out = run_classical(circuit, bits)
                    got = PixelCoord(
                        _get_reg(circuit, out, "x"), _get_reg(circuit, out, "y")
                    )
                    want = shear_functional(axis, PixelCoord(x, y), params)
                    if got != want:
                        failures.append(
                            f"shear {axis}/{case} n={n} f={f} ({x},{y}) -> "
                            f"{got} != {want}"
                        )
    return failures


CHECKERS = {
    "adder": verify_adder,
    "subtractor": verify_subtractor,
    "addsub": verify_addsub,
    "cond-adder": verify_conditional_adder,
    "multiplier": verify_multiplier,
    "divider": verify_divider,
    "qft": verify_qft,
    "shear": verify_shear,
    "toffoli": verify_toffoli,
    "fredkin": verify_fredkin,
}


def verify_family(family: str, n: int) -> list[str]:
    checker = CHECKERS.get(family)
    if checker is None:
        raise ValueError(f"unknown family {family!r}")
    return checker(n)
