"""Reversible arithmetic builders: ripple-carry adder (MAJ/UMA), subtractor,
controlled add/subtract, conditional adder (CMAJ/CUMA), shift-and-add
multiplier, and the non-restoring divider with its classical reference.

All registers are LSB-first. The adder family uses the interleaved layout
(carry-in ancilla, then (b_i, a_i) pairs, then the carry-out ancilla). The
divider works within 2n+(n-1) qubits and therefore uses a no-ancilla in-place
modular adder internally instead of the Cuccaro blocks.
"""
from __future__ import annotations

from typing import Sequence

from .ir import (
    ANCILLA_CARRY_IN,
    ANCILLA_ZERO,
    Block,
    Circuit,
    CircuitError,
    Gate,
    GateKind,
    Item,
    declared_output,
    extend,
    new_circuit,
    primary_input,
)


def _x(q: int) -> Gate:
    return Gate(GateKind.X, (q,))


def _cx(c: int, t: int) -> Gate:
    return Gate(GateKind.CNOT, (c, t))


def _ccx(c1: int, c2: int, t: int) -> Gate:
    return Gate(GateKind.TOFFOLI, (c1, c2, t))


def carry_block(kind: str, *qubits: int) -> Block:
    """MAJ/UMA/CMAJ/CUMA carry blocks.

    MAJ/UMA take (c, b, a); CMAJ/CUMA take (ctrl, c, b, a). The definitions
    satisfy the gating identities: CMAJ/CUMA with ctrl=1 act as MAJ/UMA and
    with ctrl=0 the CMAJ;CUMA pair is the identity.
    """
    if kind in ("MAJ", "UMA"):
        if len(qubits) != 3:
            raise CircuitError(f"{kind} takes (c, b, a)")
        c, b, a = qubits
        if kind == "MAJ":
            children = (_cx(a, b), _cx(a, c), _ccx(c, b, a))
        else:
            children = (_ccx(c, b, a), _cx(a, c), _cx(c, b))
    elif kind in ("CMAJ", "CUMA"):
        if len(qubits) != 4:
            raise CircuitError(f"{kind} takes (ctrl, c, b, a)")
        ctrl, c, b, a = qubits
        if kind == "CMAJ":
            children = (_ccx(ctrl, a, b), _cx(a, c), _ccx(c, b, a))
        else:
            children = (_ccx(c, b, a), _cx(a, c), _ccx(ctrl, c, b))
    else:
        raise CircuitError(f"unknown carry block kind {kind!r}")
    return Block(kind, children)


def _adder_core(z0: int, a: Sequence[int], b: Sequence[int], z1: int) -> list[Item]:
    """MAJ ripple up, carry-out copy, UMA ripple down. Sum lands on b."""
    n = len(a)
    carries = [z0] + list(a[:-1])
    items: list[Item] = [
        carry_block("MAJ", carries[i], b[i], a[i]) for i in range(n)
    ]
    items.append(_cx(a[n - 1], z1))
    items.extend(
        carry_block("UMA", carries[i], b[i], a[i]) for i in reversed(range(n))
    )
    return items


def _adder_layout(n: int, offset: int = 0):
    """Interleaved wires: z0, (b_i, a_i) pairs, z1, starting at `offset`."""
    z0 = offset
    b = [offset + 1 + 2 * i for i in range(n)]
    a = [offset + 2 + 2 * i for i in range(n)]
    z1 = offset + 2 * n + 1
    return z0, a, b, z1


def build_adder(n: int) -> Circuit:
    """Cuccaro adder: B <- (a + b + c0) mod 2^n, carry-out on the top ancilla.

    2n+2 qubits; A and the carry-in ancilla are restored.
    """
    if n < 1:
        raise CircuitError("n must be positive")
    z0, a, b, z1 = _adder_layout(n)
    roles = {z0: ANCILLA_CARRY_IN, z1: ANCILLA_ZERO}
    roles.update({a[i]: primary_input("A", i) for i in range(n)})
    roles.update({b[i]: primary_input("B", i) for i in range(n)})
    outs = {b[i]: declared_output("S", i) for i in range(n)}
    outs[z1] = declared_output("S", n)
    circuit = new_circuit(
        2 * n + 2,
        {"A": a, "B": b, "anc": (z0, z1)},
        roles,
        outs,
    )
    return extend(circuit, _adder_core(z0, a, b, z1))


def build_subtractor(n: int) -> Circuit:
    """Two's-complement subtractor: (B, carry) <- (b - a) mod 2^(n+1).

    The adder conjugated by X on the B qubits; A is restored.
    """
    if n < 1:
        raise CircuitError("n must be positive")
    z0, a, b, z1 = _adder_layout(n)
    roles = {z0: ANCILLA_CARRY_IN, z1: ANCILLA_ZERO}
    roles.update({a[i]: primary_input("A", i) for i in range(n)})
    roles.update({b[i]: primary_input("B", i) for i in range(n)})
    outs = {b[i]: declared_output("D", i) for i in range(n)}
    outs[z1] = declared_output("D", n)
    circuit = new_circuit(
        2 * n + 2, {"A": a, "B": b, "anc": (z0, z1)}, roles, outs
    )
    extend(circuit, [_x(q) for q in b])
    extend(circuit, _adder_core(z0, a, b, z1))
    return extend(circuit, [_x(q) for q in b])


def build_addsub(n: int) -> Circuit:
    """Controlled add/subtract: Ctrl=0 adds, Ctrl=1 computes (b - a).

    A CNOT fan from Ctrl onto B conjugates the adder; 2n+3 qubits.
    """
    if n < 1:
        raise CircuitError("n must be positive")
    ctrl = 0
    z0, a, b, z1 = _adder_layout(n, offset=1)
    roles = {ctrl: primary_input("Ctrl", 0), z0: ANCILLA_CARRY_IN, z1: ANCILLA_ZERO}
    roles.update({a[i]: primary_input("A", i) for i in range(n)})
    roles.update({b[i]: primary_input("B", i) for i in range(n)})
    outs = {b[i]: declared_output("S", i) for i in range(n)}
    outs[z1] = declared_output("S", n)
    circuit = new_circuit(
        2 * n + 3, {"Ctrl": (ctrl,), "A": a, "B": b, "anc": (z0, z1)}, roles, outs
    )
    fan = [_cx(ctrl, q) for q in b]
    extend(circuit, fan)
    extend(circuit, _adder_core(z0, a, b, z1))
    return extend(circuit, fan)


def _conditional_add_items(
    ctrl: int, z0: int, a: Sequence[int], b: Sequence[int], z1: int
) -> list[Item]:
    """CMAJ chain, middle Toffoli, CUMA chain: Ctrl=1 adds a into (b, z1)."""
    n = len(a)
    carries = [z0] + list(a[:-1])
    items: list[Item] = [
        carry_block("CMAJ", ctrl, carries[i], b[i], a[i]) for i in range(n)
    ]
    items.append(_ccx(ctrl, a[n - 1], z1))
    items.extend(
        carry_block("CUMA", ctrl, carries[i], b[i], a[i]) for i in reversed(range(n))
    )
    return items


def build_conditional_adder(n: int) -> Circuit:
    """Conditional adder: Ctrl=1 behaves as build_adder, Ctrl=0 is identity."""
    if n < 1:
        raise CircuitError("n must be positive")
    ctrl = 0
    z0, a, b, z1 = _adder_layout(n, offset=1)
    roles = {ctrl: primary_input("Ctrl", 0), z0: ANCILLA_CARRY_IN, z1: ANCILLA_ZERO}
    roles.update({a[i]: primary_input("A", i) for i in range(n)})
    roles.update({b[i]: primary_input("B", i) for i in range(n)})
    outs = {b[i]: declared_output("S", i) for i in range(n)}
    outs[z1] = declared_output("S", n)
    circuit = new_circuit(
        2 * n + 3, {"Ctrl": (ctrl,), "A": a, "B": b, "anc": (z0, z1)}, roles, outs
    )
    return extend(circuit, _conditional_add_items(ctrl, z0, a, b, z1))


def build_multiplier(n: int) -> Circuit:
    """Shift-and-add multiplier: P (2n qubits) <- a * b.

    A Toffoli partial-product array for b_0 followed by n-1 conditional-adder
    stages for the remaining b bits, each shifted one position; A, B and the
    shared carry ancilla are restored. 4n+1 qubits.
    """
    if n < 1:
        raise CircuitError("n must be positive")
    a = list(range(n))
    b = list(range(n, 2 * n))
    p = list(range(2 * n, 4 * n))
    z0 = 4 * n
    roles = {z0: ANCILLA_CARRY_IN}
    roles.update({a[i]: primary_input("A", i) for i in range(n)})
    roles.update({b[i]: primary_input("B", i) for i in range(n)})
    roles.update({p[i]: ANCILLA_ZERO for i in range(2 * n)})
    outs = {p[i]: declared_output("P", i) for i in range(2 * n)}
    circuit = new_circuit(
        4 * n + 1, {"A": a, "B": b, "P": p, "anc": (z0,)}, roles, outs
    )
    tga = Block("TGA", tuple(_ccx(b[0], a[i], p[i]) for i in range(n)))
    append_items: list[Item] = [tga]
    for j in range(1, n):
        stage = _conditional_add_items(
            b[j], z0, a, [p[j + i] for i in range(n)], p[j + n]
        )
        append_items.append(Block(f"ConditionalAdd{j}", tuple(stage)))
    return extend(circuit, append_items)


def _inplace_add(
    a: Sequence[int], b: Sequence[int], ctrl: int | None = None
) -> list[Gate]:
    """No-ancilla in-place modular adder: b <- (a + b) mod 2^k.

    Takahashi-style carry ripple entirely inside the a wires. When `ctrl` is
    given, only the b-writing gates are controlled (the carry logic
    self-uncomputes), yielding the controlled adder.
    """
    k = len(a)
    if len(b) != k or k < 1:
        raise CircuitError("in-place adder needs equal non-empty operands")
    write = (
        (lambda c, t: _cx(c, t))
        if ctrl is None
        else (lambda c, t: _ccx(ctrl, c, t))
    )
    gates: list[Gate] = []
    gates += [write(a[i], b[i]) for i in range(1, k)]
    gates += [_cx(a[i], a[i + 1]) for i in range(k - 2, 0, -1)]
    gates += [_ccx(b[i], a[i], a[i + 1]) for i in range(k - 1)]
    for i in range(k - 1, 0, -1):
        gates.append(write(a[i], b[i]))
        gates.append(_ccx(b[i - 1], a[i - 1], a[i]))
    gates += [_cx(a[i], a[i + 1]) for i in range(1, k - 1)]
    gates += [write(a[i], b[i]) for i in range(k)]
    return gates


def _inplace_sub(a: Sequence[int], b: Sequence[int]) -> list[Gate]:
    """b <- (b - a) mod 2^k via X-conjugation of the target."""
    conj = [_x(q) for q in b]
    return conj + _inplace_add(a, b) + conj


def nonrestoring_reference(a: int, b: int, n: int) -> tuple[int, int]:
    """Classical non-restoring division oracle.

    Follows the pseudocode literally: seed the quotient accumulator with
    a_{n-1}, subtract b, then for each remaining dividend bit complement the
    sign into the quotient and add or subtract b from the shifted partial
    remainder; finally restore a negative remainder and complement the last
    quotient bit. Returns (Q, R) with Q on n bits and R on n-1 bits.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if b == 0:
        raise ZeroDivisionError("division by zero")
    top = 1 << (n - 1)
    if not (0 <= a < top and 0 < b < top):
        raise ValueError("operands must be positive 2's complement values")
    mask = (1 << n) - 1
    partial = (a >> (n - 1)) & 1
    partial = (partial - b) & mask
    qbits: list[int] = []
    for i in range(1, n):
        sign = (partial >> (n - 1)) & 1
        qbits.append(sign ^ 1)
        partial = ((partial << 1) | ((a >> (n - 1 - i)) & 1)) & mask
        partial = (partial + b) & mask if sign else (partial - b) & mask
    sign = (partial >> (n - 1)) & 1
    remainder = (partial + b) & mask if sign else partial
    quotient = sign ^ 1
    for j, bit in enumerate(qbits):
        quotient |= bit << (n - 1 - j)
    return quotient, remainder & ((1 << (n - 1)) - 1)


def build_divider(n: int) -> Circuit:
    """Non-restoring divider: Q <- a // b, R <- a % b, B restored.

    2n+(n-1) qubits: the dividend's low bits enter on the R wires, a_{n-1}
    enters the Q_0 wire, and n-1 zero ancillae complete the Q register. All
    adders are in-place no-ancilla networks; conditional add/subtract steps
    conjugate an adder with a CNOT fan from the (complemented) sign bit.
    """
    if n < 2:
        raise CircuitError("n must be at least 2")
    r = list(range(n - 1))
    b = list(range(n - 1, 2 * n - 1))
    q = list(range(2 * n - 1, 3 * n - 1))
    roles = {r[i]: primary_input("A", i) for i in range(n - 1)}
    roles[q[0]] = primary_input("A", n - 1)
    roles.update({b[i]: primary_input("B", i) for i in range(n)})
    roles.update({q[j]: ANCILLA_ZERO for j in range(1, n)})
    outs = {r[i]: declared_output("R", i) for i in range(n - 1)}
    outs.update({q[j]: declared_output("Q", j) for j in range(n)})
    circuit = new_circuit(
        3 * n - 1,
        {"A": r + [q[0]], "B": b, "anc": q[1:]},
        roles,
        outs,
    )
    body: list[Item] = [Block("Sub", tuple(_inplace_sub(b, q)))]
    for i in range(1, n):
        sign = q[n - i]  # complemented sign bit after the X
        # shifted partial remainder: i dividend wires then the low q wires
        y = r[n - 1 - i : n - 1] + q[0 : n - i]
        fan = [_cx(sign, w) for w in y]
        step: list[Item] = [_x(sign)]
        step += fan + _inplace_add(b, y) + fan
        body.append(Block(f"AddSub{i}", tuple(step)))
    body.append(Block("Restore", tuple(_inplace_add(b[: n - 1], r, ctrl=q[0]))))
    body.append(_x(q[0]))
    return extend(circuit, body)
