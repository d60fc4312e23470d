"""OpenQASM 2.0 subset emission and parsing.

Supported gates: h, t, tdg, s, sdg, x, cx, ccx, cswap and cu1(+/-pi/2^k).
One qreg per register; emission is deterministic (byte-identical output for
identical circuits). Qubit roles have no QASM syntax and travel in an
optional JSON sidecar.
"""
from __future__ import annotations

import json
import re
from typing import Mapping

from .ir import (
    Circuit,
    Gate,
    GateKind,
    QubitRole,
    RoleKind,
    flatten,
    iter_gates,
    new_circuit,
)


class QasmError(ValueError):
    pass


_KIND_BY_NAME = {kind.value: kind for kind in GateKind}


def _qubit_map(circuit: Circuit) -> tuple[dict[str, tuple[int, ...]], dict[int, tuple[str, int]]]:
    """Registers (plus a catch-all for unregistered wires) and qubit->(reg, offset)."""
    registers = {name: tuple(qs) for name, qs in circuit.registers.items()}
    covered = {q for qs in registers.values() for q in qs}
    leftover = [q for q in range(circuit.n_qubits) if q not in covered]
    if leftover:
        name = "wires"
        while name in registers:
            name = "_" + name
        registers[name] = tuple(leftover)
    location = {
        q: (name, offset)
        for name, qs in registers.items()
        for offset, q in enumerate(qs)
    }
    return registers, location


def _gate_line(gate: Gate, location: Mapping[int, tuple[str, int]]) -> str:
    operands = ",".join(f"{location[q][0]}[{location[q][1]}]" for q in gate.qubits)
    if gate.kind is GateKind.CPHASE:
        sign = "-" if gate.adjoint else ""
        denom = "" if gate.k == 0 else f"/{1 << gate.k}"
        return f"cu1({sign}pi{denom}) {operands};"
    return f"{gate.kind.value} {operands};"


def emit_qasm(circuit: Circuit) -> str:
    """Serialize a circuit (flattened) to the OpenQASM 2.0 subset."""
    registers, location = _qubit_map(circuit)
    lines = ["OPENQASM 2.0;", 'include "qelib1.inc";']
    lines.extend(f"qreg {name}[{len(qs)}];" for name, qs in registers.items())
    lines.extend(_gate_line(g, location) for g in iter_gates(circuit.body))
    return "\n".join(lines) + "\n"


_QREG_RE = re.compile(r"qreg\s+(\w+)\s*\[\s*(\d+)\s*\]\s*;\s*$")
_GATE_RE = re.compile(
    r"(\w+)\s*(?:\(\s*(-?)pi(?:\s*/\s*(\d+))?\s*\))?\s+([^;]+);\s*$"
)
_OPERAND_RE = re.compile(r"^(\w+)\s*\[\s*(\d+)\s*\]$")


def parse_qasm(text: str, roles: Mapping[int, QubitRole] | None = None) -> Circuit:
    """Parse the emitted subset back into a flat circuit.

    Registers are laid out contiguously in declaration order. Roles default
    to PrimaryInput(register, bit) unless a sidecar mapping is supplied.
    """
    registers: dict[str, tuple[int, ...]] = {}
    gates: list[Gate] = []
    next_qubit = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("//", 1)[0].strip()
        if (
            not line
            or line.startswith("OPENQASM")
            or line.startswith("include")
        ):
            continue
        if line.startswith("qreg"):
            match = _QREG_RE.match(line)
            if not match:
                raise QasmError(f"line {lineno}: malformed qreg")
            name, size = match.group(1), int(match.group(2))
            if name in registers or size < 1:
                raise QasmError(f"line {lineno}: bad register {name!r}")
            registers[name] = tuple(range(next_qubit, next_qubit + size))
            next_qubit += size
            continue
        match = _GATE_RE.match(line)
        if not match:
            raise QasmError(f"line {lineno}: unparsable statement {line!r}")
        name, sign, denom, operand_text = match.groups()
        operands = []
        for chunk in operand_text.split(","):
            om = _OPERAND_RE.match(chunk.strip())
            if not om or om.group(1) not in registers:
                raise QasmError(f"line {lineno}: bad operand {chunk.strip()!r}")
            reg, offset = om.group(1), int(om.group(2))
            if offset >= len(registers[reg]):
                raise QasmError(f"line {lineno}: operand index out of range")
            operands.append(registers[reg][offset])
        if name == "cu1":
            if denom is None:
                k = 0
            else:
                k = int(denom).bit_length() - 1
                if 1 << k != int(denom):
                    raise QasmError(f"line {lineno}: cu1 denominator not a power of 2")
            if k < 1:
                raise QasmError(f"line {lineno}: cu1 phase outside pi/2^k, k >= 1")
            gates.append(
                Gate(GateKind.CPHASE, tuple(operands), k=k, adjoint=sign == "-")
            )
            continue
        kind = _KIND_BY_NAME.get(name)
        if kind is None or kind is GateKind.CPHASE:
            raise QasmError(f"line {lineno}: unsupported gate {name!r}")
        if sign or denom:
            raise QasmError(f"line {lineno}: {name} takes no parameter")
        gates.append(Gate(kind, tuple(operands)))
    if next_qubit == 0:
        raise QasmError("no qreg declared")
    role_map = dict(roles) if roles else {}
    for name, qs in registers.items():
        for offset, q in enumerate(qs):
            role_map.setdefault(q, QubitRole(RoleKind.PRIMARY_INPUT, name, offset))
    circuit = new_circuit(next_qubit, registers, role_map)
    circuit.body.extend(gates)
    return circuit


def structurally_equal(first: Circuit, second: Circuit) -> bool:
    """Equality up to qubit relabeling through (register, offset) positions.

    The emitter lays registers out contiguously while builders may interleave
    them, so round-tripped circuits are compared by where each operand lives,
    not by raw wire index.
    """

    def signature(circuit: Circuit):
        registers, location = _qubit_map(circuit)
        shape = sorted((name, len(qs)) for name, qs in registers.items())
        body = [
            (
                gate.kind,
                gate.k,
                gate.adjoint,
                tuple(location[q] for q in gate.qubits),
            )
            for gate in iter_gates(circuit.body)
        ]
        return shape, body

    return signature(first) == signature(second)


def roles_sidecar(circuit: Circuit) -> str:
    """JSON sidecar with the circuit's input and declared-output roles.

    Qubits are numbered in the emitted file's layout (registers laid out
    contiguously in declaration order), so a parse of the emitted QASM plus
    this sidecar reconstructs the role annotations faithfully even when the
    builder interleaved its registers.
    """
    registers, location = _qubit_map(circuit)
    base = {}
    offset = 0
    for name, qs in registers.items():
        base[name] = offset
        offset += len(qs)
    emitted = {
        q: base[reg] + pos for q, (reg, pos) in location.items()
    }

    def encode(role: QubitRole) -> dict:
        return {"kind": role.kind.name, "register": role.register, "bit": role.bit}

    payload = {
        "input_roles": {
            str(emitted[q]): encode(r) for q, r in circuit.input_roles.items()
        },
        "declared_outputs": {
            str(emitted[q]): encode(r) for q, r in circuit.declared_outputs.items()
        },
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def parse_roles_sidecar(text: str) -> tuple[dict[int, QubitRole], dict[int, QubitRole]]:
    def decode(blob: dict) -> QubitRole:
        return QubitRole(RoleKind[blob["kind"]], blob.get("register"), blob.get("bit"))

    payload = json.loads(text)
    inputs = {int(q): decode(r) for q, r in payload.get("input_roles", {}).items()}
    outputs = {
        int(q): decode(r) for q, r in payload.get("declared_outputs", {}).items()
    }
    return inputs, outputs
