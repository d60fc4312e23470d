"""Gate-level intermediate representation for Clifford+T circuits.

A circuit is a qubit count, named registers (bit 0 of every register is the
least significant bit), an ordered body of gates and hierarchical blocks, and
per-qubit role annotations. Circuits are value-like: the structural transforms
(`invert`, `flatten`, `compose`) return fresh circuits.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum, auto
from typing import Iterator, Mapping, Sequence, Union


class CircuitError(ValueError):
    """A gate or circuit failed structural validation."""


class GateKind(Enum):
    H = "h"
    T = "t"
    TDG = "tdg"
    S = "s"
    SDG = "sdg"
    X = "x"
    CNOT = "cx"
    CPHASE = "cu1"
    TOFFOLI = "ccx"
    FREDKIN = "cswap"


ARITY: dict[GateKind, int] = {
    GateKind.H: 1,
    GateKind.T: 1,
    GateKind.TDG: 1,
    GateKind.S: 1,
    GateKind.SDG: 1,
    GateKind.X: 1,
    GateKind.CNOT: 2,
    GateKind.CPHASE: 2,
    GateKind.TOFFOLI: 3,
    GateKind.FREDKIN: 3,
}

#: Gate kinds with classical (permutation) truth-table semantics.
CLASSICAL_KINDS = frozenset(
    {GateKind.X, GateKind.CNOT, GateKind.TOFFOLI, GateKind.FREDKIN}
)

_SELF_INVERSE = frozenset(
    {GateKind.H, GateKind.X, GateKind.CNOT, GateKind.TOFFOLI, GateKind.FREDKIN}
)
_DAGGER_MAP = {
    GateKind.T: GateKind.TDG,
    GateKind.TDG: GateKind.T,
    GateKind.S: GateKind.SDG,
    GateKind.SDG: GateKind.S,
}


@dataclass(frozen=True)
class Gate:
    """One quantum operation on explicit qubit operands.

    Operand order: CNOT/CPHASE are (control, target); Toffoli is
    (control1, control2, target); Fredkin is (control, swap1, swap2).
    CPHASE(k) applies exp(i*pi/2^k) to |11> (conjugated when `adjoint`);
    k=1 is the controlled-S of the two-qubit QFT.
    """

    kind: GateKind
    qubits: tuple[int, ...]
    k: int | None = None
    adjoint: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "qubits", tuple(int(q) for q in self.qubits))
        if len(self.qubits) != ARITY[self.kind]:
            raise CircuitError(
                f"{self.kind.name} takes {ARITY[self.kind]} operands, "
                f"got {len(self.qubits)}"
            )
        if len(set(self.qubits)) != len(self.qubits):
            raise CircuitError(f"duplicate operands in {self.kind.name}{self.qubits}")
        if any(q < 0 for q in self.qubits):
            raise CircuitError("negative qubit index")
        if self.kind is GateKind.CPHASE:
            if self.k is None or self.k < 1:
                raise CircuitError("CPHASE requires an integer k >= 1")
        elif self.k is not None or self.adjoint:
            raise CircuitError(f"k/adjoint only apply to CPHASE, not {self.kind.name}")


@dataclass(frozen=True)
class Block:
    """Named hierarchical sub-circuit (e.g. MAJ, UMA, CMAJ, CUMA, TGA).

    `classical_equiv` optionally records a single classical gate with the same
    basis-state action (set by lowering), letting the classical simulator and
    garbage classification shortcut a lowered Clifford+T expansion.
    """

    name: str
    children: tuple["Item", ...]
    classical_equiv: Gate | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "children", tuple(self.children))
        for child in self.children:
            if not isinstance(child, (Gate, Block)):
                raise CircuitError(f"invalid block child: {child!r}")


Item = Union[Gate, Block]


class RoleKind(Enum):
    PRIMARY_INPUT = auto()
    ANCILLA_ZERO = auto()
    ANCILLA_CARRY_IN = auto()
    DECLARED_OUTPUT = auto()
    RESTORED_INPUT = auto()
    RESTORED_ANCILLA = auto()
    GARBAGE = auto()


INPUT_ROLE_KINDS = frozenset(
    {RoleKind.PRIMARY_INPUT, RoleKind.ANCILLA_ZERO, RoleKind.ANCILLA_CARRY_IN}
)


@dataclass(frozen=True)
class QubitRole:
    kind: RoleKind
    register: str | None = None
    bit: int | None = None


def primary_input(register: str, bit: int) -> QubitRole:
    return QubitRole(RoleKind.PRIMARY_INPUT, register, bit)


def declared_output(register: str, bit: int) -> QubitRole:
    return QubitRole(RoleKind.DECLARED_OUTPUT, register, bit)


ANCILLA_ZERO = QubitRole(RoleKind.ANCILLA_ZERO)
ANCILLA_CARRY_IN = QubitRole(RoleKind.ANCILLA_CARRY_IN)


@dataclass
class Circuit:
    n_qubits: int
    registers: dict[str, tuple[int, ...]]
    body: list[Item] = field(default_factory=list)
    input_roles: dict[int, QubitRole] = field(default_factory=dict)
    declared_outputs: dict[int, QubitRole] = field(default_factory=dict)


def item_qubits(item: Item) -> set[int]:
    """All qubit indices an item touches."""
    if isinstance(item, Gate):
        return set(item.qubits)
    touched: set[int] = set()
    for child in item.children:
        touched |= item_qubits(child)
    return touched


def _validate_item(item: Item, n_qubits: int) -> None:
    if isinstance(item, Gate):
        if any(q >= n_qubits for q in item.qubits):
            raise CircuitError(f"operand out of range for {n_qubits} qubits: {item}")
        return
    for child in item.children:
        _validate_item(child, n_qubits)
    if item.classical_equiv is not None:
        _validate_item(item.classical_equiv, n_qubits)


def new_circuit(
    n_qubits: int,
    registers: Mapping[str, Sequence[int]],
    roles: Mapping[int, QubitRole],
    declared_outputs: Mapping[int, QubitRole] | None = None,
) -> Circuit:
    """Construct an empty-body circuit, validating registers and roles."""
    if n_qubits < 1:
        raise CircuitError("circuit needs at least one qubit")
    regs = {name: tuple(int(q) for q in qs) for name, qs in registers.items()}
    seen: set[int] = set()
    for name, qs in regs.items():
        for q in qs:
            if not 0 <= q < n_qubits:
                raise CircuitError(f"register {name} qubit {q} out of range")
            if q in seen:
                raise CircuitError(f"register {name} overlaps on qubit {q}")
            seen.add(q)
    role_map = dict(roles)
    for q in range(n_qubits):
        role = role_map.get(q)
        if role is None:
            raise CircuitError(f"qubit {q} has no input role")
        if role.kind not in INPUT_ROLE_KINDS:
            raise CircuitError(f"qubit {q}: {role.kind.name} is not an input role")
    outs = dict(declared_outputs) if declared_outputs else {}
    for q, role in outs.items():
        if not 0 <= q < n_qubits:
            raise CircuitError(f"declared output qubit {q} out of range")
        if role.kind is not RoleKind.DECLARED_OUTPUT:
            raise CircuitError("declared_outputs must carry DECLARED_OUTPUT roles")
    return Circuit(n_qubits, regs, [], role_map, outs)


def append(circuit: Circuit, item: Item) -> Circuit:
    """Append a gate or block after validation; returns the circuit."""
    _validate_item(item, circuit.n_qubits)
    circuit.body.append(item)
    return circuit


def extend(circuit: Circuit, items: Sequence[Item]) -> Circuit:
    for item in items:
        append(circuit, item)
    return circuit


def _invert_gate(gate: Gate) -> Gate:
    if gate.kind in _SELF_INVERSE:
        return gate
    if gate.kind in _DAGGER_MAP:
        return Gate(_DAGGER_MAP[gate.kind], gate.qubits)
    # CPHASE: conjugate the phase
    return Gate(gate.kind, gate.qubits, k=gate.k, adjoint=not gate.adjoint)


def _invert_item(item: Item) -> Item:
    if isinstance(item, Gate):
        return _invert_gate(item)
    inv_children = tuple(_invert_item(c) for c in reversed(item.children))
    equiv = item.classical_equiv
    return Block(
        item.name,
        inv_children,
        classical_equiv=None if equiv is None else _invert_gate(equiv),
    )


def invert(circuit: Circuit) -> Circuit:
    """Dagger circuit: reversed order, each gate replaced by its inverse."""
    inv = Circuit(
        circuit.n_qubits,
        dict(circuit.registers),
        [_invert_item(item) for item in reversed(circuit.body)],
        dict(circuit.input_roles),
        dict(circuit.declared_outputs),
    )
    return inv


def iter_gates(body: Sequence[Item]) -> Iterator[Gate]:
    """Depth-first gate traversal of a body."""
    for item in body:
        if isinstance(item, Gate):
            yield item
        else:
            yield from iter_gates(item.children)


def flatten(circuit: Circuit) -> Circuit:
    """Same circuit with all blocks expanded to their gate sequences."""
    return Circuit(
        circuit.n_qubits,
        dict(circuit.registers),
        list(iter_gates(circuit.body)),
        dict(circuit.input_roles),
        dict(circuit.declared_outputs),
    )


def compose(first: Circuit, second: Circuit) -> Circuit:
    """Concatenate bodies of two circuits over the same qubits."""
    if first.n_qubits != second.n_qubits:
        raise CircuitError("compose requires equal qubit counts")
    return Circuit(
        first.n_qubits,
        dict(first.registers),
        list(first.body) + list(second.body),
        dict(first.input_roles),
        dict(first.declared_outputs),
    )
