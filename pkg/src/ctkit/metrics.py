"""Resource-cost measures: counts, depths, qubit/ancilla/garbage accounting,
KQ family, and the closed-form predictions for the adder families.

Two depth conventions are first class. `Scheduled` uses ASAP layering over
the flattened gate sequence (a gate enters the earliest layer strictly after
every earlier gate sharing a qubit). `SerialBlock` serializes the top-level
body items and sums their individual Scheduled depths, reproducing the
per-module accounting behind the closed forms.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, auto
from typing import Iterable, Sequence

import numpy as np

from .ir import Circuit, Gate, GateKind, RoleKind, iter_gates
from .sim.classical import is_classical, run_classical_sweep


class MetricsError(ValueError):
    pass


class DepthConvention(Enum):
    SCHEDULED = auto()
    SERIAL_BLOCK = auto()


class Verdict(Enum):
    DELIVERABLE = "deliverable"
    NEEDS_QEC = "needs-QEC"


#: Largest number of swept input bits for exhaustive garbage classification.
SWEEP_LIMIT_BITS = 18

_T_KINDS = {GateKind.T, GateKind.TDG}


@dataclass(frozen=True)
class ResourceReport:
    t_count: int
    t_depth: int
    cnot_count: int
    cnot_depth: int
    total_depth: int
    qubit_cost: int
    ancilla_count: int
    garbage_count: int | None  # None renders as "undetermined"
    kq: int
    kq_t: int
    kq_cnot: int
    fidelity_A: float | None

    def to_dict(self) -> dict:
        out = {
            "t_count": self.t_count,
            "t_depth": self.t_depth,
            "cnot_count": self.cnot_count,
            "cnot_depth": self.cnot_depth,
            "total_depth": self.total_depth,
            "qubit_cost": self.qubit_cost,
            "ancilla_count": self.ancilla_count,
            "garbage_count": (
                "undetermined" if self.garbage_count is None else self.garbage_count
            ),
            "kq": self.kq,
            "kq_t": self.kq_t,
            "kq_cnot": self.kq_cnot,
            "fidelity_A": self.fidelity_A,
        }
        return out


def asap_layers(gates: Sequence[Gate]) -> list[int]:
    """1-based ASAP layer per gate; ties broken by input order."""
    frontier: dict[int, int] = {}
    layers: list[int] = []
    for gate in gates:
        layer = 1 + max((frontier.get(q, 0) for q in gate.qubits), default=0)
        for q in gate.qubits:
            frontier[q] = layer
        layers.append(layer)
    return layers


def _scheduled_depths(gates: Sequence[Gate]) -> tuple[int, int, int]:
    """(total_depth, t_depth, cnot_depth) of one flattened gate sequence."""
    layers = asap_layers(gates)
    t_layers = {l for g, l in zip(gates, layers) if g.kind in _T_KINDS}
    cx_layers = {l for g, l in zip(gates, layers) if g.kind is GateKind.CNOT}
    return max(layers, default=0), len(t_layers), len(cx_layers)


def _check_lowered(gates: Iterable[Gate]) -> None:
    for gate in gates:
        if gate.kind in (GateKind.TOFFOLI, GateKind.FREDKIN):
            raise MetricsError(
                f"T/CNOT metrics need a lowered circuit; found {gate.kind.name}"
            )
        if gate.kind is GateKind.CPHASE and gate.k >= 2:
            raise MetricsError(
                f"ControlledPhase(k={gate.k}) has no exact Clifford+T form; "
                "its T cost is undefined (approximate synthesis only)"
            )


def resource_report(
    circuit: Circuit, convention: DepthConvention = DepthConvention.SCHEDULED
) -> ResourceReport:
    """All cost measures of a lowered circuit under one depth convention."""
    gates = list(iter_gates(circuit.body))
    _check_lowered(gates)
    t_count = sum(1 for g in gates if g.kind in _T_KINDS)
    cnot_count = sum(1 for g in gates if g.kind is GateKind.CNOT)
    if convention is DepthConvention.SCHEDULED:
        total_depth, t_depth, cnot_depth = _scheduled_depths(gates)
    else:
        total_depth = t_depth = cnot_depth = 0
        for item in circuit.body:
            item_gates = (
                [item] if isinstance(item, Gate) else list(iter_gates(item.children))
            )
            d, td, cd = _scheduled_depths(item_gates)
            total_depth += d
            t_depth += td
            cnot_depth += cd
    qubit_cost = circuit.n_qubits
    ancilla_count = sum(
        1
        for role in circuit.input_roles.values()
        if role.kind in (RoleKind.ANCILLA_ZERO, RoleKind.ANCILLA_CARRY_IN)
    )
    try:
        _, garbage_count = classify_outputs(circuit)
    except MetricsError:
        garbage_count = None
    kq = total_depth * qubit_cost
    return ResourceReport(
        t_count=t_count,
        t_depth=t_depth,
        cnot_count=cnot_count,
        cnot_depth=cnot_depth,
        total_depth=total_depth,
        qubit_cost=qubit_cost,
        ancilla_count=ancilla_count,
        garbage_count=garbage_count,
        kq=kq,
        kq_t=t_depth * qubit_cost,
        kq_cnot=cnot_depth * qubit_cost,
        fidelity_A=(1.0 / kq) if kq > 0 else None,
    )


def classify_outputs(circuit: Circuit) -> tuple[dict[int, RoleKind], int]:
    """Per-qubit output classification by exhaustive classical sweep.

    Primary inputs range over all assignments; ancillae stay at their declared
    constants (zero). A qubit that always returns its initial value is
    RestoredInput/RestoredAncilla; otherwise it is a DeclaredOutput when the
    builder listed it (functional correctness of the declared value is
    established by the builders' oracle tests) and Garbage when not.
    """
    if not is_classical(circuit):
        raise MetricsError("classify_outputs needs a classical circuit")
    n = circuit.n_qubits
    swept = [
        q
        for q in range(n)
        if circuit.input_roles[q].kind is RoleKind.PRIMARY_INPUT
    ]
    if len(swept) > SWEEP_LIMIT_BITS:
        raise MetricsError(
            f"{len(swept)} swept inputs exceed the exhaustive budget "
            f"of {SWEEP_LIMIT_BITS}; garbage is undetermined"
        )
    count = 1 << len(swept)
    columns = np.zeros((n, count), dtype=np.uint8)
    pattern = np.arange(count)
    for pos, q in enumerate(swept):
        columns[q] = (pattern >> pos) & 1
    out = run_classical_sweep(circuit, columns)
    roles: dict[int, RoleKind] = {}
    garbage = 0
    for q in range(n):
        restored = bool(np.array_equal(out[q], columns[q]))
        if restored:
            roles[q] = (
                RoleKind.RESTORED_INPUT
                if circuit.input_roles[q].kind is RoleKind.PRIMARY_INPUT
                else RoleKind.RESTORED_ANCILLA
            )
        elif q in circuit.declared_outputs:
            roles[q] = RoleKind.DECLARED_OUTPUT
        else:
            roles[q] = RoleKind.GARBAGE
            garbage += 1
    return roles, garbage


def qubit_costs(circuit: Circuit) -> tuple[int, int]:
    """(qubit_cost, ancilla_count) with both accounting identities checked.

    Method 1: qubit cost = primary inputs + ancillae (from input roles).
    Method 2: qubit cost = garbage + outputs including restored values (from
    the output classification), checked when the sweep is feasible.
    """
    n = circuit.n_qubits
    primaries = sum(
        1
        for role in circuit.input_roles.values()
        if role.kind is RoleKind.PRIMARY_INPUT
    )
    ancillae = sum(
        1
        for role in circuit.input_roles.values()
        if role.kind in (RoleKind.ANCILLA_ZERO, RoleKind.ANCILLA_CARRY_IN)
    )
    if primaries + ancillae != n:
        raise MetricsError("input roles do not partition the qubits")
    try:
        roles, garbage = classify_outputs(circuit)
    except MetricsError:
        return n, ancillae
    outputs = sum(1 for kind in roles.values() if kind is not RoleKind.GARBAGE)
    if garbage + outputs != n:
        raise MetricsError("method-2 accounting identity failed")
    return n, ancillae


def nisq_check(
    A: float, epsilon: float, convention: str = "paper"
) -> Verdict:
    """Deliverability verdict for fidelity estimate A against failure rate eps.

    `paper` applies the literal published rule (A < eps -> deliverable);
    `standard` applies the conventional reading (eps < A -> deliverable).
    """
    if not (0.0 < A <= 1.0) or not (0.0 < epsilon <= 1.0):
        raise MetricsError("A and epsilon must lie in (0, 1]")
    if convention == "paper":
        return Verdict.DELIVERABLE if A < epsilon else Verdict.NEEDS_QEC
    if convention == "standard":
        return Verdict.DELIVERABLE if epsilon < A else Verdict.NEEDS_QEC
    raise MetricsError(f"unknown convention {convention!r}")


def predicted_report(family: str, n: int) -> dict[str, int]:
    """Closed-form cost predictions (partial report) for the adder families."""
    if n < 1:
        raise MetricsError("n must be positive")
    if family == "adder":
        return {
            "t_count": 14 * n,
            "t_depth": 6 * n,
            "qubit_cost": 2 * n + 2,
            "garbage_count": 0,
            "kq_t": 12 * n * n + 12 * n,
        }
    if family == "conditional_adder":
        return {
            "cnot_count": 30 * n + 7,
            "cnot_depth": 30 * n + 7,
            "qubit_cost": 2 * n + 3,
            "garbage_count": 0,
            "kq_cnot": 60 * n * n + 104 * n + 21,
        }
    raise MetricsError(f"unknown family {family!r}")
