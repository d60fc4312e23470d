"""Command-line surface: build, metrics, simulate, verify, lower, rotate.

Exit codes: 0 success, 1 operation/verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import arithmetic, pgm, qasm, rotation, verify
from .ir import Circuit, Gate, GateKind, extend, new_circuit, primary_input
from .lowering import LoweringError, lower
from .metrics import (
    DepthConvention,
    MetricsError,
    nisq_check,
    resource_report,
)
from .qft import build_qft
from .sim import (
    ClassicalSimError,
    SimulationError,
    basis_state,
    is_classical,
    measure,
    run_classical,
    run_statevector,
)


class UsageError(ValueError):
    pass


def _gate_family(kind: GateKind) -> Circuit:
    circuit = new_circuit(
        3, {"q": (0, 1, 2)}, {q: primary_input("q", q) for q in range(3)}
    )
    return extend(circuit, [Gate(kind, (0, 1, 2))])


def _build_family(family: str, args) -> Circuit:
    n = getattr(args, "n", None)
    parameterized = {
        "adder": arithmetic.build_adder,
        "subtractor": arithmetic.build_subtractor,
        "addsub": arithmetic.build_addsub,
        "cond-adder": arithmetic.build_conditional_adder,
        "multiplier": arithmetic.build_multiplier,
        "divider": arithmetic.build_divider,
        "qft": build_qft,
    }
    if family in parameterized:
        if n is None:
            raise UsageError(f"family {family!r} requires --n")
        return parameterized[family](n)
    if family == "shear":
        if n is None:
            raise UsageError("family 'shear' requires --n")
        frac = getattr(args, "frac", None)
        axis = getattr(args, "axis", "horizontal")
        case = getattr(args, "case", "le_ref")
        return rotation.build_shear_circuit(
            axis, case, n, frac if frac is not None else min(2, n)
        )
    if family == "toffoli":
        return _gate_family(GateKind.TOFFOLI)
    if family == "fredkin":
        return _gate_family(GateKind.FREDKIN)
    raise UsageError(f"unknown family {family!r}")


FAMILIES = (
    "adder",
    "subtractor",
    "addsub",
    "cond-adder",
    "multiplier",
    "divider",
    "qft",
    "shear",
    "toffoli",
    "fredkin",
)


def _load_circuit(source: str, args) -> tuple[Circuit, str, int | None, bool]:
    """Resolve a <file|family> argument to (circuit, label, n, roles_known).

    Files without a role sidecar parse with every qubit defaulted to a primary
    input; `roles_known` is False then, and garbage accounting stays
    undetermined rather than trusting the guess.
    """
    if source in FAMILIES:
        return _build_family(source, args), source, getattr(args, "n", None), True
    path = Path(source)
    if not path.exists():
        raise UsageError(f"{source!r} is neither a family nor an existing file")
    circuit = qasm.parse_qasm(path.read_text())
    sidecar = path.with_suffix(path.suffix + ".roles.json")
    roles_known = sidecar.exists()
    if roles_known:
        inputs, outputs = qasm.parse_roles_sidecar(sidecar.read_text())
        circuit.input_roles.update(inputs)
        circuit.declared_outputs = outputs
    return circuit, path.name, getattr(args, "n", None), roles_known


def _format_report(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    width = max(len(k) for k in payload)
    lines = [f"{key.ljust(width)}  {payload[key]}" for key in sorted(payload)]
    return "\n".join(lines) + "\n"


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ctkit")
    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", help="emit a builder circuit as OpenQASM")
    build.add_argument("family", choices=FAMILIES)
    build.add_argument("--n", type=int)
    build.add_argument("--out")
    build.add_argument("--axis", choices=("horizontal", "vertical"), default="horizontal")
    build.add_argument("--case", choices=("le_ref", "gt_ref"), default="le_ref")
    build.add_argument("--frac", type=int)

    metrics_p = sub.add_parser("metrics", help="resource report for a circuit")
    metrics_p.add_argument("source", metavar="file|family")
    metrics_p.add_argument("--n", type=int)
    metrics_p.add_argument(
        "--convention", choices=("scheduled", "serial"), default="scheduled"
    )
    metrics_p.add_argument("--format", choices=("json", "table"), default="json")
    metrics_p.add_argument("--epsilon", type=float)
    metrics_p.add_argument(
        "--fidelity-convention", choices=("paper", "standard"), default="paper"
    )
    metrics_p.add_argument("--axis", choices=("horizontal", "vertical"), default="horizontal")
    metrics_p.add_argument("--case", choices=("le_ref", "gt_ref"), default="le_ref")
    metrics_p.add_argument("--frac", type=int)

    simulate = sub.add_parser("simulate", help="run a circuit on a basis input")
    simulate.add_argument("file", metavar="file|family")
    simulate.add_argument("--n", type=int)
    simulate.add_argument("--input", help="little-endian bit string, qubit i = char i")
    simulate.add_argument("--state", help="JSON file with [re, im] amplitude pairs")
    simulate.add_argument("--shots", type=int)
    simulate.add_argument("--seed", type=int, default=0)

    verify_p = sub.add_parser("verify", help="run the exhaustive oracle suite")
    verify_p.add_argument("family", choices=FAMILIES)
    verify_p.add_argument("--n", type=int, default=2)

    lower_p = sub.add_parser("lower", help="lower Toffoli/Fredkin to Clifford+T")
    lower_p.add_argument("file", metavar="file|family")
    lower_p.add_argument("--n", type=int)
    lower_p.add_argument("--out")

    rotate = sub.add_parser("rotate", help="three-shear rotation of a P2 image")
    rotate.add_argument("--size", type=int, required=True)
    rotate.add_argument("--theta", type=float, required=True, help="degrees")
    rotate.add_argument("--frac", type=int, required=True)
    rotate.add_argument("--in", dest="infile", required=True)
    rotate.add_argument("--out", dest="outfile", required=True)
    return parser


def _cmd_build(args) -> tuple[int, str]:
    circuit = _build_family(args.family, args)
    text = qasm.emit_qasm(circuit)
    if args.out:
        Path(args.out).write_text(text)
        Path(args.out + ".roles.json").write_text(qasm.roles_sidecar(circuit))
        return 0, ""
    return 0, text


def _cmd_metrics(args) -> tuple[int, str]:
    circuit, label, n, roles_known = _load_circuit(args.source, args)
    lowered = lower(circuit)
    convention = (
        DepthConvention.SERIAL_BLOCK
        if args.convention == "serial"
        else DepthConvention.SCHEDULED
    )
    report = resource_report(lowered, convention)
    payload = report.to_dict()
    if not roles_known:
        payload["garbage_count"] = "undetermined"
    payload.update({"family": label, "n": n, "convention": args.convention})
    if args.epsilon is not None:
        if report.fidelity_A is None:
            raise MetricsError("empty circuit has no fidelity estimate")
        payload["epsilon"] = args.epsilon
        payload["verdict"] = nisq_check(
            report.fidelity_A, args.epsilon, args.fidelity_convention
        ).value
    return 0, _format_report(payload, args.format)


def _cmd_simulate(args) -> tuple[int, str]:
    circuit, _, _, _ = _load_circuit(args.file, args)
    if (args.input is None) == (args.state is None):
        raise UsageError("simulate needs exactly one of --input or --state")
    if args.input is not None:
        bits = [int(c) for c in args.input.strip()]
        if len(bits) != circuit.n_qubits or any(b not in (0, 1) for b in bits):
            raise UsageError(
                f"--input must be {circuit.n_qubits} binary digits"
            )
        if is_classical(circuit) and not args.shots:
            out = run_classical(circuit, bits)
            return 0, "".join(str(b) for b in out) + "\n"
        index = sum(b << i for i, b in enumerate(bits))
        state = basis_state(circuit.n_qubits, index)
    else:
        pairs = json.loads(Path(args.state).read_text())
        state = [complex(re, im) for re, im in pairs]
    final = run_statevector(circuit, state)
    probs, histogram = measure(final, args.shots or 1, args.seed)
    payload = {
        "distribution": {
            format(i, f"0{circuit.n_qubits}b")[::-1]: round(float(p), 12)
            for i, p in enumerate(probs)
            if p > 1e-12
        },
    }
    if args.shots:
        payload["histogram"] = {
            format(i, f"0{circuit.n_qubits}b")[::-1]: c
            for i, c in sorted(histogram.items())
        }
    return 0, json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _cmd_verify(args) -> tuple[int, str]:
    failures = verify.verify_family(args.family, args.n)
    if failures:
        shown = "\n".join(failures[:20])
        return 1, f"FAIL {args.family} n={args.n}\n{shown}\n"
    return 0, f"ok {args.family} n={args.n}\n"


def _cmd_lower(args) -> tuple[int, str]:
    circuit, _, _, _ = _load_circuit(args.file, args)
    text = qasm.emit_qasm(lower(circuit))
    if args.out:
        Path(args.out).write_text(text)
        return 0, ""
    return 0, text


def _cmd_rotate(args) -> tuple[int, str]:
    grid = pgm.read_pgm(Path(args.infile).read_text())
    if grid.shape != (args.size, args.size):
        raise UsageError(
            f"--size {args.size} does not match image shape {grid.shape}"
        )
    rotated = rotation.rotate_image(grid, math.radians(args.theta), args.frac)
    Path(args.outfile).write_text(pgm.write_pgm(rotated, int(grid.max(initial=1))))
    return 0, ""


def run_cli(argv: list[str]) -> tuple[int, str]:
    """Dispatch one invocation; returns (exit code, stdout text)."""
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), ""
    handlers = {
        "build": _cmd_build,
        "metrics": _cmd_metrics,
        "simulate": _cmd_simulate,
        "verify": _cmd_verify,
        "lower": _cmd_lower,
        "rotate": _cmd_rotate,
    }
    try:
        return handlers[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2, ""
    except (
        LoweringError,
        MetricsError,
        ClassicalSimError,
        SimulationError,
        qasm.QasmError,
        pgm.PgmError,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1, ""


def main() -> int:
    code, out = run_cli(sys.argv[1:])
    if out:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
