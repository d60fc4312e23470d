"""Clifford+T reversible-arithmetic toolkit.

Circuit builders for quantum adders, multipliers, dividers, the QFT, and a
three-shear image-rotation datapath, with simulators, resource metrics under
two depth conventions, and an OpenQASM 2.0 subset interchange format.
"""
from .arithmetic import (
    build_adder,
    build_addsub,
    build_conditional_adder,
    build_divider,
    build_multiplier,
    build_subtractor,
    nonrestoring_reference,
)
from .ir import (
    Block,
    Circuit,
    CircuitError,
    Gate,
    GateKind,
    QubitRole,
    RoleKind,
    new_circuit,
)
from .lowering import (
    LoweringError,
    bennett_wrap,
    fredkin_cliffordT,
    lower,
    toffoli_cliffordT,
)
from .metrics import (
    DepthConvention,
    MetricsError,
    ResourceReport,
    Verdict,
    classify_outputs,
    nisq_check,
    predicted_report,
    qubit_costs,
    resource_report,
)
from .qasm import QasmError, emit_qasm, parse_qasm, structurally_equal
from .qft import build_qft, dft_matrix
from .rotation import (
    FixedPointFormat,
    PixelCoord,
    ShearParams,
    build_shear_circuit,
    rotate3_functional,
    rotate_image,
    shear_functional,
    shear_params,
)
from .sim import (
    BACKEND,
    ClassicalSimError,
    SimulationError,
    basis_state,
    is_classical,
    measure,
    run_classical,
    run_statevector,
    unitary_of,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Block",
    "Circuit",
    "CircuitError",
    "ClassicalSimError",
    "DepthConvention",
    "FixedPointFormat",
    "Gate",
    "GateKind",
    "LoweringError",
    "MetricsError",
    "PixelCoord",
    "QasmError",
    "QubitRole",
    "ResourceReport",
    "RoleKind",
    "ShearParams",
    "SimulationError",
    "Verdict",
    "basis_state",
    "bennett_wrap",
    "build_adder",
    "build_addsub",
    "build_conditional_adder",
    "build_divider",
    "build_multiplier",
    "build_qft",
    "build_shear_circuit",
    "build_subtractor",
    "classify_outputs",
    "dft_matrix",
    "emit_qasm",
    "fredkin_cliffordT",
    "is_classical",
    "lower",
    "measure",
    "new_circuit",
    "nisq_check",
    "nonrestoring_reference",
    "parse_qasm",
    "predicted_report",
    "qubit_costs",
    "resource_report",
    "rotate3_functional",
    "rotate_image",
    "run_classical",
    "run_statevector",
    "shear_functional",
    "shear_params",
    "structurally_equal",
    "toffoli_cliffordT",
    "unitary_of",
    "__version__",
]
