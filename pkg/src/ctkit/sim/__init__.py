"""Classical bitvector and dense statevector simulators."""
from .classical import (
    ClassicalSimError,
    bits_to_int,
    int_to_bits,
    is_classical,
    run_classical,
    run_classical_sweep,
)
from .kernels import BACKEND
from .statevector import (
    QUBIT_LIMIT,
    SimulationError,
    UNITARY_LIMIT,
    basis_state,
    measure,
    run_statevector,
    unitary_of,
)

__all__ = [
    "BACKEND",
    "ClassicalSimError",
    "QUBIT_LIMIT",
    "SimulationError",
    "UNITARY_LIMIT",
    "basis_state",
    "bits_to_int",
    "int_to_bits",
    "is_classical",
    "measure",
    "run_classical",
    "run_classical_sweep",
    "run_statevector",
    "unitary_of",
]
