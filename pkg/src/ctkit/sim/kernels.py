"""Kernel backend selection: compiled extension if importable, numpy otherwise.

Set CTKIT_PURE_PYTHON=1 to force the numpy fallback (used by the benchmark
and by CI environments without a compiler).
"""
from __future__ import annotations

import os

if os.environ.get("CTKIT_PURE_PYTHON"):
    from . import kernels_py as impl
else:
    try:
        from . import _kernels as impl  # type: ignore[attr-defined]
    except ImportError:
        from . import kernels_py as impl

BACKEND = impl.__name__.rsplit(".", 1)[-1]

apply_1q = impl.apply_1q
apply_phase = impl.apply_phase
apply_cnot = impl.apply_cnot
apply_cphase = impl.apply_cphase
apply_toffoli = impl.apply_toffoli
apply_fredkin = impl.apply_fredkin
