"""Pure numpy statevector kernels (fallback for the compiled extension).

All kernels mutate the amplitude array in place. Index convention is
little-endian: basis index b has qubit i equal to bit i of b.
"""
from __future__ import annotations

import numpy as np


def apply_1q(amp: np.ndarray, n: int, q: int, m00, m01, m10, m11) -> None:
    view = amp.reshape(1 << (n - q - 1), 2, 1 << q)
    lo = view[:, 0, :].copy()
    hi = view[:, 1, :]
    view[:, 0, :] = m00 * lo + m01 * hi
    view[:, 1, :] = m10 * lo + m11 * hi


def apply_phase(amp: np.ndarray, n: int, q: int, phase) -> None:
    view = amp.reshape(1 << (n - q - 1), 2, 1 << q)
    view[:, 1, :] *= phase


def apply_cnot(amp: np.ndarray, n: int, c: int, t: int) -> None:
    idx = np.arange(1 << n)
    on = ((idx >> c) & 1) == 1
    src = idx[on]
    amp[src] = amp[src ^ (1 << t)]


def apply_cphase(amp: np.ndarray, n: int, c: int, t: int, phase) -> None:
    idx = np.arange(1 << n)
    both = (((idx >> c) & 1) & ((idx >> t) & 1)) == 1
    amp[both] *= phase


def apply_toffoli(amp: np.ndarray, n: int, c1: int, c2: int, t: int) -> None:
    idx = np.arange(1 << n)
    on = (((idx >> c1) & 1) & ((idx >> c2) & 1)) == 1
    src = idx[on]
    amp[src] = amp[src ^ (1 << t)]


def apply_fredkin(amp: np.ndarray, n: int, c: int, a: int, b: int) -> None:
    idx = np.arange(1 << n)
    on = (((idx >> c) & 1) == 1) & (((idx >> a) & 1) != ((idx >> b) & 1))
    src = idx[on]
    amp[src] = amp[src ^ (1 << a) ^ (1 << b)]
