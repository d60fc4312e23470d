# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled statevector kernels. Same contracts as kernels_py (in place,
little-endian indices)."""


def apply_1q(complex[::1] amp, int n, int q, complex m00, complex m01,
             complex m10, complex m11):
    cdef long half = 1 << (n - 1)
    cdef long low_mask = (1 << q) - 1
    cdef long i, i0, i1
    cdef complex x, y
    for i in range(half):
        i0 = ((i & ~low_mask) << 1) | (i & low_mask)
        i1 = i0 | (1 << q)
        x = amp[i0]
        y = amp[i1]
        amp[i0] = m00 * x + m01 * y
        amp[i1] = m10 * x + m11 * y


def apply_phase(complex[::1] amp, int n, int q, complex phase):
    cdef long size = 1 << n
    cdef long bit = 1 << q
    cdef long i
    for i in range(size):
        if i & bit:
            amp[i] = amp[i] * phase


def apply_cnot(complex[::1] amp, int n, int c, int t):
    cdef long size = 1 << n
    cdef long cbit = 1 << c
    cdef long tbit = 1 << t
    cdef long i, j
    cdef complex tmp
    for i in range(size):
        # visit each control-on pair once, from its t=0 member
        if (i & cbit) and not (i & tbit):
            j = i | tbit
            tmp = amp[i]
            amp[i] = amp[j]
            amp[j] = tmp


def apply_cphase(complex[::1] amp, int n, int c, int t, complex phase):
    cdef long size = 1 << n
    cdef long mask = (1 << c) | (1 << t)
    cdef long i
    for i in range(size):
        if (i & mask) == mask:
            amp[i] = amp[i] * phase


def apply_toffoli(complex[::1] amp, int n, int c1, int c2, int t):
    cdef long size = 1 << n
    cdef long cmask = (1 << c1) | (1 << c2)
    cdef long tbit = 1 << t
    cdef long i, j
    cdef complex tmp
    for i in range(size):
        if (i & cmask) == cmask and not (i & tbit):
            j = i | tbit
            tmp = amp[i]
            amp[i] = amp[j]
            amp[j] = tmp


def apply_fredkin(complex[::1] amp, int n, int c, int a, int b):
    cdef long size = 1 << n
    cdef long cbit = 1 << c
    cdef long abit = 1 << a
    cdef long bbit = 1 << b
    cdef long i, j
    cdef complex tmp
    for i in range(size):
        if (i & cbit) and (i & abit) and not (i & bbit):
            j = (i ^ abit) | bbit
            tmp = amp[i]
            amp[i] = amp[j]
            amp[j] = tmp
