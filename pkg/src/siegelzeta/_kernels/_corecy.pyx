# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementation of the hot quadrature kernel."""

import numpy as np

cdef extern from "complex.h" nogil:
    double complex cexp(double complex)

BACKEND = "cython"


def weighted_exp_sum(
    double complex[::1] pref,
    double complex[::1] c1,
    double complex[::1] c2,
    double complex am,
    double[::1] w,
    double[::1] lw,
    double[::1] wt,
):
    """out[i] = sum_j wt[j] * exp(pref[i] - c2[i] w[j]^2/2 - c1[i] w[j] + am lw[j])."""
    cdef Py_ssize_t n = pref.shape[0]
    cdef Py_ssize_t m = w.shape[0]
    out_arr = np.empty(n, dtype=np.complex128)
    cdef double complex[::1] out = out_arr
    cdef Py_ssize_t i, j
    cdef double complex acc, e1, e2, p
    cdef double wj
    with nogil:
        for i in range(n):
            acc = 0
            p = pref[i]
            e1 = c1[i]
            e2 = c2[i]
            for j in range(m):
                wj = w[j]
                acc = acc + wt[j] * cexp(p - e2 * (0.5 * wj * wj) - e1 * wj + am * lw[j])
            out[i] = acc
    return out_arr
