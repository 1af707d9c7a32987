# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner kernels: L1 weights, history sums, tridiagonal solves.

Same contracts as fracdyn._l1core_py; this is the hot path.
"""

from libc.math cimport pow

import numpy as np


def l1_weight_vector(double alpha, Py_ssize_t n):
    """Weights b_j = (j+1)^(1-alpha) - j^(1-alpha), j = 0..n-1."""
    if n < 1:
        raise ValueError("need n >= 1")
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] b = out
    cdef double e = 1.0 - alpha
    cdef double prev = 0.0
    cdef double cur
    cdef Py_ssize_t j
    for j in range(n):
        cur = pow(j + 1.0, e)
        b[j] = cur - prev
        prev = cur
    return out


def weighted_history(double[::1] b, double[::1] dx):
    """sum_j b[j] * dx[m-1-j] over j = 0..m-1, with m = len(dx) = len(b)."""
    cdef Py_ssize_t m = dx.shape[0]
    if b.shape[0] != m:
        raise ValueError("b and dx must have equal length")
    cdef double s = 0.0
    cdef Py_ssize_t j
    for j in range(m):
        s += b[j] * dx[m - 1 - j]
    return s


def weighted_history_rows(double[::1] b, double[:, ::1] du):
    """Row-vector version: out[i] = sum_j b[j] * du[m-1-j, i]."""
    cdef Py_ssize_t m = du.shape[0]
    cdef Py_ssize_t ncol = du.shape[1]
    if b.shape[0] != m:
        raise ValueError("b and du must have equal first dimension")
    out = np.zeros(ncol, dtype=np.float64)
    cdef double[::1] o = out
    cdef double w
    cdef Py_ssize_t j, i, row
    for j in range(m):
        w = b[j]
        row = m - 1 - j
        for i in range(ncol):
            o[i] += w * du[row, i]
    return out


def thomas(double[::1] lower, double[::1] diag, double[::1] upper, double[::1] rhs):
    """Thomas algorithm; lower/upper hold the n-1 off-diagonal entries."""
    cdef Py_ssize_t n = diag.shape[0]
    if lower.shape[0] != n - 1 or upper.shape[0] != n - 1 or rhs.shape[0] != n:
        raise ValueError("inconsistent tridiagonal system shapes")
    cp_arr = np.empty(n, dtype=np.float64)
    dp_arr = np.empty(n, dtype=np.float64)
    x_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] cp = cp_arr
    cdef double[::1] dp = dp_arr
    cdef double[::1] x = x_arr
    cdef double piv = diag[0]
    cdef Py_ssize_t i
    if piv == 0.0:
        raise ZeroDivisionError("zero pivot in tridiagonal solve")
    cp[0] = upper[0] / piv if n > 1 else 0.0
    dp[0] = rhs[0] / piv
    for i in range(1, n):
        piv = diag[i] - lower[i - 1] * cp[i - 1]
        if piv == 0.0:
            raise ZeroDivisionError("zero pivot in tridiagonal solve")
        cp[i] = upper[i] / piv if i < n - 1 else 0.0
        dp[i] = (rhs[i] - lower[i - 1] * dp[i - 1]) / piv
    x[n - 1] = dp[n - 1]
    for i in range(n - 2, -1, -1):
        x[i] = dp[i] - cp[i] * x[i + 1]
    return x_arr
