"""Pure-numpy implementations of the inner kernels.

Fallback used when the compiled extension is unavailable (or when
FRACDYN_PURE is set).  Semantics match fracdyn._l1core exactly.
"""

import numpy as np


def l1_weight_vector(alpha, n):
    """Weights b_j = (j+1)^(1-alpha) - j^(1-alpha), j = 0..n-1."""
    if n < 1:
        raise ValueError("need n >= 1")
    p = np.arange(n + 1, dtype=np.float64) ** (1.0 - alpha)
    return p[1:] - p[:-1]


def weighted_history(b, dx):
    """sum_j b[j] * dx[m-1-j] over j = 0..m-1, with m = len(dx) = len(b)."""
    b = np.ascontiguousarray(b, dtype=np.float64)
    dx = np.ascontiguousarray(dx, dtype=np.float64)
    if b.shape[0] != dx.shape[0]:
        raise ValueError("b and dx must have equal length")
    if dx.shape[0] == 0:
        return 0.0
    return float(b[::-1] @ dx)


def weighted_history_rows(b, du):
    """Row-vector version: out[i] = sum_j b[j] * du[m-1-j, i]."""
    b = np.ascontiguousarray(b, dtype=np.float64)
    du = np.ascontiguousarray(du, dtype=np.float64)
    if b.shape[0] != du.shape[0]:
        raise ValueError("b and du must have equal first dimension")
    if du.shape[0] == 0:
        return np.zeros(du.shape[1])
    return b[::-1] @ du


def thomas(lower, diag, upper, rhs):
    """Solve a tridiagonal system by the Thomas algorithm.

    lower/upper hold the n-1 off-diagonal entries, diag and rhs have
    length n.  Raises ZeroDivisionError on a zero pivot.
    """
    diag = np.asarray(diag, dtype=np.float64)
    lower = np.asarray(lower, dtype=np.float64)
    upper = np.asarray(upper, dtype=np.float64)
    rhs = np.asarray(rhs, dtype=np.float64)
    n = diag.shape[0]
    if lower.shape[0] != n - 1 or upper.shape[0] != n - 1 or rhs.shape[0] != n:
        raise ValueError("inconsistent tridiagonal system shapes")
    cp = np.empty(n)
    dp = np.empty(n)
    piv = diag[0]
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
    x = np.empty(n)
    x[n - 1] = dp[n - 1]
    for i in range(n - 2, -1, -1):
        x[i] = dp[i] - cp[i] * x[i + 1]
    return x
