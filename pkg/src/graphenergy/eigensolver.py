"""Dense symmetric eigenvalue solver.

Householder tridiagonalization followed by implicit-shift QL iteration,
eigenvalues only.  The kernels are plain loops compiled with numba
(``nogil`` so trials can run on real threads).
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit

__all__ = ["symmetric_eigvals", "EigenSolverError", "MAX_QL_ITER"]

MAX_QL_ITER = 64
_EPS = float(np.finfo(np.float64).eps)


class EigenSolverError(RuntimeError):
    """QL iteration failed to converge; signals a numerical bug."""


@njit(cache=True, nogil=True)
def _tridiagonalize(a):
    # Householder reduction of a symmetric matrix (lower triangle used,
    # destroyed in place).  Returns diagonal d and subdiagonal e (e[0] = 0).
    n = a.shape[0]
    d = np.zeros(n)
    e = np.zeros(n)
    for i in range(n - 1, 0, -1):
        l = i - 1
        h = 0.0
        if l > 0:
            scale = 0.0
            for k in range(l + 1):
                scale += abs(a[i, k])
            if scale == 0.0:
                e[i] = a[i, l]
            else:
                for k in range(l + 1):
                    a[i, k] /= scale
                    h += a[i, k] * a[i, k]
                f = a[i, l]
                g = -math.sqrt(h) if f >= 0.0 else math.sqrt(h)
                e[i] = scale * g
                h -= f * g
                a[i, l] = f - g
                f = 0.0
                for j in range(l + 1):
                    g = 0.0
                    for k in range(j + 1):
                        g += a[j, k] * a[i, k]
                    for k in range(j + 1, l + 1):
                        g += a[k, j] * a[i, k]
                    e[j] = g / h
                    f += e[j] * a[i, j]
                hh = f / (h + h)
                for j in range(l + 1):
                    f = a[i, j]
                    g = e[j] - hh * f
                    e[j] = g
                    for k in range(j + 1):
                        a[j, k] -= f * e[k] + g * a[i, k]
        else:
            e[i] = a[i, l]
    e[0] = 0.0
    for i in range(n):
        d[i] = a[i, i]
    return d, e


@njit(cache=True, nogil=True)
def _ql_implicit(d, e, max_iter):
    # Implicit-shift QL on a tridiagonal matrix; eigenvalues land in d.
    # Returns False on non-convergence.
    n = d.shape[0]
    for i in range(1, n):
        e[i - 1] = e[i]
    e[n - 1] = 0.0
    # Absolute deflation floor: without it, a tiny e[m] between two near-zero
    # diagonal entries (common for sparse graphs with large null spaces) can
    # never pass a purely relative test and the sweep cap trips.
    anorm = 0.0
    for i in range(n):
        row = abs(d[i]) + abs(e[i])
        if i > 0:
            row += abs(e[i - 1])
        if row > anorm:
            anorm = row
    floor = _EPS * anorm
    for l in range(n):
        it = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= max(_EPS * dd, floor):
                    break
                m += 1
            if m == l:
                break
            it += 1
            if it > max_iter:
                return False
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + (r if g >= 0.0 else -r))
            s = 1.0
            c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    # rotation annihilated early; restart the sweep
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return True


def symmetric_eigvals(matrix: np.ndarray) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix, sorted descending."""
    a = np.array(matrix, dtype=np.float64, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n == 0:
        return np.empty(0)
    if n == 1:
        return a[0].copy()
    d, e = _tridiagonalize(a)
    if not _ql_implicit(d, e, MAX_QL_ITER):
        raise EigenSolverError(
            f"QL iteration exceeded {MAX_QL_ITER} sweeps on a {n}x{n} matrix"
        )
    return np.sort(d)[::-1]
