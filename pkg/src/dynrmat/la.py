"""Small dense linear algebra over arbitrary scalar rings.

Matrices are numpy arrays.  Numeric work uses float/complex dtypes and
numpy's own routines; exact work uses dtype=object arrays whose entries are
Fractions, SqrtExt, or RatFunc values from :mod:`dynrmat.ring`.  numpy's
elementwise and matmul machinery handles object arrays fine, so only the
solvers need hand-rolled Gaussian elimination here.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np


def eye(n, one=1):
    """Identity matrix with a given ring unit on the diagonal."""
    if isinstance(one, (int, float, complex)) and not isinstance(one, bool):
        if isinstance(one, int):
            m = np.zeros((n, n), dtype=object)
            for i in range(n):
                m[i, i] = one
            return m
        return np.eye(n, dtype=type(one)) * one
    m = np.zeros((n, n), dtype=object)
    for i in range(n):
        m[i, i] = one
    return m


def zeros(shape):
    m = np.empty(shape, dtype=object)
    m[...] = 0
    return m


def kron(a, b):
    """Kronecker product; defers to numpy (works for object dtype too)."""
    return np.kron(a, b)


def permutation_matrix(n, dtype=object):
    """Flip operator P on C^n (x) C^n: P(v (x) w) = w (x) v."""
    if dtype is object:
        p = zeros((n * n, n * n))
        one = 1
    else:
        p = np.zeros((n * n, n * n), dtype=dtype)
        one = dtype(1) if dtype is not complex else 1.0 + 0j
    for a in range(n):
        for b in range(n):
            p[b * n + a, a * n + b] = one
    return p


def _is_exactly_zero(v):
    try:
        return not bool(v)
    except TypeError:
        return v == 0


def solve(a, b):
    """Exact solve A X = B by fraction-free-ish Gaussian elimination.

    A is (n, n), B is (n, m); both object arrays over a field.  Pivots are
    chosen as the first exactly-nonzero entry in each column.
    """
    a = np.array(a, dtype=object)
    b = np.array(b, dtype=object)
    n = a.shape[0]
    if b.ndim == 1:
        b = b.reshape(n, 1)
        squeeze = True
    else:
        squeeze = False
    for col in range(n):
        piv = None
        for row in range(col, n):
            if not _is_exactly_zero(a[row, col]):
                piv = row
                break
        if piv is None:
            raise ZeroDivisionError("singular matrix in exact solve")
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
            b[[col, piv]] = b[[piv, col]]
        inv = 1 / a[col, col] if not isinstance(a[col, col], Fraction) else Fraction(1) / a[col, col]
        a[col, :] = a[col, :] * inv
        b[col, :] = b[col, :] * inv
        for row in range(n):
            if row == col:
                continue
            f = a[row, col]
            if _is_exactly_zero(f):
                continue
            a[row, :] = a[row, :] - f * a[col, :]
            b[row, :] = b[row, :] - f * b[col, :]
    return b[:, 0] if squeeze else b


def inverse(a):
    """Exact inverse of a square object-dtype matrix."""
    a = np.asarray(a)
    n = a.shape[0]
    one = _unit_like(a)
    return solve(a.copy(), eye(n, one))


def _unit_like(a):
    for v in a.flat:
        if not _is_exactly_zero(v):
            return v / v
    return 1


def sup_norm(a):
    """Largest absolute value of any entry (entries must support abs)."""
    flat = np.asarray(a).ravel()
    return max((abs(complex(v)) if isinstance(v, (int, float, complex))
                else abs(v)) for v in flat) if flat.size else 0.0


def to_float(a):
    """Convert an exact matrix to float entrywise (via ``float``)."""
    a = np.asarray(a)
    out = np.empty(a.shape, dtype=float)
    for idx, v in np.ndenumerate(a):
        out[idx] = float(v)
    return out


def mat_equal(a, b):
    """Exact entrywise equality for object matrices."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        return False
    for idx in np.ndindex(a.shape):
        if not _is_exactly_zero(a[idx] - b[idx]):
            return False
    return True
