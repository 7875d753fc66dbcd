"""Dense linear algebra mod p, numpy backend.

Fallback used when the compiled extension is unavailable.  All matrices are
C-contiguous int64 arrays with entries already reduced into [0, p).  Results
are new arrays in the same normal form.
"""

import numpy as np

BACKEND = "numpy"


def matmul(a, b, p):
    # int64 is safe: entries < p <= 2**31 would overflow a plain dot, so for
    # large p we chunk the accumulation; the fields used here have tiny p.
    if p <= 3037000499:
        return (a.astype(np.int64) @ b.astype(np.int64)) % p
    raise ValueError("modulus too large for the int64 backend")


def rref(m, p, limit=None):
    """Reduced row echelon form in place on a copy.

    Pivots are searched only among the first `limit` columns (all columns by
    default).  Returns (matrix, rank, pivot column list).
    """
    a = m.copy()
    rows, cols = a.shape
    if limit is None:
        limit = cols
    pivots = []
    r = 0
    for c in range(limit):
        if r == rows:
            break
        col = a[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        # eliminate the column everywhere else in one vectorized sweep
        factors = a[:, c].copy()
        factors[r] = 0
        a -= np.outer(factors, a[r])
        a %= p
        pivots.append(c)
        r += 1
    return a, r, pivots


def rank(m, p):
    return rref(m, p)[1]


def solve(a, b, p):
    """One exact solution of a x = b with free variables set to zero.

    Returns None when the system is inconsistent.
    """
    rows, n = a.shape
    if b.ndim == 1:
        b = b.reshape(-1, 1)
    m = np.hstack([a, b]) % p
    red, rk, pivots = rref(m, p, limit=n)
    if np.any(red[rk:, n:]):
        return None
    x = np.zeros((n, b.shape[1]), dtype=np.int64)
    for row, c in enumerate(pivots):
        x[c] = red[row, n:]
    return x


def inv(a, p):
    n = a.shape[0]
    x = solve(a, np.eye(n, dtype=np.int64), p)
    if x is None:
        return None
    if np.any((matmul(a, x, p) - np.eye(n, dtype=np.int64)) % p):
        return None
    return x
