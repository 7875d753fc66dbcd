# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Dense linear algebra mod p, compiled backend.

Same contract as `_pycore`: int64 matrices with entries in [0, p), small
prime modulus.  The elimination loops are the hot path of the exact rank
computations, hence the C implementation.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND = "cython"

ctypedef cnp.int64_t i64


def matmul(cnp.ndarray[i64, ndim=2] a, cnp.ndarray[i64, ndim=2] b, long p):
    cdef Py_ssize_t n = a.shape[0], k = a.shape[1], m = b.shape[1]
    cdef cnp.ndarray[i64, ndim=2] out = np.zeros((n, m), dtype=np.int64)
    cdef Py_ssize_t i, j, t
    cdef i64 acc, aik
    cdef i64 cap = (<i64>1 << 62) - <i64>p * p
    for i in range(n):
        for j in range(m):
            acc = 0
            for t in range(k):
                acc += a[i, t] * b[t, j]
                if acc >= cap:
                    acc %= p
            out[i, j] = acc % p
    return out


cdef long _modinv(long x, long p):
    cdef long r = 1, b = x % p, e = p - 2
    while e:
        if e & 1:
            r = (r * b) % p
        b = (b * b) % p
        e >>= 1
    return r


def rref(cnp.ndarray[i64, ndim=2] m, long p, limit=None):
    """Reduced row echelon form; pivots restricted to the first `limit` cols."""
    cdef cnp.ndarray[i64, ndim=2] a = m.copy()
    cdef Py_ssize_t rows = a.shape[0], cols = a.shape[1]
    cdef Py_ssize_t lim = cols if limit is None else <Py_ssize_t>limit
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef i64 invp, f, tmp
    pivots = []
    for c in range(lim):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(cols):
                tmp = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = tmp
        invp = _modinv(<long>a[r, c], p)
        for j in range(cols):
            a[r, j] = (a[r, j] * invp) % p
        for i in range(rows):
            if i == r:
                continue
            f = a[i, c]
            if f == 0:
                continue
            for j in range(cols):
                a[i, j] = (a[i, j] - f * a[r, j]) % p
                if a[i, j] < 0:
                    a[i, j] += p
        pivots.append(c)
        r += 1
    return a, r, pivots


def rank(cnp.ndarray[i64, ndim=2] m, long p):
    """Rank via forward elimination only (cheaper than full rref)."""
    cdef cnp.ndarray[i64, ndim=2] a = m.copy()
    cdef Py_ssize_t rows = a.shape[0], cols = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef i64 invp, f, tmp
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, cols):
                tmp = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = tmp
        invp = _modinv(<long>a[r, c], p)
        for j in range(c, cols):
            a[r, j] = (a[r, j] * invp) % p
        for i in range(r + 1, rows):
            f = a[i, c]
            if f == 0:
                continue
            for j in range(c, cols):
                a[i, j] = (a[i, j] - f * a[r, j]) % p
                if a[i, j] < 0:
                    a[i, j] += p
        r += 1
    return r


def solve(a, b, p):
    """One exact solution of a x = b, free variables zero; None if none."""
    rows, n = a.shape
    b = np.asarray(b, dtype=np.int64)
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
