"""Exact dimension of the derivation Lie algebra over a prime field.

A linear map L on the 27-dimensional algebra is a derivation iff
L(X o Y) = L(X) o Y + X o L(Y) on all basis pairs.  Writing L as a 27x27
unknown matrix gives 378 * 27 linear equations in 729 unknowns; the
dimension is 729 minus the exact rank, computed mod p in the kernel
backend.  The expected value is 52.
"""

import numpy as np

from . import _kernels
from .albert import DIM, jordan_tensor
from .fields import PrimeField


def derivation_dimension(field):
    if not isinstance(field, PrimeField):
        raise ValueError("the exhaustive rank computation is restricted to prime fields")
    p = field.p
    C = jordan_tensor(field)
    pairs = [(i, j) for i in range(DIM) for j in range(i, DIM)]
    rows = np.zeros((len(pairs) * DIM, DIM * DIM), dtype=np.int64)
    r = 0
    for i, j in pairs:
        cij = C[i][j]
        for m in range(DIM):
            row = rows[r]
            base = DIM * m
            for a in range(DIM):
                v = cij[a]
                if v:
                    row[base + a] = (row[base + a] + v) % p
            for b in range(DIM):
                v = C[b][j][m]
                if v:
                    row[DIM * b + i] = (row[DIM * b + i] - v) % p
                w = C[b][i][m]
                if w:
                    row[DIM * b + j] = (row[DIM * b + j] - w) % p
            r += 1
    rows %= p
    rank = int(_kernels.rank(rows, p))
    return DIM * DIM - rank
