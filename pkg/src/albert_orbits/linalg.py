"""Dense exact matrices over the rationals or a prime field.

Over the rationals, elimination is fraction-free (Bareiss) on an
integer-scaled copy, which bounds intermediate growth; over F_p the
elimination runs in the selected kernel backend (compiled or numpy).
Linear solves return the solution with free variables set to zero, or
None when the system is inconsistent.
"""

from fractions import Fraction
from math import lcm

import numpy as np

from . import _kernels
from .fields import QQ, PrimeField, same_field


class DimensionError(ValueError):
    pass


class SingularMatrixError(ValueError):
    pass


class Mat:
    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field, data):
        self.field = field
        self.data = [list(r) for r in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.rows else 0
        for r in self.data:
            if len(r) != self.cols:
                raise DimensionError("ragged rows")

    # -- constructors -------------------------------------------------

    @classmethod
    def identity(cls, field, n):
        one, zero = field.one(), field.zero()
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field, r, c):
        zero = field.zero()
        return cls(field, [[zero] * c for _ in range(r)])

    @classmethod
    def from_int_rows(cls, field, data):
        return cls(field, [[field.of_int(v) for v in row] for row in data])

    def copy(self):
        return Mat(self.field, self.data)

    # -- basic algebra ------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if self.field != other.field or self.rows != other.rows or self.cols != other.cols:
            return False
        eq = self.field.eq
        return all(
            eq(self.data[i][j], other.data[i][j])
            for i in range(self.rows)
            for j in range(self.cols)
        )

    def __hash__(self):
        raise TypeError("Mat is unhashable")

    def add(self, other):
        self._check_same_shape(other)
        f = self.field
        return Mat(f, [[f.add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)])

    def sub(self, other):
        self._check_same_shape(other)
        f = self.field
        return Mat(f, [[f.sub(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)])

    def scale(self, c):
        f = self.field
        return Mat(f, [[f.mul(c, a) for a in row] for row in self.data])

    def transpose(self):
        return Mat(self.field, [list(col) for col in zip(*self.data)])

    def mul(self, other):
        f = same_field(self.field, other.field)
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        if isinstance(f, PrimeField) and self.rows * other.cols >= 1024:
            out = _kernels.matmul(self._np(), other._np(), f.p)
            return Mat(f, out.tolist())
        bt = list(zip(*other.data))
        mulf, addf, zero = f.mul, f.add, f.zero()
        out = []
        for ra in self.data:
            row = []
            for cb in bt:
                acc = zero
                for a, b in zip(ra, cb):
                    acc = addf(acc, mulf(a, b))
                row.append(acc)
            out.append(row)
        return Mat(f, out)

    def apply(self, vec):
        """Matrix-vector product on a plain list of scalars."""
        if len(vec) != self.cols:
            raise DimensionError("vector length mismatch")
        f = self.field
        mulf, addf, zero = f.mul, f.add, f.zero()
        out = []
        for row in self.data:
            acc = zero
            for a, v in zip(row, vec):
                acc = addf(acc, mulf(a, v))
            out.append(acc)
        return out

    def is_zero(self):
        z = self.field.is_zero
        return all(z(a) for row in self.data for a in row)

    def _check_same_shape(self, other):
        same_field(self.field, other.field)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("shape mismatch")

    def _np(self):
        return np.array(self.data, dtype=np.int64)

    # -- elimination --------------------------------------------------

    def det(self):
        if self.rows != self.cols:
            raise DimensionError("determinant of a non-square matrix")
        f = self.field
        if isinstance(f, PrimeField):
            return _modp_det(self.data, f.p)
        num, scale = _int_scaled(self.data)
        d, npiv = _bareiss_det(num)
        if npiv < self.rows:
            return Fraction(0)
        return Fraction(d) * scale

    def rank(self):
        f = self.field
        if isinstance(f, PrimeField):
            return int(_kernels.rank(self._np(), f.p))
        num, _ = _int_scaled(self.data)
        pivots, _ = _bareiss_forward(num, self.cols)
        return len(pivots)

    def solve(self, b):
        """Any x with self @ x = b (free variables zero), or None."""
        f = same_field(self.field, b.field)
        if self.rows != b.rows:
            raise DimensionError("right-hand side row count mismatch")
        if isinstance(f, PrimeField):
            x = _kernels.solve(self._np(), b._np(), f.p)
            return None if x is None else Mat(f, x.tolist())
        return _qq_solve(self, b)

    def inverse(self):
        if self.rows != self.cols:
            raise DimensionError("inverse of a non-square matrix")
        f = self.field
        if isinstance(f, PrimeField):
            x = _kernels.inv(self._np(), f.p)
            if x is None:
                raise SingularMatrixError("matrix is singular")
            return Mat(f, x.tolist())
        x = _qq_solve(self, Mat.identity(f, self.rows), require_unique=True)
        if x is None:
            raise SingularMatrixError("matrix is singular")
        return x

    def nullspace(self):
        """Basis of the right kernel, as a list of column vectors."""
        f = self.field
        if isinstance(f, PrimeField):
            red, rk, pivots = _kernels.rref(self._np(), f.p)
            red = red.tolist()
        else:
            red, rk, pivots = _qq_rref(self.data)
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for c in free:
            v = [f.zero()] * self.cols
            v[c] = f.one()
            for row, pc in enumerate(pivots):
                v[pc] = f.neg(red[row][c])
            basis.append(v)
        return basis

    def __repr__(self):
        return f"Mat({self.field!r}, {self.rows}x{self.cols})"


# -- rational (Bareiss) elimination ------------------------------------


def _int_scaled(data):
    """Integer matrix equal to `data` row-scaled; returns (rows, det scale).

    Each row is multiplied by the lcm of its denominators; the returned
    scale is the factor by which the determinant of the integer matrix
    must be divided to recover the original determinant.
    """
    num = []
    scale = Fraction(1)
    for row in data:
        row = [Fraction(a) for a in row]
        m = lcm(*(a.denominator for a in row)) if row else 1
        num.append([int(a * m) for a in row])
        scale /= m
    return num, scale


def _bareiss_forward(m, limit):
    """Fraction-free forward elimination in place; returns (pivots, sign)."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    prev = 1
    sign = 1
    pivots = []
    r = 0
    for c in range(limit):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
            sign = -sign
        mrc = m[r][c]
        for i in range(r + 1, rows):
            mic = m[i][c]
            mi, mr = m[i], m[r]
            for j in range(c + 1, cols):
                mi[j] = (mrc * mi[j] - mic * mr[j]) // prev
            mi[c] = 0
        prev = mrc
        pivots.append(c)
        r += 1
    return pivots, sign


def _bareiss_det(m):
    n = len(m)
    pivots, sign = _bareiss_forward(m, n)
    if len(pivots) < n:
        return 0, len(pivots)
    return sign * m[n - 1][n - 1], n


def _qq_rref(data):
    """Reduced row echelon form with Fraction arithmetic (small systems)."""
    a = [[Fraction(v) for v in row] for row in data]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [vi - f * vr for vi, vr in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, r, pivots


def _qq_solve(a, b, require_unique=False):
    n = a.cols
    aug = [list(ra) + list(rb) for ra, rb in zip(a.data, b.data)]
    num, _ = _int_scaled(aug)
    pivots, _ = _bareiss_forward(num, n)
    rk = len(pivots)
    for i in range(rk, len(num)):
        if any(v != 0 for v in num[i][n:]):
            return None
    if require_unique and rk < n:
        return None
    ncols_b = b.cols
    x = [[Fraction(0)] * ncols_b for _ in range(n)]
    for row in range(rk - 1, -1, -1):
        pc = pivots[row]
        piv = num[row][pc]
        for k in range(ncols_b):
            acc = Fraction(num[row][n + k])
            for j in range(pc + 1, n):
                if num[row][j]:
                    acc -= num[row][j] * x[j][k]
            x[pc][k] = acc / piv
    return Mat(QQ, x)


def _modp_det(data, p):
    a = [[v % p for v in row] for row in data]
    n = len(a)
    det = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det = det * a[c][c] % p
        inv = pow(a[c][c], p - 2, p)
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] * inv % p
                a[i] = [(vi - f * vc) % p for vi, vc in zip(a[i], a[c])]
    return det % p
