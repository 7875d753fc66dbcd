"""The 27-dimensional cubic Jordan algebra of Hermitian 3x3 octonion matrices.

An element

    h(s1, s2, s3, x1, x2, x3) = ( s1        x3   conj(x2)
                                  conj(x3)  s2   x1
                                  x2       conj(x1)  s3 )

is stored as 3 scalars and 3 octonions.  The flattening order used for all
27x27 matrices is (s1, s2, s3, x1[0..7], x2[0..7], x3[0..7]).

Core maps:
  * jordan product   X o Y = (XY + YX)/2 (octonionic matrix product),
  * cubic norm       det(X) = s1 s2 s3 + tr(x1 x2 x3)
                              - s1||x1|| - s2||x2|| - s3||x3||,
  * trace form       <X, Y> = Tr(X o Y),
  * symmetric trilinear form D with 6 D(X,Y,Z) given by
    inclusion-exclusion over det,
  * Freudenthal cross product via the closed formula
    X x Y = X o Y - <Y,e>X/2 - <X,e>Y/2 - <X,Y>e/2 + <X,e><Y,e>e/2,
    whose characterizing property is <X x Y, Z> = 3 D(X, Y, Z).
"""

from .fields import same_field
from .octonion import Octonion

DIM = 27


class AlbertElement:
    __slots__ = ("field", "s", "x")

    def __init__(self, field, s, x):
        self.field = field
        self.s = tuple(s)
        self.x = tuple(x)
        if len(self.s) != 3 or len(self.x) != 3:
            raise ValueError("need 3 diagonal scalars and 3 octonions")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, field):
        z = field.zero()
        o = Octonion.zero(field)
        return cls(field, (z, z, z), (o, o, o))

    @classmethod
    def unit(cls, field):
        o = field.one()
        zo = Octonion.zero(field)
        return cls(field, (o, o, o), (zo, zo, zo))

    @classmethod
    def diag(cls, field, s1, s2, s3):
        zo = Octonion.zero(field)
        return cls(field, (s1, s2, s3), (zo, zo, zo))

    @classmethod
    def diag_idempotent(cls, field, i):
        """E_i: the i-th diagonal unit (i = 1, 2, 3)."""
        z, o = field.zero(), field.one()
        s = [z, z, z]
        s[i - 1] = o
        zo = Octonion.zero(field)
        return cls(field, s, (zo, zo, zo))

    @classmethod
    def oct_slot(cls, field, i, a):
        """The element with octonion a in slot i (i = 1, 2, 3), zero elsewhere."""
        z = field.zero()
        zo = Octonion.zero(field)
        x = [zo, zo, zo]
        x[i - 1] = a
        return cls(field, (z, z, z), x)

    @classmethod
    def from_flat(cls, field, vec):
        if len(vec) != DIM:
            raise ValueError("expected 27 coordinates")
        s = tuple(vec[0:3])
        x = tuple(Octonion(field, vec[3 + 8 * i : 11 + 8 * i]) for i in range(3))
        return cls(field, s, x)

    def flatten(self):
        out = list(self.s)
        for o in self.x:
            out.extend(o.co)
        return out

    @classmethod
    def basis(cls, field):
        """The 27 flattening basis elements, in flattening order."""
        out = [cls.diag_idempotent(field, i) for i in (1, 2, 3)]
        for slot in (1, 2, 3):
            for j in range(8):
                out.append(cls.oct_slot(field, slot, Octonion.basis(field, j)))
        return out

    # -- linear structure -------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, AlbertElement):
            return NotImplemented
        if self.field != other.field:
            return False
        eq = self.field.eq
        return all(eq(a, b) for a, b in zip(self.s, other.s)) and all(
            a == b for a, b in zip(self.x, other.x)
        )

    def __hash__(self):
        raise TypeError("AlbertElement is unhashable")

    def add(self, other):
        f = same_field(self.field, other.field)
        return AlbertElement(
            f,
            tuple(f.add(a, b) for a, b in zip(self.s, other.s)),
            tuple(a.add(b) for a, b in zip(self.x, other.x)),
        )

    def sub(self, other):
        f = same_field(self.field, other.field)
        return AlbertElement(
            f,
            tuple(f.sub(a, b) for a, b in zip(self.s, other.s)),
            tuple(a.sub(b) for a, b in zip(self.x, other.x)),
        )

    def neg(self):
        f = self.field
        return AlbertElement(f, tuple(f.neg(a) for a in self.s), tuple(a.neg() for a in self.x))

    def scale(self, t):
        f = self.field
        return AlbertElement(f, tuple(f.mul(t, a) for a in self.s), tuple(a.scale(t) for a in self.x))

    def is_zero(self):
        z = self.field.is_zero
        return all(z(a) for a in self.s) and all(o.is_zero() for o in self.x)

    # -- full-matrix view --------------------------------------------------

    def full(self):
        """3x3 array of octonions (diagonal scalars embedded)."""
        f = self.field
        s1, s2, s3 = (Octonion.scalar(f, t) for t in self.s)
        x1, x2, x3 = self.x
        return [
            [s1, x3, x2.conj()],
            [x3.conj(), s2, x1],
            [x2, x1.conj(), s3],
        ]

    @classmethod
    def from_full(cls, field, m):
        """Extract h(...) from a Hermitian 3x3 octonion matrix."""
        s = []
        for i in range(3):
            d = m[i][i]
            if not d.is_scalar():
                raise ValueError("diagonal entry is not scalar")
            s.append(d.scalar_part())
        x1, x2, x3 = m[1][2], m[2][0], m[0][1]
        if m[2][1] != x1.conj() or m[0][2] != x2.conj() or m[1][0] != x3.conj():
            raise ValueError("matrix is not Hermitian")
        return cls(field, s, (x1, x2, x3))

    # -- multiplicative structure -------------------------------------------

    def jordan_mul(self, other):
        f = same_field(self.field, other.field)
        a, b = self.full(), other.full()
        ab = _matmul3(a, b)
        ba = _matmul3(b, a)
        half = f.div(f.one(), f.of_int(2))
        sym = [[ab[i][j].add(ba[i][j]).scale(half) for j in range(3)] for i in range(3)]
        return AlbertElement.from_full(f, sym)

    def det(self):
        f = self.field
        s1, s2, s3 = self.s
        x1, x2, x3 = self.x
        d = f.mul(f.mul(s1, s2), s3)
        d = f.add(d, x1.mul(x2).mul(x3).trace())
        d = f.sub(d, f.mul(s1, x1.norm()))
        d = f.sub(d, f.mul(s2, x2.norm()))
        d = f.sub(d, f.mul(s3, x3.norm()))
        return d

    def trace(self):
        f = self.field
        return f.add(f.add(self.s[0], self.s[1]), self.s[2])

    def bilinear(self, other):
        """<X, Y> = Tr(X o Y) = sum s_i t_i + 2 sum Q(x_j, y_j)."""
        f = same_field(self.field, other.field)
        acc = f.zero()
        for a, b in zip(self.s, other.s):
            acc = f.add(acc, f.mul(a, b))
        two = f.of_int(2)
        for a, b in zip(self.x, other.x):
            acc = f.add(acc, f.mul(two, a.q_form(b)))
        return acc

    def cross(self, other):
        f = same_field(self.field, other.field)
        half = f.div(f.one(), f.of_int(2))
        tx, ty = self.trace(), other.trace()
        out = self.jordan_mul(other)
        out = out.sub(self.scale(f.mul(half, ty)))
        out = out.sub(other.scale(f.mul(half, tx)))
        e = AlbertElement.unit(f)
        c = f.sub(f.mul(f.mul(tx, ty), half), f.mul(half, self.bilinear(other)))
        return out.add(e.scale(c))

    def __repr__(self):
        f = self.field
        return (
            "h(" + ", ".join(f.to_str(a) for a in self.s) + "; "
            + "; ".join(repr(o) for o in self.x) + ")"
        )


def _matmul3(a, b):
    out = []
    for i in range(3):
        row = []
        for j in range(3):
            acc = a[i][0].mul(b[0][j])
            acc = acc.add(a[i][1].mul(b[1][j]))
            acc = acc.add(a[i][2].mul(b[2][j]))
            row.append(acc)
        out.append(row)
    return out


def trilinear(x, y, z):
    """Symmetric trilinear form D with D(X, X, X) = det(X).

    6 D(X,Y,Z) = det(X+Y+Z) - det(X+Y) - det(Y+Z) - det(Z+X)
                 + det(X) + det(Y) + det(Z).
    """
    f = same_field(same_field(x.field, y.field), z.field)
    total = x.add(y).add(z).det()
    total = f.sub(total, x.add(y).det())
    total = f.sub(total, y.add(z).det())
    total = f.sub(total, z.add(x).det())
    total = f.add(total, x.det())
    total = f.add(total, y.det())
    total = f.add(total, z.det())
    return f.div(total, f.of_int(6))


# -- cached structure data, keyed by field --------------------------------

_jordan_tensor_cache = {}
_trilinear_tensor_cache = {}
_gram_cache = {}


def jordan_tensor(field):
    """C[i][j] = flatten(B_i o B_j) for the 27 flattening basis elements."""
    if field not in _jordan_tensor_cache:
        basis = AlbertElement.basis(field)
        tab = [[None] * DIM for _ in range(DIM)]
        for i in range(DIM):
            for j in range(i, DIM):
                v = basis[i].jordan_mul(basis[j]).flatten()
                tab[i][j] = v
                tab[j][i] = v
        _jordan_tensor_cache[field] = tab
    return _jordan_tensor_cache[field]


def trilinear_tensor(field):
    """D[i][j][k] on basis triples (dict keyed by sorted index triple)."""
    if field not in _trilinear_tensor_cache:
        basis = AlbertElement.basis(field)
        tab = {}
        for i in range(DIM):
            for j in range(i, DIM):
                for k in range(j, DIM):
                    tab[(i, j, k)] = trilinear(basis[i], basis[j], basis[k])
        _trilinear_tensor_cache[field] = tab
    return _trilinear_tensor_cache[field]


def trilinear_basis(field, i, j, k):
    t = trilinear_tensor(field)
    return t[tuple(sorted((i, j, k)))]


def gram_matrix(field):
    """27x27 Gram matrix of the trace form <,> in the flattening basis."""
    if field not in _gram_cache:
        from .linalg import Mat

        basis = AlbertElement.basis(field)
        _gram_cache[field] = Mat(
            field,
            [[basis[i].bilinear(basis[j]) for j in range(DIM)] for i in range(DIM)],
        )
    return _gram_cache[field]
