"""The split octonion algebra over an exact field of characteristic != 2, 3.

Elements carry 8 coordinates in a fixed hyperbolic basis e1..e8 in which
the norm form is

    ||u|| = u1*u2 + u3*u4 + u5*u6 + u7*u8.

Internally the product uses the Zorn vector-matrix model: an element is a
2x2 array ((a, v), (w, b)) with a, b scalars and v, w 3-vectors,

    x * y = ((a1*a2 + v1.w2,        a1*v2 + b2*v1 - w1 x w2),
             (a2*w1 + b1*w2 + v1 x v2,  b1*b2 + w1.v2)),

with norm a*b - v.w.  The basis order is (a, b, v1, -w1, v2, -w2, v3, -w3),
chosen so the norm takes the hyperbolic shape above.  The unit element is
e1 + e2.  All eight basis vectors are isotropic and pair up into four
orthogonal hyperbolic planes.
"""

import itertools

from .fields import same_field


class Octonion:
    __slots__ = ("field", "co")

    def __init__(self, field, coords):
        self.field = field
        self.co = tuple(coords)
        if len(self.co) != 8:
            raise ValueError("octonion needs 8 coordinates")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, field):
        z = field.zero()
        return cls(field, (z,) * 8)

    @classmethod
    def one(cls, field):
        z, o = field.zero(), field.one()
        return cls(field, (o, o, z, z, z, z, z, z))

    @classmethod
    def scalar(cls, field, t):
        z = field.zero()
        return cls(field, (t, t, z, z, z, z, z, z))

    @classmethod
    def basis(cls, field, i):
        z, o = field.zero(), field.one()
        co = [z] * 8
        co[i] = o
        return cls(field, co)

    # -- linear structure ----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Octonion):
            return NotImplemented
        if self.field != other.field:
            return False
        eq = self.field.eq
        return all(eq(a, b) for a, b in zip(self.co, other.co))

    def __hash__(self):
        raise TypeError("Octonion is unhashable")

    def add(self, other):
        f = same_field(self.field, other.field)
        return Octonion(f, tuple(f.add(a, b) for a, b in zip(self.co, other.co)))

    def sub(self, other):
        f = same_field(self.field, other.field)
        return Octonion(f, tuple(f.sub(a, b) for a, b in zip(self.co, other.co)))

    def neg(self):
        f = self.field
        return Octonion(f, tuple(f.neg(a) for a in self.co))

    def scale(self, t):
        f = self.field
        return Octonion(f, tuple(f.mul(t, a) for a in self.co))

    def is_zero(self):
        z = self.field.is_zero
        return all(z(a) for a in self.co)

    # -- multiplicative structure ---------------------------------------

    def mul(self, other):
        f = same_field(self.field, other.field)
        add, sub, mul = f.add, f.sub, f.mul
        u, t = self.co, other.co
        a1, b1 = u[0], u[1]
        v1 = (u[2], u[4], u[6])
        w1 = (f.neg(u[3]), f.neg(u[5]), f.neg(u[7]))
        a2, b2 = t[0], t[1]
        v2 = (t[2], t[4], t[6])
        w2 = (f.neg(t[3]), f.neg(t[5]), f.neg(t[7]))

        def dot(x, y):
            return add(add(mul(x[0], y[0]), mul(x[1], y[1])), mul(x[2], y[2]))

        def cross(x, y):
            return (
                sub(mul(x[1], y[2]), mul(x[2], y[1])),
                sub(mul(x[2], y[0]), mul(x[0], y[2])),
                sub(mul(x[0], y[1]), mul(x[1], y[0])),
            )

        a = add(mul(a1, a2), dot(v1, w2))
        b = add(mul(b1, b2), dot(w1, v2))
        ww = cross(w1, w2)
        v = tuple(sub(add(mul(a1, v2[i]), mul(b2, v1[i])), ww[i]) for i in range(3))
        vv = cross(v1, v2)
        w = tuple(add(add(mul(a2, w1[i]), mul(b1, w2[i])), vv[i]) for i in range(3))
        return Octonion(
            f,
            (a, b, v[0], f.neg(w[0]), v[1], f.neg(w[1]), v[2], f.neg(w[2])),
        )

    def conj(self):
        f = self.field
        u = self.co
        return Octonion(
            f,
            (u[1], u[0], f.neg(u[2]), f.neg(u[3]), f.neg(u[4]), f.neg(u[5]), f.neg(u[6]), f.neg(u[7])),
        )

    def norm(self):
        f = self.field
        u = self.co
        return f.add(
            f.add(f.mul(u[0], u[1]), f.mul(u[2], u[3])),
            f.add(f.mul(u[4], u[5]), f.mul(u[6], u[7])),
        )

    def trace(self):
        return self.field.add(self.co[0], self.co[1])

    def q_form(self, other):
        """Polarization Q(x, y) = (||x+y|| - ||x|| - ||y||)/2."""
        f = same_field(self.field, other.field)
        u, t = self.co, other.co
        s = f.add(
            f.add(
                f.add(f.mul(u[0], t[1]), f.mul(u[1], t[0])),
                f.add(f.mul(u[2], t[3]), f.mul(u[3], t[2])),
            ),
            f.add(
                f.add(f.mul(u[4], t[5]), f.mul(u[5], t[4])),
                f.add(f.mul(u[6], t[7]), f.mul(u[7], t[6])),
            ),
        )
        return f.div(s, f.of_int(2))

    def inverse(self):
        n = self.norm()
        f = self.field
        if f.is_zero(n):
            raise ZeroDivisionError("octonion has zero norm")
        return self.conj().scale(f.inv(n))

    def is_scalar(self):
        f = self.field
        return f.eq(self.co[0], self.co[1]) and all(f.is_zero(a) for a in self.co[2:])

    def scalar_part(self):
        """(x + conj(x))/2 as a field element."""
        f = self.field
        return f.div(self.trace(), f.of_int(2))

    def is_traceless(self):
        return self.field.is_zero(self.trace())

    def __repr__(self):
        f = self.field
        return "Oct(" + ", ".join(f.to_str(a) for a in self.co) + ")"


def traceless_basis(field):
    """Basis of the trace-zero subspace: e1 - e2 and e3..e8."""
    out = [Octonion.basis(field, 0).sub(Octonion.basis(field, 1))]
    out.extend(Octonion.basis(field, i) for i in range(2, 8))
    return out


def _small_values(field, budget):
    """Deterministic scalar enumeration 0, 1, -1, 2, -2, ... up to `budget`."""
    vals = [field.zero()]
    for k in range(1, budget + 1):
        vals.append(field.of_int(k))
        vals.append(field.of_int(-k))
    if field.char:
        seen, uniq = set(), []
        for v in vals:
            if v not in seen:
                seen.add(v)
                uniq.append(v)
        vals = uniq
    return vals


class SearchBudgetExceeded(RuntimeError):
    pass


def find_with_norm(field, n):
    """Element of prescribed nonzero norm: n*e1 + e2 (the unit when n = 1)."""
    if field.is_zero(n):
        raise ValueError("requested norm is zero")
    if field.eq(n, field.one()):
        return Octonion.one(field)
    e1, e2 = Octonion.basis(field, 0), Octonion.basis(field, 1)
    return e1.scale(n).add(e2)


def find_traceless_pairing(x):
    """Traceless u with tr(conj(x) u) != 0; scans the traceless basis in order.

    Exists iff x is not a scalar, by non-degeneracy of the trace pairing.
    """
    f = x.field
    if x.is_scalar():
        raise ValueError("x is a scalar: the traceless part vanishes")
    xc = x.conj()
    for u in traceless_basis(f):
        if not f.is_zero(xc.mul(u).trace()):
            return u
    raise AssertionError("trace pairing degenerate on the traceless space")


def find_isotropic_nonvanishing(field, functional, budget=8):
    """Isotropic u with functional(u) != 0.

    Deterministic parametrized search: u2 = 1 and u1 = -(u3*u4 + u5*u6 +
    u7*u8), which forces ||u|| = 0, with (u3..u8) enumerated over small
    values of growing size.  `functional` maps an Octonion to a scalar.
    """
    f = field
    vals = _small_values(f, budget)
    one = f.one()
    for radius in range(1, len(vals) + 1):
        cur = vals[:radius]
        newest = vals[radius - 1]
        for tail in itertools.product(cur, repeat=6):
            if radius > 1 and newest not in tail:
                continue  # already enumerated at a smaller radius
            u3, u4, u5, u6, u7, u8 = tail
            u1 = f.neg(f.add(f.add(f.mul(u3, u4), f.mul(u5, u6)), f.mul(u7, u8)))
            u = Octonion(f, (u1, one, u3, u4, u5, u6, u7, u8))
            if not f.is_zero(functional(u)):
                return u
    raise SearchBudgetExceeded("no isotropic element found within the budget")


def find_with_trace_norm(field, t, n):
    """Element with trace t and norm n.

    Uses a = t/2 plus a traceless hyperbolic combination: the traceless
    pair (e3, e4) has Q(e3, e4) = 1/2, so s*e3 + e4 has norm s.  When
    n = t^2/4 the scalar t/2 itself is returned.
    """
    f = field
    half_t = f.div(t, f.of_int(2))
    s = f.sub(n, f.mul(half_t, half_t))
    if f.is_zero(s):
        return Octonion.scalar(f, half_t)
    base = Octonion.scalar(f, half_t)
    return base.add(Octonion.basis(f, 2).scale(s)).add(Octonion.basis(f, 3))


def find_anisotropic_traceless_orthogonal(y, budget=8):
    """Traceless beta with ||beta|| != 0 and tr(beta * y) = 0.

    The constraint space inside the traceless 7-space has dimension >= 6,
    which exceeds the Witt index, so an anisotropic vector exists; the
    search enumerates small coordinate boxes over a kernel basis.
    """
    f = y.field
    basis = traceless_basis(f)
    # one linear constraint: tr(beta * y) = 0
    row = [b.mul(y).trace() for b in basis]
    from .linalg import Mat

    kern = Mat(f, [row]).nullspace()
    kbasis = [
        _combine(basis, coeffs)
        for coeffs in kern
    ]
    for b in kbasis:
        if not f.is_zero(b.norm()):
            return b
    vals = _small_values(f, budget)
    for radius in range(2, len(vals) + 1):
        cur = vals[:radius]
        for coeffs in itertools.product(cur, repeat=len(kbasis)):
            cand = None
            for c, b in zip(coeffs, kbasis):
                term = b.scale(c)
                cand = term if cand is None else cand.add(term)
            if cand is not None and not cand.is_zero() and not f.is_zero(cand.norm()):
                return cand
    raise SearchBudgetExceeded("no anisotropic vector found within the budget")


def _combine(basis, coeffs):
    out = None
    for c, b in zip(coeffs, basis):
        term = b.scale(c)
        out = term if out is None else out.add(term)
    return out
