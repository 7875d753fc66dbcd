"""Pairs of Jordan algebra elements, their binary cubic form, and isotopes.

A pair x = (x1, x2) stands for x1 v1 + x2 v2.  The group acts by

    (g1, g2) . (x1, x2) = (a g1 x1 + b g1 x2, c g1 x1 + d g1 x2),
    g2 = ((a, b), (c, d)),

so that the attached binary cubic F_x(v) = det(x1 v1 + x2 v2) transforms
as F_{gx}(v) = c(g1) F_x(v g2) with v a row vector.  Its discriminant is
the degree-12 relative invariant; the quartic equivariant map

    m(x) = 6 (x1 x x1) x (x2 x x2) - 3 D(x1,x2,x2) x1 - 3 D(x1,x1,x2) x2

sends the base pair to the Jordan unit and satisfies
m(g x) = c(g1) det(g2)^2 g1(m(x)).  For invertible m, the isotope product

    x o_m y = 4 det(m)^-1 (x x m) x (y x m)
              + ((<x,y>_m - <x,m>_m <y,m>_m) / 2) m,
    <x,y>_m  = -6 det(m)^-1 D(x,y,m) + 9 det(m)^-2 D(x,m,m) D(y,m,m),

has unit m and determinant det_m = det(m)^-1 det.  The span of x1, x2 and
m(x) is closed under o_{m(x)} for semistable x and is the cubic etale
subalgebra attached to the pair.
"""

from .albert import AlbertElement, trilinear
from .fields import same_field
from .group import GElement, random_albert
from .linalg import Mat


class PairElement:
    __slots__ = ("x1", "x2")

    def __init__(self, x1, x2):
        same_field(x1.field, x2.field)
        self.x1 = x1
        self.x2 = x2

    @property
    def field(self):
        return self.x1.field

    def __eq__(self, other):
        return isinstance(other, PairElement) and self.x1 == other.x1 and self.x2 == other.x2

    def __hash__(self):
        raise TypeError("PairElement is unhashable")

    def __repr__(self):
        return f"Pair({self.x1!r}, {self.x2!r})"


def base_point(field):
    """The reference pair (diag(1,-1,0), diag(0,1,-1)); its cubic splits."""
    one = field.one()
    return PairElement(
        AlbertElement.diag(field, one, field.neg(one), field.zero()),
        AlbertElement.diag(field, field.zero(), one, field.neg(one)),
    )


def act(g, x):
    """Group action on pairs."""
    f = same_field(g.field, x.field)
    a, b = g.g2.data[0]
    c, d = g.g2.data[1]
    y1 = g.g1.apply(x.x1)
    y2 = g.g1.apply(x.x2)
    return PairElement(
        y1.scale(a).add(y2.scale(b)),
        y1.scale(c).add(y2.scale(d)),
    )


def act_word(word, x):
    """Action of a product of GElements (word[0] applied last)."""
    for g in reversed(word):
        x = act(g, x)
    return x


def word_multiplier(word):
    f = word[0].field
    c = f.one()
    for g in word:
        c = f.mul(c, g.g1.multiplier())
    return c


def word_det2(word):
    f = word[0].field
    d = f.one()
    for g in word:
        d = f.mul(d, g.g2.det())
    return d


def word_apply_g1(word, X):
    for g in reversed(word):
        X = g.g1.apply(X)
    return X


class BinaryCubic:
    """a v1^3 + b v1^2 v2 + c v1 v2^2 + d v2^3."""

    __slots__ = ("field", "a", "b", "c", "d")

    def __init__(self, field, a, b, c, d):
        self.field = field
        self.a, self.b, self.c, self.d = a, b, c, d

    def coeffs(self):
        return (self.a, self.b, self.c, self.d)

    def evaluate(self, v1, v2):
        f = self.field
        return f.add(
            f.add(
                f.mul(self.a, f.mul(v1, f.mul(v1, v1))),
                f.mul(self.b, f.mul(v1, f.mul(v1, v2))),
            ),
            f.add(
                f.mul(self.c, f.mul(v1, f.mul(v2, v2))),
                f.mul(self.d, f.mul(v2, f.mul(v2, v2))),
            ),
        )

    def substitute(self, g2):
        """The cubic v -> self(v g2), v a row vector."""
        f = self.field
        a, b = g2.data[0]
        c, d = g2.data[1]
        # v g2 = (a v1 + c v2, b v1 + d v2)
        basis = []
        for v1, v2 in ((f.one(), f.zero()), (f.zero(), f.one())):
            basis.append((f.add(f.mul(a, v1), f.mul(c, v2)), f.add(f.mul(b, v1), f.mul(d, v2))))
        (p, q), (r, s) = basis
        # expand (p v1 + r v2, q v1 + s v2) into coefficient arithmetic
        three = f.of_int(3)
        two = f.of_int(2)
        na = self.evaluate(p, q)
        nd = self.evaluate(r, s)
        # b' = coefficient of v1^2 v2: directional derivative
        nb = f.add(
            f.add(
                f.mul(self.a, f.mul(three, f.mul(p, f.mul(p, r)))),
                f.mul(self.b, f.add(f.mul(f.mul(two, p), f.mul(r, q)), f.mul(p, f.mul(p, s)))),
            ),
            f.add(
                f.mul(self.c, f.add(f.mul(f.mul(two, q), f.mul(p, s)), f.mul(q, f.mul(q, r)))),
                f.mul(self.d, f.mul(three, f.mul(q, f.mul(q, s)))),
            ),
        )
        nc = f.add(
            f.add(
                f.mul(self.a, f.mul(three, f.mul(r, f.mul(r, p)))),
                f.mul(self.b, f.add(f.mul(f.mul(two, r), f.mul(p, s)), f.mul(r, f.mul(r, q)))),
            ),
            f.add(
                f.mul(self.c, f.add(f.mul(f.mul(two, s), f.mul(r, q)), f.mul(s, f.mul(s, p)))),
                f.mul(self.d, f.mul(three, f.mul(s, f.mul(s, q)))),
            ),
        )
        return BinaryCubic(f, na, nb, nc, nd)

    def scale(self, t):
        f = self.field
        return BinaryCubic(f, f.mul(t, self.a), f.mul(t, self.b), f.mul(t, self.c), f.mul(t, self.d))

    def __eq__(self, other):
        if not isinstance(other, BinaryCubic):
            return NotImplemented
        eq = self.field.eq
        return all(eq(a, b) for a, b in zip(self.coeffs(), other.coeffs()))

    def __hash__(self):
        raise TypeError("BinaryCubic is unhashable")

    def __repr__(self):
        f = self.field
        return "BinaryCubic(" + ", ".join(f.to_str(t) for t in self.coeffs()) + ")"


def cubic_form(x):
    """F_x = det(x1 v1 + x2 v2): (det x1, 3D(x1,x1,x2), 3D(x1,x2,x2), det x2)."""
    f = x.field
    three = f.of_int(3)
    return BinaryCubic(
        f,
        x.x1.det(),
        f.mul(three, trilinear(x.x1, x.x1, x.x2)),
        f.mul(three, trilinear(x.x1, x.x2, x.x2)),
        x.x2.det(),
    )


def disc(fc):
    """18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2 (classical normalization)."""
    f = fc.field
    a, b, c, d = fc.coeffs()
    t = f.mul(f.of_int(18), f.mul(a, f.mul(b, f.mul(c, d))))
    t = f.sub(t, f.mul(f.of_int(4), f.mul(b, f.mul(b, f.mul(b, d)))))
    t = f.add(t, f.mul(f.mul(b, b), f.mul(c, c)))
    t = f.sub(t, f.mul(f.of_int(4), f.mul(a, f.mul(c, f.mul(c, c)))))
    t = f.sub(t, f.mul(f.of_int(27), f.mul(f.mul(a, a), f.mul(d, d))))
    return t


def is_semistable(x):
    return not x.field.is_zero(disc(cubic_form(x)))


def equivariant_map(x):
    """m(x) = 6 (x1 x x1) x (x2 x x2) - 3D(x1,x2,x2) x1 - 3D(x1,x1,x2) x2."""
    f = x.field
    x1, x2 = x.x1, x.x2
    out = x1.cross(x1).cross(x2.cross(x2)).scale(f.of_int(6))
    out = out.sub(x1.scale(f.mul(f.of_int(3), trilinear(x1, x2, x2))))
    out = out.sub(x2.scale(f.mul(f.of_int(3), trilinear(x1, x1, x2))))
    return out


class Isotope:
    """The Jordan algebra structure with unit m, for det(m) != 0."""

    __slots__ = ("m", "det_m")

    def __init__(self, m):
        self.m = m
        self.det_m = m.det()
        if m.field.is_zero(self.det_m):
            raise ValueError("isotope base must have nonzero determinant")

    @property
    def field(self):
        return self.m.field

    def bilinear(self, x, y):
        f = self.field
        dinv = f.inv(self.det_m)
        t = f.mul(f.of_int(-6), f.mul(dinv, trilinear(x, y, self.m)))
        corr = f.mul(
            f.of_int(9),
            f.mul(
                f.mul(dinv, dinv),
                f.mul(trilinear(x, self.m, self.m), trilinear(y, self.m, self.m)),
            ),
        )
        return f.add(t, corr)

    def mul(self, x, y):
        f = self.field
        dinv = f.inv(self.det_m)
        out = x.cross(self.m).cross(y.cross(self.m)).scale(f.mul(f.of_int(4), dinv))
        coef = f.sub(self.bilinear(x, y), f.mul(self.bilinear(x, self.m), self.bilinear(y, self.m)))
        half = f.div(f.one(), f.of_int(2))
        return out.add(self.m.scale(f.mul(half, coef)))

    def det(self, x):
        f = self.field
        return f.mul(f.inv(self.det_m), x.det())


class CubicSubalgebra:
    """Basis (x1, x2, m(x)) with 3x3x3 structure constants under o_{m(x)}."""

    __slots__ = ("isotope", "basis", "structure")

    def __init__(self, isotope, basis, structure):
        self.isotope = isotope
        self.basis = basis
        self.structure = structure


def cubic_subalgebra(x):
    """The span of x1, x2, m(x), closed under the isotope product at m(x)."""
    if not is_semistable(x):
        raise ValueError("pair is not semistable")
    f = x.field
    m = equivariant_map(x)
    iso = Isotope(m)
    basis = [x.x1, x.x2, m]
    cols = [b.flatten() for b in basis]
    bmat = Mat(f, [list(r) for r in zip(*cols)])
    if bmat.rank() != 3:
        raise AssertionError("basis of the cubic subalgebra is degenerate")
    structure = []
    for i in range(3):
        row = []
        for j in range(3):
            p = iso.mul(basis[i], basis[j])
            sol = bmat.solve(Mat(f, [[v] for v in p.flatten()]))
            if sol is None:
                raise AssertionError("cubic subalgebra is not closed under the product")
            row.append(tuple(sol.data[k][0] for k in range(3)))
        structure.append(row)
    return CubicSubalgebra(iso, basis, structure)


def random_pair(field, rng, span=3):
    return PairElement(random_albert(field, rng, span), random_albert(field, rng, span))
