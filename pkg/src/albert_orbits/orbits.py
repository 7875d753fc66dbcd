"""Classification of semistable pairs and constructive reduction.

A semistable pair is classified by the rational root pattern of its
binary cubic: three roots (split3), exactly one (one_plus_quad, with the
square class of the quadratic cofactor's discriminant), or none (cubic,
with the cubic field up to isomorphism; over F_p the cubic extension is
unique).  The reduction pipeline moves any semistable pair to one of two
documented canonical shapes by an explicit word in the group generators,
returning a replayable trace whose accumulated element exactly carries
the input to the output.

Canonical shapes:

  * root case        x1 = (0 1 0 / 1 0 0 / 0 0 0),  x2 = diag(-1, s, 1);
  * irreducible case x1 = (0 0 1 / 0 -2 0 / 1 0 0),
                     x2 = (0 1 0 / 1 a b / 0 b c) with scalar entries.
"""

import random
from fractions import Fraction
from math import lcm

from .albert import AlbertElement
from .cubicfields import (
    cubic_field_isomorphic,
    pnormalize,
    rational_roots,
    same_square_class,
    squarefree_part,
)
from .fields import QQ, PrimeField
from .group import (
    GElement,
    b_shear,
    congruence_gen,
    diag_gen,
    oct_twist,
    random_word,
    shear_gen,
)
from .linalg import Mat
from .octonion import (
    Octonion,
    find_anisotropic_traceless_orthogonal,
    find_isotropic_nonvanishing,
    find_traceless_pairing,
    find_with_norm,
    find_with_trace_norm,
)
from .perms import Perm
from .pvs import PairElement, act, act_word, base_point, cubic_form, disc, is_semistable


class NotSemistableError(ValueError):
    pass


class ReductionError(RuntimeError):
    """Internal pivot or search failure; carries the failing step label."""

    def __init__(self, label, message):
        super().__init__(f"{label}: {message}")
        self.label = label


# -- orbit classes -----------------------------------------------------------


class OrbitClass:
    """Etale cubic class of a semistable pair.

    kind is one of "split3", "one_plus_quad", "cubic".  Over the rationals
    a one_plus_quad class carries a squarefree integer representing the
    square class of the quadratic cofactor's discriminant, and a cubic
    class carries a primitive integer cubic; over F_p the kind alone
    determines the class.
    """

    __slots__ = ("field", "kind", "quad_class", "quad_disc", "cubic")

    def __init__(self, field, kind, quad_class=None, quad_disc=None, cubic=None):
        self.field = field
        self.kind = kind
        self.quad_class = quad_class
        self.quad_disc = quad_disc
        self.cubic = cubic

    def __eq__(self, other):
        if not isinstance(other, OrbitClass):
            return NotImplemented
        if self.field != other.field or self.kind != other.kind:
            return False
        if self.kind == "one_plus_quad" and self.field == QQ:
            return same_square_class(self.quad_disc, other.quad_disc)
        if self.kind == "cubic" and self.field == QQ:
            return cubic_field_isomorphic(list(self.cubic), list(other.cubic))
        return True

    def __hash__(self):
        raise TypeError("OrbitClass is unhashable")

    def payload(self):
        out = {"kind": self.kind}
        if self.kind == "one_plus_quad":
            if self.field == QQ:
                out["square_class"] = self.quad_class
            else:
                out["non_residue"] = True
        if self.kind == "cubic" and self.field == QQ:
            out["cubic"] = list(self.cubic)
        return out

    def __repr__(self):
        return f"OrbitClass({self.payload()})"


def _normalize_point(field, q1, q2):
    if not field.is_zero(q2):
        return (field.div(q1, q2), field.one())
    return (field.one(), field.zero())


def _integer_model(fc):
    """Primitive integer coefficients proportional to a rational binary cubic."""
    co = [Fraction(c) for c in fc.coeffs()]
    m = lcm(*(c.denominator for c in co))
    ints = [int(c * m) for c in co]
    from math import gcd

    g = 0
    for c in ints:
        g = gcd(g, c)
    g = g or 1
    lead = next((c for c in ints if c != 0), 1)
    if lead < 0:
        g = -g
    return [c // g for c in ints]


def factor_binary_cubic(fc):
    """All rational projective roots plus the orbit class of a nondegenerate cubic."""
    f = fc.field
    if f.is_zero(disc(fc)):
        raise ValueError("binary cubic is degenerate")
    roots = []
    if isinstance(f, PrimeField):
        p = f.p
        for t in range(p):
            if f.is_zero(fc.evaluate(t, 1)):
                roots.append((t, 1))
        if f.is_zero(fc.a):
            roots.append((f.one(), f.zero()))
    else:
        A, B, C, D = _integer_model(fc)
        finite = rational_roots([D, C, B, A])
        roots = [(t, Fraction(1)) for t in finite]
        if A == 0:
            roots.append((Fraction(1), Fraction(0)))
    n = len(roots)
    if n == 3:
        return roots, OrbitClass(f, "split3")
    if n == 0:
        if isinstance(f, PrimeField):
            return roots, OrbitClass(f, "cubic")
        model = _integer_model(fc)
        dehom = pnormalize([model[3], model[2], model[1], model[0]])
        return roots, OrbitClass(f, "cubic", cubic=tuple(dehom))
    if n != 1:
        raise AssertionError("a separable cubic has 0, 1 or 3 rational roots")
    qd = _quadratic_cofactor_disc(fc, roots[0])
    if isinstance(f, PrimeField):
        if f.is_square(qd):
            raise AssertionError("cofactor discriminant must be a non-residue here")
        return roots, OrbitClass(f, "one_plus_quad", quad_class=None, quad_disc=qd)
    sf = squarefree_part(qd)
    return roots, OrbitClass(f, "one_plus_quad", quad_class=sf, quad_disc=qd)


def _quadratic_cofactor_disc(fc, root):
    """Discriminant of the quadratic cofactor of a known projective root."""
    f = fc.field
    a, b, c, d = fc.coeffs()
    q1, q2 = root
    if f.is_zero(q2):
        # F = v1-free in degree 3: F = v2 (a' v1^2 + ...) with a = 0
        return f.sub(f.mul(c, c), f.mul(f.of_int(4), f.mul(b, d)))
    t0 = f.div(q1, q2)
    # divide a t^3 + b t^2 + c t + d by (t - t0): quotient alpha t^2 + beta t + gamma
    alpha = a
    beta = f.add(b, f.mul(alpha, t0))
    gamma = f.add(c, f.mul(beta, t0))
    if f.is_zero(alpha):
        # a = 0 puts a second rational root at infinity, contradicting n == 1
        raise AssertionError("unexpected degenerate leading coefficient")
    return f.sub(f.mul(beta, beta), f.mul(f.of_int(4), f.mul(alpha, gamma)))


def classify(x):
    if not is_semistable(x):
        raise NotSemistableError("pair is not semistable")
    return factor_binary_cubic(cubic_form(x))[1]


def zero_set_rational(x):
    """Rational projective roots in canonical order: finite ascending, then infinity."""
    roots, _ = factor_binary_cubic(cubic_form(x))
    f = x.field
    finite = sorted(
        [r for r in roots if not f.is_zero(r[1])],
        key=lambda r: (r[0] if f == QQ else int(r[0])),
    )
    inf = [r for r in roots if f.is_zero(r[1])]
    return finite + inf


def eta_x(x, g):
    """Root permutation of a stabilizer element, under (pq)(i) = q(p(i))."""
    if act(g, x) != x:
        raise ValueError("element does not stabilize the pair")
    roots = zero_set_rational(x)
    if len(roots) != 3:
        raise ValueError("all three roots must be rational")
    f = x.field
    img = []
    for q1, q2 in roots:
        r1 = f.add(f.mul(q1, g.g2.data[0][0]), f.mul(q2, g.g2.data[1][0]))
        r2 = f.add(f.mul(q1, g.g2.data[0][1]), f.mul(q2, g.g2.data[1][1]))
        target = _normalize_point(f, r1, r2)
        idx = next(
            (k for k, r in enumerate(roots) if f.eq(r[0], target[0]) and f.eq(r[1], target[1])),
            None,
        )
        if idx is None:
            raise AssertionError("stabilizer did not permute the roots")
        img.append(idx + 1)
    return Perm(img)


# -- canonical shapes ---------------------------------------------------------


def antidiag_unit(field):
    """(0 1 0 / 1 0 0 / 0 0 0): rank-two base form for the root case."""
    z = field.zero()
    return AlbertElement(
        field,
        (z, z, z),
        (Octonion.zero(field), Octonion.zero(field), Octonion.one(field)),
    )


def corner_anchor(field):
    """(0 0 1 / 0 -2 0 / 1 0 0): invertible anchor for the irreducible case."""
    z = field.zero()
    return AlbertElement(
        field,
        (z, field.of_int(-2), z),
        (Octonion.zero(field), Octonion.one(field), Octonion.zero(field)),
    )


def is_canonical_root_form(x):
    f = x.field
    x2 = x.x2
    return (
        x.x1 == antidiag_unit(f)
        and all(o.is_zero() for o in x2.x)
        and f.eq(x2.s[0], f.of_int(-1))
        and f.eq(x2.s[2], f.one())
    )


def is_detx0_form(x):
    f = x.field
    x2 = x.x2
    return (
        x.x1 == antidiag_unit(f)
        and x2.x[0].is_zero()
        and x2.x[1].is_zero()
        and f.eq(x2.s[2], f.one())
    )


def is_canonical_irreducible_form(x):
    f = x.field
    x2 = x.x2
    return (
        x.x1 == corner_anchor(f)
        and f.is_zero(x2.s[0])
        and x2.x[2] == Octonion.one(f)
        and x2.x[1].is_zero()
        and x2.x[0].is_scalar()
    )


# -- reduction traces ---------------------------------------------------------


class ReductionStep:
    __slots__ = ("label", "params", "g")

    def __init__(self, label, g, params=""):
        self.label = label
        self.g = g
        self.params = params


class ReductionTrace:
    """Replayable witness: acting by `accumulated` carries input to output."""

    __slots__ = ("input", "output", "steps", "accumulated")

    def __init__(self, input_pair, output_pair, steps):
        self.input = input_pair
        self.output = output_pair
        self.steps = steps
        acc = GElement.identity(input_pair.field)
        for step in steps:
            acc = step.g.compose(acc)
        self.accumulated = acc

    def validate(self):
        if act(self.accumulated, self.input) != self.output:
            raise AssertionError("trace does not carry input to output")
        acc = GElement.identity(self.input.field)
        for step in self.steps:
            acc = step.g.compose(acc)
        if not (acc == self.accumulated):
            raise AssertionError("accumulated element is not the ordered product")
        f = self.input.field
        c = f.one()
        for step in self.steps:
            c = f.mul(c, step.g.g1.multiplier())
        if not f.eq(c, self.accumulated.g1.multiplier()):
            raise AssertionError("multiplier bookkeeping mismatch")
        return True


class _TraceBuilder:
    def __init__(self, x):
        self.start = x
        self.cur = x
        self.steps = []

    def apply(self, label, g, params=""):
        self.cur = act(g, self.cur)
        self.steps.append(ReductionStep(label, g, params))

    def trace(self):
        return ReductionTrace(self.start, self.cur, self.steps)


# -- pipeline helpers ---------------------------------------------------------

_PERMS3 = [
    [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    [[0, 1, 0], [1, 0, 0], [0, 0, 1]],
    [[1, 0, 0], [0, 0, 1], [0, 1, 0]],
    [[0, 0, 1], [0, 1, 0], [1, 0, 0]],
    [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
    [[0, 0, 1], [1, 0, 0], [0, 1, 0]],
]


def _perm_gelement(field, rows):
    return GElement.from_g1(congruence_gen(Mat.from_int_rows(field, rows)))


def _gl2(field, rows):
    return GElement.from_g2(field, Mat(field, rows))


def _apply_perm_for(tb, label, predicate):
    """Apply the first 3x3 permutation congruence whose result satisfies predicate."""
    f = tb.cur.field
    for rows in _PERMS3:
        g = _perm_gelement(f, rows)
        if predicate(act(g, tb.cur)):
            if rows != _PERMS3[0]:
                tb.apply(label, g, params=str(rows))
            return True
    return False


def _first_pivot(tb, label_prefix):
    """Make the (1,1) scalar slot of the first component nonzero."""
    f = tb.cur.field

    def ok(x):
        return not f.is_zero(x.x1.s[0])

    if ok(tb.cur):
        return
    if _apply_perm_for(tb, label_prefix + "/perm-diagonal", ok):
        return
    # all diagonal slots vanish: move a nonzero octonion slot to slot 3
    if not _apply_perm_for(
        tb, label_prefix + "/perm-octonion", lambda x: not x.x1.x[2].is_zero()
    ):
        raise ReductionError(label_prefix, "first component is zero")
    x13 = tb.cur.x1.x[2]
    u = next(
        (
            b
            for b in _octonion_basis_scan(f)
            if not f.is_zero(b.mul(x13.conj()).trace())
        ),
        None,
    )
    if u is None:
        raise ReductionError(label_prefix, "trace pairing failed to produce a pivot")
    tb.apply(label_prefix + "/shear-12", GElement.from_g1(shear_gen(1, 2, u)))
    if not ok(tb.cur):
        raise ReductionError(label_prefix, "pivot is still zero after the shear")


def _octonion_basis_scan(field):
    return [Octonion.basis(field, k) for k in range(8)]


def _clear_first_row(tb, label_prefix):
    """Zero the octonion slots 3 and 2 of the first component using the (1,1) pivot."""
    f = tb.cur.field
    s11 = tb.cur.x1.s[0]
    x13 = tb.cur.x1.x[2]
    if not x13.is_zero():
        u = x13.conj().scale(f.neg(f.inv(s11)))
        tb.apply(label_prefix + "/shear-21", GElement.from_g1(shear_gen(2, 1, u)))
    x12 = tb.cur.x1.x[1]
    if not x12.is_zero():
        u = x12.scale(f.neg(f.inv(tb.cur.x1.s[0])))
        tb.apply(label_prefix + "/shear-31", GElement.from_g1(shear_gen(3, 1, u)))


def _second_pivot_and_clear(tb, label_prefix):
    """Diagonalize the lower 2x2 block of the first component."""
    f = tb.cur.field

    def s2_ok(x):
        return not f.is_zero(x.x1.s[1])

    def keeps_row1(x):
        return x.x1.x[1].is_zero() and x.x1.x[2].is_zero() and not f.is_zero(x.x1.s[0])

    if not s2_ok(tb.cur):
        if not f.is_zero(tb.cur.x1.s[2]):
            tb.apply(label_prefix + "/perm-23", _perm_gelement(f, _PERMS3[2]))
        elif not tb.cur.x1.x[0].is_zero():
            x11 = tb.cur.x1.x[0]
            u = next(
                (
                    b
                    for b in _octonion_basis_scan(f)
                    if not f.is_zero(b.mul(x11.conj()).trace())
                ),
                None,
            )
            if u is None:
                raise ReductionError(label_prefix, "no pairing for the second pivot")
            tb.apply(label_prefix + "/shear-23", GElement.from_g1(shear_gen(2, 3, u)))
        else:
            raise ReductionError(
                label_prefix, "lower block vanishes: input cannot be semistable"
            )
    if not (s2_ok(tb.cur) and keeps_row1(tb.cur)):
        raise ReductionError(label_prefix, "second pivot stage broke the first row")
    x11 = tb.cur.x1.x[0]
    if not x11.is_zero():
        u = x11.conj().scale(f.neg(f.inv(tb.cur.x1.s[1])))
        tb.apply(label_prefix + "/shear-32", GElement.from_g1(shear_gen(3, 2, u)))
    x1 = tb.cur.x1
    if not (x1.x[0].is_zero() and x1.x[1].is_zero() and x1.x[2].is_zero()):
        raise ReductionError(label_prefix, "first component is not diagonal")


def _diagonalize_first(tb, label_prefix):
    _first_pivot(tb, label_prefix)
    _clear_first_row(tb, label_prefix)
    _second_pivot_and_clear(tb, label_prefix)


def _change_oct_steps(tb, label):
    """Two block-preserving twists making the slot-1 octonion of x2 equal 1."""
    f = tb.cur.field
    y1 = tb.cur.x2.x[0]
    if f.is_zero(y1.norm()):
        raise ReductionError(label, "slot-1 octonion has zero norm")
    if y1 == Octonion.one(f):
        return
    beta = find_anisotropic_traceless_orthogonal(y1)
    tb.apply(label + "/twist-1", GElement.from_g1(oct_twist(beta.conj())))
    delta = tb.cur.x2.x[0]
    if not delta.is_traceless():
        raise ReductionError(label, "twist did not produce a traceless slot")
    tb.apply(label + "/twist-2", GElement.from_g1(oct_twist(delta)))
    if tb.cur.x2.x[0] != Octonion.one(f):
        raise ReductionError(label, "slot-1 octonion was not normalized to 1")


# -- the two branches ---------------------------------------------------------


def reduce_rank_deficient(x):
    """Reduction when the first component is singular (a rational root at (1,0))."""
    if not is_semistable(x):
        raise NotSemistableError("pair is not semistable")
    f = x.field
    if not f.is_zero(x.x1.det()):
        raise ValueError("first component must be singular")
    tb = _TraceBuilder(x)
    if is_canonical_root_form(x):
        return tb.trace()
    if not is_detx0_form(tb.cur):
        _diagonalize_first(tb, "root")
        x1 = tb.cur.x1
        if not f.is_zero(x1.s[2]):
            raise ReductionError("root/diag", "third pivot should vanish (det = 0)")
        if f.is_zero(x1.s[0]) or f.is_zero(x1.s[1]):
            raise ReductionError("root/diag", "missing pivot on a semistable input")
        if f.is_zero(tb.cur.x2.s[2]):
            raise ReductionError("root/s23", "semistable input must have s23 != 0")
        # clear the octonion slots 1, 2 of the second component (pivot s23)
        x21 = tb.cur.x2.x[0]
        if not x21.is_zero():
            u = x21.scale(f.neg(f.inv(tb.cur.x2.s[2])))
            tb.apply("root/shear-23", GElement.from_g1(shear_gen(2, 3, u)))
        x22 = tb.cur.x2.x[1]
        if not x22.is_zero():
            u = x22.conj().scale(f.neg(f.inv(tb.cur.x2.s[2])))
            tb.apply("root/shear-13", GElement.from_g1(shear_gen(1, 3, u)))
        if not (tb.cur.x2.x[0].is_zero() and tb.cur.x2.x[1].is_zero()):
            raise ReductionError("root/clear-x2", "failed to clear the second component")
        # rescale pivots to 1/2, -1/2 and s23 to 1
        half = f.div(f.one(), f.of_int(2))
        for slot, target in ((1, half), (2, f.neg(half))):
            cur = tb.cur.x1.s[slot - 1]
            if not f.eq(cur, target):
                alpha = find_with_norm(f, f.div(target, cur))
                tb.apply(f"root/rescale-{slot}", GElement.from_g1(diag_gen(slot, alpha)))
        s23 = tb.cur.x2.s[2]
        if not f.eq(s23, f.one()):
            alpha = find_with_norm(f, f.inv(s23))
            tb.apply("root/rescale-3", GElement.from_g1(diag_gen(3, alpha)))
        tb.apply(
            "root/antidiagonalize",
            _perm_like(f, [[1, -1, 0], [1, 1, 0], [0, 0, 1]]),
        )
        if not is_detx0_form(tb.cur):
            raise ReductionError("root/antidiagonalize", "intermediate shape not reached")
    # steps on the detx0 form
    if f.is_zero(tb.cur.x2.s[0]):
        if not f.is_zero(tb.cur.x2.s[1]):
            tb.apply("root/swap-12", _perm_gelement(f, _PERMS3[1]))
        else:
            x23 = tb.cur.x2.x[2]
            if x23.is_scalar():
                raise ReductionError("root/pivot-s21", "input cannot be semistable")
            u = find_traceless_pairing(x23)
            tb.apply("root/traceless-shear-12", GElement.from_g1(shear_gen(1, 2, u)))
    if f.is_zero(tb.cur.x2.s[0]):
        raise ReductionError("root/pivot-s21", "pivot still zero")
    x23 = tb.cur.x2.x[2]
    if not x23.is_scalar():
        s21 = tb.cur.x2.s[0]
        u = x23.conj().sub(x23).scale(f.inv(f.mul(f.of_int(2), s21)))
        tb.apply("root/scalarize-x23", GElement.from_g1(shear_gen(2, 1, u.neg())))
    t = tb.cur.x2.x[2].scalar_part()
    if not f.is_zero(t):
        tb.apply("root/gl2-clear-x23", _gl2(f, [[f.one(), f.zero()], [f.neg(t), f.one()]]))
    s21 = tb.cur.x2.s[0]
    alpha1 = find_with_norm(f, f.neg(f.inv(s21)))
    alpha2 = alpha1.inverse()
    tb.apply("root/final-d1", GElement.from_g1(diag_gen(1, alpha1)))
    tb.apply("root/final-d2", GElement.from_g1(diag_gen(2, alpha2)))
    if not is_canonical_root_form(tb.cur):
        raise ReductionError("root/final", "canonical shape not reached")
    return tb.trace()


def _perm_like(field, rows):
    return GElement.from_g1(congruence_gen(Mat.from_int_rows(field, rows)))


def reduce_irreducible(x, budget=8):
    """Reduction when the binary cubic has no rational root."""
    if not is_semistable(x):
        raise NotSemistableError("pair is not semistable")
    f = x.field
    tb = _TraceBuilder(x)
    if is_canonical_irreducible_form(x):
        return tb.trace()
    if f.is_zero(x.x1.det()):
        raise ValueError("first component must be invertible in the irreducible case")
    _diagonalize_first(tb, "irr")
    s1, s2, s3 = tb.cur.x1.s
    if f.is_zero(s1) or f.is_zero(s2) or f.is_zero(s3):
        raise ReductionError("irr/diag", "invertible component lost a pivot")
    half = f.div(f.one(), f.of_int(2))
    for slot, target in ((1, half), (2, f.of_int(-2)), (3, f.neg(half))):
        cur = tb.cur.x1.s[slot - 1]
        if not f.eq(cur, target):
            alpha = find_with_norm(f, f.div(target, cur))
            tb.apply(f"irr/rescale-{slot}", GElement.from_g1(diag_gen(slot, alpha)))
    tb.apply("irr/corner", _perm_like(f, [[1, 0, 1], [0, 1, 0], [1, 0, -1]]))
    if tb.cur.x1 != corner_anchor(f):
        raise ReductionError("irr/corner", "anchor shape not reached")
    # make s21 nonzero
    if f.is_zero(tb.cur.x2.s[0]):
        if not f.is_zero(tb.cur.x2.s[2]):
            tb.apply("irr/nu-swap", _perm_gelement(f, _PERMS3[3]))
        else:
            x23 = tb.cur.x2.x[2]
            if x23.is_zero():
                raise ReductionError("irr/pivot-s21", "input cannot be semistable")
            u = find_isotropic_nonvanishing(
                f, lambda v: f.div(x23.mul(v).trace(), f.of_int(2)), budget=budget
            )
            tb.apply("irr/b2-isotropic", GElement.from_g1(b_shear(2, u)))
    if f.is_zero(tb.cur.x2.s[0]):
        raise ReductionError("irr/pivot-s21", "pivot still zero")
    # clear the slot-3 octonion of x2
    x23 = tb.cur.x2.x[2]
    if not x23.is_zero():
        u = x23.scale(f.neg(f.inv(tb.cur.x2.s[0]))).conj()
        tb.apply("irr/b1-clear-x23", GElement.from_g1(b_shear(1, u)))
    if not tb.cur.x2.x[2].is_zero():
        raise ReductionError("irr/b1-clear-x23", "slot-3 octonion not cleared")
    # clear s22
    s22 = tb.cur.x2.s[1]
    if not f.is_zero(s22):
        tb.apply(
            "irr/gl2-clear-s22",
            _gl2(f, [[f.one(), f.zero()], [f.mul(half, s22), f.one()]]),
        )
    if not f.is_zero(tb.cur.x2.s[1]):
        raise ReductionError("irr/gl2-clear-s22", "s22 not cleared")
    if f.is_zero(tb.cur.x2.x[0].norm()):
        raise ReductionError("irr/norm-x21", "slot-1 octonion must be anisotropic")
    _change_oct_steps(tb, "irr/normalize-x21")
    # make the slot-2 octonion scalar, then reach (1, 0, 0 / 0 s c / 0 c s') shape
    x22 = tb.cur.x2.x[1]
    if not x22.is_scalar():
        s21 = tb.cur.x2.s[0]
        u = x22.conj().sub(x22).scale(f.inv(f.mul(f.of_int(2), s21)))
        tb.apply("irr/scalarize-x22", GElement.from_g1(shear_gen(3, 1, u)))
    if not tb.cur.x2.x[1].is_scalar():
        raise ReductionError("irr/scalarize-x22", "slot-2 octonion is not scalar")
    s21 = tb.cur.x2.s[0]
    w22 = tb.cur.x2.x[1].scalar_part()
    tb.apply(
        "irr/gl2-normalize",
        _gl2(
            f,
            [[f.one(), f.zero()], [f.neg(f.div(w22, s21)), f.inv(s21)]],
        ),
    )
    x2 = tb.cur.x2
    if not (
        f.eq(x2.s[0], f.one())
        and x2.x[1].is_zero()
        and x2.x[2].is_zero()
        and x2.x[0].is_scalar()
        and not f.is_zero(x2.x[0].norm())
    ):
        raise ReductionError("irr/gl2-normalize", "expected scalar-corner shape")
    # force an anisotropic slot-3 octonion
    tb.apply("irr/b1-two", GElement.from_g1(b_shear(1, Octonion.scalar(f, f.of_int(2)))))
    tb.apply("irr/gl2-sub", _gl2(f, [[f.one(), f.zero()], [f.of_int(-1), f.one()]]))
    u = find_with_trace_norm(f, f.of_int(-1), f.zero())
    tb.apply("irr/b2-trace", GElement.from_g1(b_shear(2, u)))
    if not f.is_zero(tb.cur.x2.s[0]):
        raise ReductionError("irr/b2-trace", "s21 did not return to zero")
    if f.is_zero(tb.cur.x2.x[2].norm()):
        raise ReductionError("irr/b2-trace", "slot-3 octonion is isotropic")
    # conjugated normalization: swap 1 <-> 3, normalize slot 1, swap back
    tb.apply("irr/nu", _perm_gelement(f, _PERMS3[3]))
    _change_oct_steps(tb, "irr/normalize-swapped")
    tb.apply("irr/nu-back", _perm_gelement(f, _PERMS3[3]))
    x2 = tb.cur.x2
    if not (f.is_zero(x2.s[0]) and x2.x[2] == Octonion.one(f)):
        raise ReductionError("irr/nu-back", "expected unit slot-3 octonion")
    # clear the slot-2 octonion
    x22 = tb.cur.x2.x[1]
    if not x22.is_zero():
        tb.apply(
            "irr/b1-clear-x22",
            GElement.from_g1(b_shear(1, x22.conj().scale(f.of_int(-2)))),
        )
    if not tb.cur.x2.x[1].is_zero():
        raise ReductionError("irr/b1-clear-x22", "slot-2 octonion not cleared")
    # make the slot-1 octonion scalar (pivot is the unit slot-3 entry)
    x21 = tb.cur.x2.x[0]
    if not x21.is_scalar():
        vbar = x21.conj().sub(x21).scale(half)
        tb.apply("irr/scalarize-x21", GElement.from_g1(shear_gen(3, 1, vbar.conj())))
    if not is_canonical_irreducible_form(tb.cur):
        raise ReductionError("irr/final", "canonical shape not reached")
    return tb.trace()


def reduce(x, budget=8):
    """Full reduction: route a rational root to (1, 0) if one exists."""
    if not is_semistable(x):
        raise NotSemistableError("pair is not semistable")
    f = x.field
    roots, _ = factor_binary_cubic(cubic_form(x))
    if not roots:
        return reduce_irreducible(x, budget=budget)
    tb = _TraceBuilder(x)
    if not f.is_zero(x.x1.det()):
        # the leading coefficient is nonzero, so every rational root is finite
        finite = sorted(
            (r[0] for r in roots), key=lambda t: (t if f == QQ else int(t))
        )
        t = finite[0]
        g2 = [[t, f.one()], [f.one(), f.zero()]]
        tb.apply("root/gl2-move-root", _gl2(f, g2))
    if not f.is_zero(tb.cur.x1.det()):
        raise ReductionError("root/gl2-move-root", "first component is still invertible")
    inner = reduce_rank_deficient(tb.cur)
    steps = tb.steps + inner.steps
    return ReductionTrace(x, inner.output, steps)


# -- representatives and sampling ---------------------------------------------


def representative_for_cubic(field, coeffs, budget=8):
    """A pair whose binary cubic is projectively equivalent to the given one.

    coeffs = (a, b, c, d) for a v1^3 + b v1^2 v2 + c v1 v2^2 + d v2^3 with
    nonzero discriminant.  The result has the canonical irreducible shape
    (anchor, scalar-symmetric matrix) even when the cubic is reducible.
    """
    from .pvs import BinaryCubic

    f = field
    fc = BinaryCubic(f, *[c if not isinstance(c, int) else f.of_int(c) for c in coeffs])
    if f.is_zero(disc(fc)):
        raise ValueError("cubic is degenerate")
    if f.is_zero(fc.a):
        moved = None
        for t in range(0, 4 * budget):
            for sgn in (1, -1):
                g2 = Mat(f, [[f.one(), f.of_int(sgn * t)], [f.zero(), f.one()]])
                cand = fc.substitute(g2)
                if not f.is_zero(cand.a):
                    moved = cand
                    break
            if moved is not None:
                break
        if moved is None:
            raise ValueError("could not move the cubic away from the line at infinity")
        fc = moved
    lam = f.div(f.of_int(2), fc.a)
    b2 = f.mul(lam, fc.b)
    c2 = f.mul(lam, fc.c)
    d2 = f.mul(lam, fc.d)
    av = f.neg(b2)
    bv = f.div(c2, f.of_int(2))
    cv = f.neg(d2)
    x2 = AlbertElement(
        f,
        (f.zero(), av, cv),
        (Octonion.scalar(f, bv), Octonion.zero(f), Octonion.one(f)),
    )
    return PairElement(corner_anchor(f), x2)


def same_orbit(x, y):
    cx, cy = classify(x), classify(y)
    return cx == cy


def _gf_nonresidue(field):
    for a in range(2, field.p):
        if not field.is_square(a):
            return field.of_int(a)
    raise AssertionError("no non-residue found")


def _gf_irreducible_cubic(field):
    """Deterministic scan for a monic irreducible cubic t^3 + a t + b over F_p."""
    p = field.p
    for a in range(p):
        for b in range(1, p):
            if all((t * t * t + a * t + b) % p for t in range(p)):
                return (field.of_int(b), field.of_int(a), field.zero(), field.one())
    raise AssertionError("no irreducible cubic found")


def class_representative(field, kind):
    """Canonical representative pair for an orbit class kind."""
    f = field
    if kind == "split3":
        return base_point(f)
    if kind == "one_plus_quad":
        if isinstance(f, PrimeField):
            nu = _gf_nonresidue(f)
            return representative_for_cubic(f, (f.one(), f.zero(), f.neg(nu), f.zero()))
        return representative_for_cubic(f, (f.one(), f.zero(), f.one(), f.zero()))
    if kind == "cubic":
        if isinstance(f, PrimeField):
            d, c, b, a = _gf_irreducible_cubic(f)
            return representative_for_cubic(f, (a, b, c, d))
        return representative_for_cubic(f, (f.one(), f.zero(), f.zero(), f.of_int(-2)))
    raise ValueError(f"unknown orbit class kind {kind!r}")


_KIND_ALIASES = {
    "split": "split3",
    "split3": "split3",
    "mixed": "one_plus_quad",
    "one_plus_quad": "one_plus_quad",
    "cubic": "cubic",
}


def random_semistable(field, kind, seed, word_length=4):
    """Deterministic random point in the orbit of the kind's representative."""
    kind = _KIND_ALIASES[kind]
    rng = random.Random(seed)
    rep = class_representative(field, kind)
    word = random_word(field, rng, word_length)
    x = act_word(word, rep)
    if not is_semistable(x):
        raise AssertionError("group action broke semistability")
    return x
