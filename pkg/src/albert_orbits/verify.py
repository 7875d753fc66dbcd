"""Identity batteries: every algebraic law the library relies on, runnable
as a suite with a deterministic seed.  Each battery raises AssertionError
on the first violated instance; the runner reports one PASS/FAIL line per
identity and returns whether everything passed.
"""

import random

from .albert import AlbertElement, trilinear
from .fields import PrimeField
from .group import (
    GElement,
    TrialityTriple,
    adjoint_tilde,
    alpha_prime,
    b_shear,
    congruence_gen,
    diag_gen,
    diag_scalar_gen,
    eta_prime,
    hat,
    is_derivation,
    is_in_h1,
    local_triality_solve,
    oct_twist,
    r_y,
    random_albert,
    random_gelement,
    random_invertible_octonion,
    random_octonion,
    random_unit_octonion,
    random_word,
    satisfies_local_triality,
    shear_gen,
    skew_basis,
    spin_embed,
    spin_from_unit,
    tau_elem,
    verify_triality,
)
from .linalg import Mat
from .octonion import (
    Octonion,
    find_isotropic_nonvanishing,
    find_traceless_pairing,
    find_with_norm,
    find_with_trace_norm,
)
from .orbits import (
    classify,
    eta_x,
    random_semistable,
    reduce,
    zero_set_rational,
)
from .perms import Perm
from .pvs import (
    Isotope,
    act,
    act_word,
    base_point,
    cubic_form,
    disc,
    equivariant_map,
    is_semistable,
    random_pair,
    word_apply_g1,
    word_det2,
    word_multiplier,
)

# ----------------------------------------------------------------- octonion


def _check(cond, msg):
    if not cond:
        raise AssertionError(msg)


def oct_unit_and_conj(field, trials, rng):
    one = Octonion.one(field)
    for _ in range(trials):
        x = random_octonion(field, rng)
        _check(one.mul(x) == x and x.mul(one) == x, "unit law failed")
        _check(x.conj().conj() == x, "conjugation is not an involution")
    _check(one.conj() == one, "conj(1) != 1")
    _check(field.eq(one.trace(), field.of_int(2)), "trace(1) != 2")


def oct_composition(field, trials, rng):
    for _ in range(trials):
        x = random_octonion(field, rng)
        y = random_octonion(field, rng)
        _check(
            field.eq(x.mul(y).norm(), field.mul(x.norm(), y.norm())),
            "norm is not multiplicative",
        )


def oct_moufang(field, trials, rng):
    for _ in range(trials):
        a = random_octonion(field, rng)
        x = random_octonion(field, rng)
        y = random_octonion(field, rng)
        xy = x.mul(y)
        left = a.mul(xy).mul(a)
        right = a.mul(xy.mul(a))
        prod = a.mul(x).mul(y.mul(a))
        _check(left == prod and right == prod, "Moufang identity failed")
        _check(a.mul(x.mul(a)) == a.mul(x).mul(a), "flexible law failed")


def oct_trace_relations(field, trials, rng):
    for _ in range(trials):
        x = random_octonion(field, rng)
        y = random_octonion(field, rng)
        z = random_octonion(field, rng)
        _check(
            field.eq(x.mul(y).mul(z).trace(), x.mul(y.mul(z)).trace()),
            "trace associativity failed",
        )
        _check(field.eq(x.mul(y).trace(), y.mul(x).trace()), "trace symmetry failed")


def oct_kernel_identities(field, trials, rng):
    for _ in range(trials):
        x = random_octonion(field, rng)
        y = random_octonion(field, rng)
        _check(x.mul(y).mul(y.conj()) == x.scale(y.norm()), "(xy)conj(y) != x||y||")
        _check(y.conj().mul(y.mul(x)) == x.scale(y.norm()), "conj(y)(yx) != x||y||")


def oct_linearized(field, trials, rng):
    two = field.of_int(2)
    for _ in range(trials):
        x = random_octonion(field, rng)
        y = random_octonion(field, rng)
        z = random_octonion(field, rng)
        left = x.mul(y).mul(z.conj()).add(x.mul(z).mul(y.conj()))
        _check(left == x.scale(field.mul(two, y.q_form(z))), "linearized identity failed")


def oct_conj_antihom(field, trials, rng):
    for _ in range(trials):
        x = random_octonion(field, rng)
        y = random_octonion(field, rng)
        _check(x.mul(y).conj() == y.conj().mul(x.conj()), "conj is not an antihomomorphism")


def oct_norm_trace_forms(field, trials, rng):
    two = field.of_int(2)
    for _ in range(trials):
        x = random_octonion(field, rng)
        y = random_octonion(field, rng)
        _check(
            x.mul(x.conj()) == Octonion.scalar(field, x.norm()),
            "x conj(x) is not the norm scalar",
        )
        _check(
            field.eq(x.mul(y.conj()).trace(), field.mul(two, x.q_form(y))),
            "tr(x conj(y)) != 2Q(x, y)",
        )
        _check(field.eq(x.q_form(x), x.norm()), "Q(x,x) != ||x||")
    t = random_octonion(field, rng)
    t = t.sub(Octonion.scalar(field, t.scalar_part()))
    _check(t.conj() == t.neg(), "conjugation is not -1 on the traceless part")


def oct_hyperbolic_basis(field, trials, rng):
    half = field.div(field.one(), field.of_int(2))
    for i in range(8):
        ei = Octonion.basis(field, i)
        _check(field.is_zero(ei.norm()), "basis vector is not isotropic")
        for j in range(8):
            q = ei.q_form(Octonion.basis(field, j))
            paired = (i // 2 == j // 2) and i != j
            _check(
                field.eq(q, half if paired else field.zero()),
                "hyperbolic Gram structure violated",
            )


def oct_inverse_law(field, trials, rng):
    one = Octonion.one(field)
    for _ in range(trials):
        x = random_invertible_octonion(field, rng)
        _check(x.mul(x.inverse()) == one and x.inverse().mul(x) == one, "inverse failed")


def oct_searches(field, trials, rng):
    for n in (field.one(), field.of_int(-1), field.of_int(5)):
        if field.is_zero(n):
            continue
        a = find_with_norm(field, n)
        _check(field.eq(a.norm(), n), "find_with_norm returned a wrong norm")
    _check(find_with_norm(field, field.one()) == Octonion.one(field), "norm-1 tie-break")
    for _ in range(max(trials // 10, 3)):
        x = random_octonion(field, rng)
        if x.is_scalar():
            continue
        u = find_traceless_pairing(x)
        _check(u.is_traceless(), "pairing element is not traceless")
        _check(
            not field.is_zero(x.conj().mul(u).trace()),
            "pairing element does not pair",
        )
        ell_target = random_octonion(field, rng)
        if ell_target.is_zero():
            continue
        u = find_isotropic_nonvanishing(
            field, lambda v: v.q_form(ell_target)
        )
        _check(field.is_zero(u.norm()), "search result is not isotropic")
        _check(not field.is_zero(u.q_form(ell_target)), "functional vanishes")
    for t, n in ((field.of_int(2), field.one()), (field.of_int(-1), field.zero()), (field.zero(), field.of_int(-1))):
        u = find_with_trace_norm(field, t, n)
        _check(field.eq(u.trace(), t) and field.eq(u.norm(), n), "trace/norm search failed")
    _check(
        find_with_trace_norm(field, field.of_int(2), field.one()) == Octonion.one(field),
        "trace-norm tie-break",
    )


# ----------------------------------------------------------------- albert


def _square_closed_form(X):
    """Independent expansion of X o X from the entry formulas."""
    f = X.field
    s1, s2, s3 = X.s
    x1, x2, x3 = X.x
    n1, n2, n3 = x1.norm(), x2.norm(), x3.norm()
    d1 = f.add(f.mul(s1, s1), f.add(n2, n3))
    d2 = f.add(f.mul(s2, s2), f.add(n1, n3))
    d3 = f.add(f.mul(s3, s3), f.add(n1, n2))
    y1 = x1.scale(f.add(s2, s3)).add(x3.conj().mul(x2.conj()))
    y2 = x2.scale(f.add(s1, s3)).add(x1.conj().mul(x3.conj()))
    y3 = x3.scale(f.add(s1, s2)).add(x2.conj().mul(x1.conj()))
    return AlbertElement(f, (d1, d2, d3), (y1, y2, y3))


def alb_unit(field, trials, rng):
    e = AlbertElement.unit(field)
    for _ in range(trials):
        X = random_albert(field, rng)
        _check(e.jordan_mul(X) == X, "Jordan unit law failed")


def alb_square_form(field, trials, rng):
    for _ in range(trials):
        X = random_albert(field, rng)
        _check(X.jordan_mul(X) == _square_closed_form(X), "square expansion mismatch")


def alb_bilinear_assoc(field, trials, rng):
    for _ in range(trials):
        X = random_albert(field, rng)
        Y = random_albert(field, rng)
        Z = random_albert(field, rng)
        _check(
            field.eq(X.jordan_mul(Y).bilinear(Z), X.bilinear(Y.jordan_mul(Z))),
            "trace form is not associative",
        )
        _check(
            field.eq(X.bilinear(Y), X.jordan_mul(Y).trace()),
            "bilinear form differs from Tr(X o Y)",
        )


def alb_det_scaling(field, trials, rng):
    for _ in range(trials):
        X = random_albert(field, rng)
        lam = field.rand(rng)
        cube = field.mul(lam, field.mul(lam, lam))
        _check(
            field.eq(X.scale(lam).det(), field.mul(cube, X.det())),
            "determinant is not cubic",
        )


def alb_trilinear_diag(field, trials, rng):
    for _ in range(trials):
        X = random_albert(field, rng)
        _check(field.eq(trilinear(X, X, X), X.det()), "D(X,X,X) != det(X)")


def alb_cross_adjunction(field, trials, rng):
    three = field.of_int(3)
    for _ in range(trials):
        X = random_albert(field, rng)
        Y = random_albert(field, rng)
        Z = random_albert(field, rng)
        _check(
            field.eq(X.cross(Y).bilinear(Z), field.mul(three, trilinear(X, Y, Z))),
            "cross adjunction failed",
        )


def alb_cross_identities(field, trials, rng):
    f = field
    e = AlbertElement.unit(f)
    _check(e.cross(e) == e, "e x e != e")
    three, four = f.of_int(3), f.of_int(4)
    for _ in range(trials):
        X = random_albert(f, rng)
        Y = random_albert(f, rng)
        dX = X.det()
        XX = X.cross(X)
        _check(X.jordan_mul(XX) == e.scale(dX), "X o (X x X) != det e")
        _check(XX.cross(XX) == X.scale(dX), "(XxX)x(XxX) != det X")
        lhs = X.cross(Y.cross(XX)).scale(four)
        rhs = Y.scale(dX).add(XX.scale(X.bilinear(Y)))
        _check(lhs == rhs, "triple cross identity (iv) failed")
        lhs = XX.cross(X.cross(Y)).scale(four)
        rhs = Y.scale(dX).add(X.scale(f.mul(three, trilinear(X, X, Y))))
        _check(lhs == rhs, "triple cross identity (v) failed")
        XY = X.cross(Y)
        lhs = XY.cross(XY).scale(four)
        rhs = XX.cross(Y.cross(Y)).scale(f.of_int(-2))
        rhs = rhs.add(X.scale(f.mul(three, trilinear(X, Y, Y))))
        rhs = rhs.add(Y.scale(f.mul(three, trilinear(X, X, Y))))
        _check(lhs == rhs, "triple cross identity (vi) failed")


def alb_slot_products(field, trials, rng):
    f = field
    half = f.div(f.one(), f.of_int(2))
    a = random_octonion(f, rng)
    s1 = AlbertElement.oct_slot(f, 1, a)
    _check(
        s1.jordan_mul(AlbertElement.diag_idempotent(f, 1)).is_zero(),
        "slot-1 times E1 should vanish",
    )
    _check(
        s1.jordan_mul(AlbertElement.diag_idempotent(f, 2)) == s1.scale(half),
        "slot-1 times E2 should halve",
    )
    w = base_point(f)
    E = [AlbertElement.diag_idempotent(f, i) for i in (1, 2, 3)]
    _check(w.x1.cross(w.x1) == E[2].neg(), "w1 x w1 != -E3")
    _check(w.x2.cross(w.x2) == E[0].neg(), "w2 x w2 != -E1")
    _check(
        w.x1.cross(w.x1).cross(w.x2.cross(w.x2)) == E[1].scale(half),
        "(w1xw1)x(w2xw2) != E2/2",
    )
    third = f.div(f.one(), f.of_int(3))
    _check(field.eq(trilinear(w.x1, w.x1, w.x2), third), "D(w1,w1,w2) != 1/3")
    _check(field.eq(trilinear(w.x1, w.x2, w.x2), f.neg(third)), "D(w1,w2,w2) != -1/3")


# ----------------------------------------------------------------- group


def grp_multipliers(field, trials, rng):
    f = field
    for _ in range(max(trials // 10, 3)):
        a = random_invertible_octonion(f, rng)
        for i in (1, 2, 3):
            _check(
                f.eq(diag_gen(i, a).multiplier(), a.norm()),
                "diag_gen multiplier is not the norm",
            )
        a1, a2, a3 = (f.rand_nonzero(rng) for _ in range(3))
        prod = f.mul(a1, f.mul(a2, a3))
        _check(
            f.eq(diag_scalar_gen(a1, a2, a3, f).multiplier(), f.mul(prod, prod)),
            "scalar congruence multiplier",
        )
        u = random_octonion(f, rng)
        _check(f.eq(shear_gen(2, 1, u).multiplier(), f.one()), "shear multiplier")
        _check(f.eq(b_shear(1, u).multiplier(), f.one()), "b-shear multiplier")
        _check(f.eq(oct_twist(a).multiplier(), f.one()), "twist multiplier")
        t = f.rand_nonzero(rng)
        g = spin_embed(t, spin_from_unit(random_unit_octonion(f, rng)))
        _check(
            f.eq(g.g1.multiplier(), f.mul(t, f.mul(t, t))),
            "spin embedding multiplier is not t^3",
        )


def grp_det_invariance(field, trials, rng):
    f = field
    for _ in range(trials):
        g = random_gelement(f, rng)
        X = random_albert(f, rng)
        _check(
            f.eq(g.g1.apply(X).det(), f.mul(g.g1.multiplier(), X.det())),
            "det(g X) != c(g) det(X)",
        )


def grp_b_factorization(field, trials, rng):
    f = field
    quarter = f.div(f.one(), f.of_int(4))
    half = f.div(f.one(), f.of_int(2))
    for _ in range(max(trials // 10, 3)):
        u = random_octonion(f, rng)
        lhs = b_shear(1, u)
        rhs = shear_gen(3, 1, Octonion.scalar(f, f.neg(f.mul(quarter, u.norm()))))
        rhs = rhs.compose(shear_gen(3, 2, u.conj().scale(half)))
        rhs = rhs.compose(shear_gen(2, 1, u))
        _check(lhs == rhs, "b-shear factorization failed")


def grp_anchor_stabilizers(field, trials, rng):
    from .orbits import corner_anchor

    f = field
    anchor = corner_anchor(f)
    for _ in range(max(trials // 10, 3)):
        u = random_octonion(f, rng)
        _check(b_shear(1, u).apply(anchor) == anchor, "b1 does not fix the anchor")
        _check(b_shear(2, u).apply(anchor) == anchor, "b2 does not fix the anchor")
        b = random_invertible_octonion(f, rng)
        b = b.sub(Octonion.scalar(f, b.scalar_part()))
        if f.is_zero(b.norm()):
            continue
        tw = oct_twist(b)
        _check(tw.apply(anchor) == anchor, "traceless twist does not fix the anchor")
        _check(_preserves_blocks(tw), "twist does not preserve the slot blocks")


def _preserves_blocks(g):
    """Matrix preserves k E_i and each octonion slot in the flattening."""
    f = g.field
    blocks = [range(0, 1), range(1, 2), range(2, 3), range(3, 11), range(11, 19), range(19, 27)]
    owner = {}
    for b, rng_ in enumerate(blocks):
        for k in rng_:
            owner[k] = b
    m = g.mat.data
    for col in range(27):
        for row in range(27):
            if not f.is_zero(m[row][col]) and owner[row] != owner[col]:
                return False
    return True


def grp_tau_relations(field, trials, rng):
    f = field
    t1, t2 = tau_elem(f, 1), tau_elem(f, 2)
    e = GElement.identity(f)
    _check(t1.compose(t1) == e and t2.compose(t2) == e, "tau involutions failed")
    t12 = t1.compose(t2)
    _check(t12.compose(t12) == t2.compose(t1), "(t1 t2)^2 != t2 t1")
    seen = [e]
    frontier = [e]
    for _ in range(6):
        new = []
        for g in frontier:
            for h in (t1, t2):
                cand = g.compose(h)
                if not any(cand == s for s in seen):
                    seen.append(cand)
                    new.append(cand)
        frontier = new
    _check(len(seen) == 6, "tau word group does not have order 6")
    w = base_point(f)
    _check(act(t1, w) == w and act(t2, w) == w, "tau does not stabilize the base pair")


def grp_spin(field, trials, rng):
    f = field
    ident = TrialityTriple.identity(f)
    _check(verify_triality(ident), "identity triple rejected")
    minus = Mat.identity(f, 8).scale(f.of_int(-1))
    _check(
        not verify_triality(TrialityTriple(Mat.identity(f, 8), Mat.identity(f, 8), minus)),
        "sign-broken triple accepted",
    )
    _check(
        verify_triality(TrialityTriple(minus, minus, Mat.identity(f, 8))),
        "(-I, -I, I) rejected",
    )
    w = base_point(f)
    for _ in range(max(trials // 20, 2)):
        T = spin_from_unit(random_unit_octonion(f, rng))
        _check(verify_triality(T), "Moufang triple rejected")
        S = spin_from_unit(random_unit_octonion(f, rng))
        _check(verify_triality(T.compose(S)), "triality group is not closed")
        g = spin_embed(f.one(), T)
        _check(act(g, w) == w, "spin embedding does not fix the base pair")
        _check(_preserves_blocks(g.g1), "spin embedding is not block diagonal")
        for i in (1, 2, 3):
            E = eta_prime(i, T)
            _check(verify_triality(E), "eta' image is not a triple")
            _check(
                _triple_eq(eta_prime(i, E), T), "eta' is not an involution"
            )
    T = spin_from_unit(random_unit_octonion(f, rng))
    orbit = [T]
    cur = T
    for k in range(5):
        cur = eta_prime(1 if k % 2 == 0 else 3, cur)
        orbit.append(cur)
    _check(
        _triple_eq(eta_prime(1 if 5 % 2 == 0 else 3, cur), T),
        "eta'_1, eta'_3 word of length 6 is not the identity",
    )


def _triple_eq(a, b):
    return a.a == b.a and a.b == b.b and a.c == b.c


def grp_tilde(field, trials, rng):
    f = field
    from .albert import gram_matrix

    S = gram_matrix(f)
    for _ in range(max(trials // 10, 3)):
        g = shear_gen(2, 1, random_octonion(f, rng)).compose(
            shear_gen(1, 3, random_octonion(f, rng))
        )
        gt = adjoint_tilde(g)
        _check(
            g.mat.transpose().mul(S).mul(gt.mat) == S,
            "adjoint does not preserve the trace form",
        )
        X = random_albert(f, rng)
        Y = random_albert(f, rng)
        _check(
            g.apply(X.cross(Y)) == gt.apply(X).cross(gt.apply(Y)),
            "cross-product adjoint identity failed",
        )
        _check(
            adjoint_tilde(gt) == g, "trace-form adjoint is not an involution"
        )


def grp_conjugation_identities(field, trials, rng):
    f = field
    pairs = [
        ([[0, 1, 0], [1, 0, 0], [0, 0, 1]], [[-1, 0], [1, 1]]),
        ([[1, 0, 0], [0, 0, 1], [0, 1, 0]], [[1, 1], [0, -1]]),
        ([[0, -1, 0], [-1, 0, 0], [0, 0, 1]], [[-1, 0], [1, 1]]),
    ]
    reps = [
        GElement(congruence_gen(Mat.from_int_rows(f, m3)), Mat.from_int_rows(f, m2))
        for m3, m2 in pairs
    ]
    t1, t2 = tau_elem(f, 1), tau_elem(f, 2)
    minus = Mat.identity(f, 8).scale(f.of_int(-1))
    twist = spin_embed(f.one(), TrialityTriple(minus, minus, Mat.identity(f, 8)))
    _check(reps[0] == t1, "first congruence pair is not tau_1")
    _check(reps[1] == t2, "second congruence pair is not tau_2")
    _check(reps[2] == t1.compose(twist), "third congruence pair mismatch")


def grp_local_triality(field, trials, rng):
    f = field
    for t1 in skew_basis(f):
        t2, t3 = local_triality_solve(t1)
        _check(satisfies_local_triality(t1, t2, t3), "solved triple fails the identity")
        _check(
            satisfies_local_triality(t2, t1, hat(t3)),
            "cyclic shift (t2, t1, hat t3) fails",
        )
        _check(
            satisfies_local_triality(t3, hat(t2), t1),
            "cyclic shift (t3, hat t2, t1) fails",
        )
    z = Mat.zeros(f, 8, 8)
    t2, t3 = local_triality_solve(z)
    _check(t2.is_zero() and t3.is_zero(), "zero input must give zero output")


def grp_lie_membership(field, trials, rng):
    f = field
    Y = random_albert(f, rng)
    Y = Y.sub(AlbertElement.unit(f).scale(f.div(Y.trace(), f.of_int(3))))
    _check(is_in_h1(r_y(Y), rng), "traceless right multiplication rejected")
    _check(not is_in_h1(r_y(AlbertElement.unit(f)), rng), "R_e wrongly accepted")
    a = random_octonion(f, rng)
    L = alpha_prime(1, a)
    _check(is_derivation(L), "slot commutator is not a derivation")
    X = random_albert(f, rng)
    out = L.apply(X)
    quarter = f.div(f.one(), f.of_int(4))
    s1, s2, s3 = X.s
    x1, x2, x3 = X.x
    two_q = f.mul(f.of_int(2), a.q_form(x1))
    expected = AlbertElement(
        f,
        (f.zero(), f.mul(quarter, two_q), f.neg(f.mul(quarter, two_q))),
        (
            a.scale(f.mul(quarter, f.sub(s3, s2))),
            x3.mul(a).conj().scale(f.neg(quarter)),
            a.mul(x2).conj().scale(quarter),
        ),
    )
    _check(out == expected, "slot commutator action mismatch")


# ----------------------------------------------------------------- pvs


def pvs_m_base(field, trials, rng):
    w = base_point(field)
    _check(equivariant_map(w) == AlbertElement.unit(field), "m(w) != e")


def pvs_f_base(field, trials, rng):
    f = field
    w = base_point(f)
    fc = cubic_form(w)
    _check(
        f.is_zero(fc.a)
        and f.eq(fc.b, f.one())
        and f.eq(fc.c, f.of_int(-1))
        and f.is_zero(fc.d),
        "F_w != v1^2 v2 - v1 v2^2",
    )
    _check(f.eq(disc(fc), f.one()), "disc(F_w) != 1")
    _check(is_semistable(w), "base pair must be semistable")
    roots = zero_set_rational(w)
    expect = [(f.zero(), f.one()), (f.one(), f.one()), (f.one(), f.zero())]
    _check(
        all(f.eq(a, c) and f.eq(b, d) for (a, b), (c, d) in zip(roots, expect)),
        "zero set of the base pair mismatch",
    )


def pvs_equivariance(field, trials, rng):
    f = field
    for _ in range(trials):
        word = random_word(f, rng, rng.randrange(2, 5))
        x = random_pair(f, rng)
        gx = act_word(word, x)
        c = word_multiplier(word)
        d2 = word_det2(word)
        scale = f.mul(c, f.mul(d2, d2))
        _check(
            equivariant_map(gx) == word_apply_g1(word, equivariant_map(x)).scale(scale),
            "equivariant map law failed",
        )
        lhs = disc(cubic_form(gx))
        factor = f.mul(
            f.mul(f.mul(c, c), f.mul(c, c)),
            f.mul(f.mul(d2, d2), f.mul(d2, f.mul(d2, f.mul(d2, d2)))),
        )
        _check(
            f.eq(lhs, f.mul(factor, disc(cubic_form(x)))),
            "discriminant transformation law failed",
        )


def pvs_cubic_equivariance(field, trials, rng):
    f = field
    for _ in range(trials):
        g = random_gelement(f, rng)
        x = random_pair(f, rng)
        lhs = cubic_form(act(g, x))
        rhs = cubic_form(x).substitute(g.g2).scale(g.g1.multiplier())
        _check(lhs == rhs, "cubic form equivariance failed")


def pvs_det_m_is_disc(field, trials, rng):
    f = field
    w = base_point(f)
    _check(
        f.eq(equivariant_map(w).det(), disc(cubic_form(w))),
        "normalization at the base pair failed",
    )
    for _ in range(trials):
        x = random_pair(f, rng)
        _check(
            f.eq(equivariant_map(x).det(), disc(cubic_form(x))),
            "det(m(x)) != disc(F_x)",
        )


def pvs_isotope(field, trials, rng):
    f = field
    e = AlbertElement.unit(f)
    iso_e = Isotope(e)
    for _ in range(max(trials // 4, 3)):
        X = random_albert(f, rng)
        Y = random_albert(f, rng)
        _check(iso_e.mul(X, Y) == X.jordan_mul(Y), "isotope at e differs from the product")
        m = random_albert(f, rng)
        if f.is_zero(m.det()):
            continue
        iso = Isotope(m)
        _check(iso.mul(X, m) == X, "isotope unit law failed")
        _check(iso.mul(m, X) == X, "isotope unit law failed on the left")
        _check(
            f.eq(iso.det(X), f.mul(f.inv(m.det()), X.det())),
            "isotope determinant law failed",
        )
        _check(f.eq(iso.det(m), f.one()), "det_m(m) != 1")


def pvs_subalgebra(field, trials, rng):
    from .pvs import cubic_subalgebra

    f = field
    w = base_point(f)
    sub = cubic_subalgebra(w)
    _check(sub.basis[2] == AlbertElement.unit(f), "base subalgebra unit mismatch")
    kinds = ["split", "mixed", "cubic"]
    for k in range(max(trials // 16, 2)):
        x = random_semistable(f, kinds[k % 3], seed=rng.randrange(1 << 30))
        cubic_subalgebra(x)  # closure and rank checks are internal


# ----------------------------------------------------------------- orbits


def orb_eta_base(field, trials, rng):
    f = field
    w = base_point(f)
    _check(eta_x(w, tau_elem(f, 1)) == Perm((2, 1, 3)), "eta_w(tau_1) != (1 2)")
    _check(eta_x(w, tau_elem(f, 2)) == Perm((1, 3, 2)), "eta_w(tau_2) != (2 3)")
    composed = eta_x(w, tau_elem(f, 1).compose(tau_elem(f, 2)))
    _check(
        composed == eta_x(w, tau_elem(f, 1)).mul(eta_x(w, tau_elem(f, 2))),
        "eta_w is not a homomorphism under the composition convention",
    )


def orb_classify_invariance(field, trials, rng):
    f = field
    kinds = ["split", "mixed", "cubic"]
    for k in range(max(trials // 8, 3)):
        kind = kinds[k % 3]
        x = random_semistable(f, kind, seed=rng.randrange(1 << 30))
        g = random_gelement(f, rng)
        _check(classify(act(g, x)) == classify(x), "class is not orbit invariant")


def orb_reduction_roundtrip(field, trials, rng):
    from .orbits import (
        is_canonical_irreducible_form,
        is_canonical_root_form,
    )

    f = field
    kinds = ["split", "mixed", "cubic"]
    for k in range(max(trials // 16, 3)):
        kind = kinds[k % 3]
        x = random_semistable(f, kind, seed=rng.randrange(1 << 30))
        tr = reduce(x)
        tr.validate()
        _check(
            is_canonical_root_form(tr.output) or is_canonical_irreducible_form(tr.output),
            "output is not canonical",
        )
        _check(classify(tr.output) == classify(x), "reduction changed the class")


def orb_finite_count(field, trials, rng):
    if not isinstance(field, PrimeField):
        return
    kinds = set()
    found = 0
    while found < trials:
        x = random_pair(field, rng)
        if not is_semistable(x):
            continue
        found += 1
        kinds.add(classify(x).kind)
    _check(kinds == {"split3", "one_plus_quad", "cubic"}, "expected exactly 3 classes")


SUITES = {
    "octonion": [
        ("unit-and-conjugation", oct_unit_and_conj),
        ("composition-norm", oct_composition),
        ("moufang", oct_moufang),
        ("trace-relations", oct_trace_relations),
        ("kernel-identities", oct_kernel_identities),
        ("linearized-product", oct_linearized),
        ("conjugation-antihomomorphism", oct_conj_antihom),
        ("norm-trace-forms", oct_norm_trace_forms),
        ("hyperbolic-basis", oct_hyperbolic_basis),
        ("inverses", oct_inverse_law),
        ("deterministic-searches", oct_searches),
    ],
    "albert": [
        ("jordan-unit", alb_unit),
        ("square-closed-form", alb_square_form),
        ("bilinear-associativity", alb_bilinear_assoc),
        ("determinant-cubic-scaling", alb_det_scaling),
        ("trilinear-diagonal", alb_trilinear_diag),
        ("cross-adjunction", alb_cross_adjunction),
        ("cross-identities", alb_cross_identities),
        ("slot-products-and-base-values", alb_slot_products),
    ],
    "group": [
        ("generator-multipliers", grp_multipliers),
        ("determinant-invariance", grp_det_invariance),
        ("b-shear-factorization", grp_b_factorization),
        ("anchor-stabilizers", grp_anchor_stabilizers),
        ("tau-relations", grp_tau_relations),
        ("triality", grp_spin),
        ("trace-form-adjoint", grp_tilde),
        ("conjugation-identities", grp_conjugation_identities),
        ("local-triality", grp_local_triality),
        ("lie-membership", grp_lie_membership),
    ],
    "pvs": [
        ("equivariant-map-base-value", pvs_m_base),
        ("cubic-form-base-values", pvs_f_base),
        ("equivariance", pvs_equivariance),
        ("cubic-form-equivariance", pvs_cubic_equivariance),
        ("det-m-equals-disc", pvs_det_m_is_disc),
        ("isotopes", pvs_isotope),
        ("cubic-subalgebra", pvs_subalgebra),
    ],
    "orbits": [
        ("eta-base-values", orb_eta_base),
        ("class-invariance", orb_classify_invariance),
        ("reduction-roundtrip", orb_reduction_roundtrip),
        ("finite-field-class-count", orb_finite_count),
    ],
}


def run_suites(names, field, trials, seed):
    """Run the named suites; returns (lines, all_passed)."""
    if names == ["all"]:
        names = list(SUITES)
    lines = []
    ok = True
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}")
        for ident, fn in SUITES[name]:
            rng = random.Random(seed)
            try:
                fn(field, trials, rng)
                lines.append(f"PASS {name}.{ident}")
            except AssertionError as exc:
                ok = False
                lines.append(f"FAIL {name}.{ident}: {exc}")
    return lines, ok
