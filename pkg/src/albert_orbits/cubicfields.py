"""Integer polynomial utilities and the cubic-field isomorphism test.

Polynomials are ascending integer coefficient lists.  The isomorphism
test for irreducible integer cubics f, g follows the resultant method:
for a shift s, the degree-9 polynomial

    N_s(x) = Res_t(f(t), g(x + s t))

has roots (root of g) - s (root of f); once N_s is squarefree, the two
cubic fields are isomorphic iff N_s has an irreducible factor of degree
at most 3.  Factors are detected by a rational-root scan plus a bounded
Zassenhaus step: factor N_s modulo one good prime, Hensel-lift to above
the coefficient bound, and recombine subsets of modular factors with
degree sum <= 3, certifying candidates by exact trial division.
"""

import random
from fractions import Fraction
from math import gcd, isqrt


# -- basic integer polynomial arithmetic (ascending coefficients) -----------


def pnormalize(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def pdeg(p):
    return len(p) - 1


def padd(p, q):
    n = max(len(p), len(q))
    return pnormalize([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def psub(p, q):
    n = max(len(p), len(q))
    return pnormalize([(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)])


def pmul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return pnormalize(out)


def pscale(p, c):
    return pnormalize([c * a for a in p])


def peval(p, x):
    acc = 0
    for a in reversed(p):
        acc = acc * x + a
    return acc


def pderiv(p):
    return pnormalize([i * a for i, a in enumerate(p)][1:])


def pcontent(p):
    c = 0
    for a in p:
        c = gcd(c, a)
    return c or 1


def pprimitive(p):
    p = pnormalize(p)
    if not p:
        return p
    c = pcontent(p)
    sign = -1 if p[-1] < 0 else 1
    return [a // (sign * c) for a in p]


def pdivmod_exact(p, q):
    """Division in QQ[x] with Fraction arithmetic; returns (quot, rem)."""
    p = [Fraction(a) for a in p]
    q = [Fraction(a) for a in q]
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    while len(p) >= len(q) and any(p):
        p = pnormalize(p)
        if len(p) < len(q):
            break
        c = p[-1] / q[-1]
        k = len(p) - len(q)
        quot[k] = c
        p = psub(p, pscale([0] * k + q, c))
    return pnormalize(quot), pnormalize(p)


def pdivides_z(p, q):
    """True iff q divides p exactly over ZZ."""
    quot, rem = pdivmod_exact(p, q)
    return not rem and all(c.denominator == 1 for c in quot)


def pgcd_q(p, q):
    """Monic gcd over QQ."""
    a = [Fraction(c) for c in pnormalize(p)]
    b = [Fraction(c) for c in pnormalize(q)]
    while b:
        _, r = pdivmod_exact(a, b)
        a, b = b, r
    if not a:
        return []
    lead = a[-1]
    return [c / lead for c in a]


def is_squarefree_z(p):
    return pdeg(pgcd_q(p, pderiv(p))) == 0


# -- resultants --------------------------------------------------------------


def sylvester_resultant(p, q):
    """Resultant of two integer polynomials via Bareiss on the Sylvester matrix."""
    p, q = pnormalize(p), pnormalize(q)
    m, n = pdeg(p), pdeg(q)
    if m < 0 or n < 0:
        return 0
    if m == 0:
        return p[0] ** n
    if n == 0:
        return q[0] ** m
    size = m + n
    rows = []
    pc = list(reversed(p))
    qc = list(reversed(q))
    for i in range(n):
        rows.append([0] * i + pc + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + qc + [0] * (size - n - 1 - i))
    return _int_det(rows)


def _int_det(m):
    n = len(m)
    m = [row[:] for row in m]
    prev = 1
    sign = 1
    for c in range(n - 1):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                m[i][j] = (m[c][c] * m[i][j] - m[i][c] * m[c][j]) // prev
            m[i][c] = 0
        prev = m[c][c]
    return sign * m[n - 1][n - 1]


def shifted_resultant(f, g, s):
    """N_s(x) = Res_t(f(t), g(x + s t)) by evaluation and interpolation."""
    deg = pdeg(f) * pdeg(g)
    xs = list(range(deg + 1))
    ys = []
    for x0 in xs:
        # g(x0 + s t) as a polynomial in t
        gt = []
        for j, c in enumerate(g):
            # c * (x0 + s t)^j
            term = [c]
            for _ in range(j):
                term = padd(pscale(term, x0), [0] + pscale(term, s))
            gt = padd(gt, term)
        ys.append(sylvester_resultant(f, gt))
    # Lagrange interpolation; the result is an integer polynomial
    out = [Fraction(0)] * (deg + 1)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        num = [Fraction(1)]
        den = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                num = pmul(num, [Fraction(-xj), Fraction(1)])
                den *= xi - xj
        coef = Fraction(yi) / den
        for k, c in enumerate(num):
            out[k] += coef * c
    res = []
    for c in out:
        if c.denominator != 1:
            raise AssertionError("interpolated resultant is not integral")
        res.append(c.numerator)
    return pnormalize(res)


# -- arithmetic mod p (ascending lists of ints in [0, m)) ---------------------


def mp_normalize(p, m):
    p = [c % m for c in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def mp_add(p, q, m):
    n = max(len(p), len(q))
    return mp_normalize(
        [((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)) for i in range(n)], m
    )


def mp_sub(p, q, m):
    n = max(len(p), len(q))
    return mp_normalize(
        [((p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0)) for i in range(n)], m
    )


def mp_mul(p, q, m):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] = (out[i + j] + a * b) % m
    return mp_normalize(out, m)


def mp_divmod(p, q, m):
    """Division by a polynomial whose leading coefficient is a unit mod m."""
    p = mp_normalize(p, m)
    q = mp_normalize(q, m)
    if not q:
        raise ZeroDivisionError
    inv_lead = pow(q[-1], -1, m)
    quot = [0] * max(len(p) - len(q) + 1, 0)
    while len(p) >= len(q) and p:
        c = (p[-1] * inv_lead) % m
        k = len(p) - len(q)
        quot[k] = c
        p = mp_sub(p, [0] * k + [(c * b) % m for b in q], m)
    return mp_normalize(quot, m), p


def mp_gcd(p, q, m):
    a, b = mp_normalize(p, m), mp_normalize(q, m)
    while b:
        _, r = mp_divmod(a, b, m)
        a, b = b, r
    if a:
        inv = pow(a[-1], -1, m)
        a = mp_normalize([c * inv for c in a], m)
    return a


def mp_powmod(base, e, mod_poly, m):
    result = [1]
    base = mp_divmod(base, mod_poly, m)[1]
    while e:
        if e & 1:
            result = mp_divmod(mp_mul(result, base, m), mod_poly, m)[1]
        base = mp_divmod(mp_mul(base, base, m), mod_poly, m)[1]
        e >>= 1
    return result


def mp_monic(p, m):
    p = mp_normalize(p, m)
    if not p:
        return p
    inv = pow(p[-1], -1, m)
    return mp_normalize([c * inv for c in p], m)


def factor_mod_p(f, p, seed=1):
    """Monic irreducible factors of a squarefree monic f modulo prime p."""
    rng = random.Random(seed)
    f = mp_monic(f, p)
    factors = []
    # distinct-degree decomposition
    stage = []
    h = [0, 1]
    v = f
    d = 0
    while pdeg(v) >= 1:
        d += 1
        if 2 * d > pdeg(v):
            stage.append((v, pdeg(v)))
            break
        h = mp_powmod(h, p, f, p)
        g = mp_gcd(mp_sub(h, [0, 1], p), v, p)
        if pdeg(g) >= 1:
            stage.append((g, d))
            v = mp_divmod(v, g, p)[0]
    # equal-degree splitting (Cantor-Zassenhaus, p odd)
    for poly, d in stage:
        work = [poly]
        while work:
            w = work.pop()
            if pdeg(w) == d:
                factors.append(mp_monic(w, p))
                continue
            while True:
                a = [rng.randrange(p) for _ in range(pdeg(w))] + [1]
                b = mp_powmod(a, (p**d - 1) // 2, w, p)
                g = mp_gcd(mp_sub(b, [1], p), w, p)
                if 1 <= pdeg(g) < pdeg(w):
                    work.append(g)
                    work.append(mp_divmod(w, g, p)[0])
                    break
    factors.sort(key=lambda q: (pdeg(q), q))
    return factors


def hensel_lift_pair(f, g, h, u, v, q):
    """One quadratic lift step: f = g h (mod q^2) from f = g h (mod q)."""
    m = q * q
    e = mp_sub(f, mp_mul(g, h, m), m)
    t, r = mp_divmod(mp_mul(v, e, m), g, m)
    g1 = mp_add(g, r, m)
    h1 = mp_add(h, mp_add(mp_mul(u, e, m), mp_mul(t, h, m), m), m)
    b = mp_sub(mp_add(mp_mul(u, g1, m), mp_mul(v, h1, m), m), [1], m)
    t2, r2 = mp_divmod(mp_mul(v, b, m), g1, m)
    v1 = mp_sub(v, r2, m)
    u1 = mp_sub(u, mp_add(mp_mul(u, b, m), mp_mul(t2, h1, m), m), m)
    return g1, h1, u1, v1


def mp_bezout(g, h, p):
    """u, v with u g + v h = 1 mod p for coprime g, h."""
    r0, r1 = mp_normalize(g, p), mp_normalize(h, p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = mp_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, mp_sub(s0, mp_mul(q, s1, p), p)
        t0, t1 = t1, mp_sub(t0, mp_mul(q, t1, p), p)
    if pdeg(r0) != 0:
        raise ValueError("factors are not coprime")
    inv = pow(r0[0], -1, p)
    return mp_normalize([c * inv for c in s0], p), mp_normalize([c * inv for c in t0], p)


def hensel_lift_factors(f, factors, p, bound):
    """Lift a monic squarefree factorization mod p to modulus > bound.

    Returns (modulus, lifted monic factors).  Recursive two-way split.
    """
    k = 1
    q = p
    while q <= bound:
        q *= p
        k += 1

    def lift(poly, facs, modulus_target):
        if len(facs) == 1:
            return [mp_monic(poly, modulus_target)]
        half = len(facs) // 2
        g = [1]
        for fac in facs[:half]:
            g = mp_mul(g, fac, p)
        h = [1]
        for fac in facs[half:]:
            h = mp_mul(h, fac, p)
        u, v = mp_bezout(g, h, p)
        q_cur = p
        while q_cur < modulus_target:
            fq = mp_normalize(poly, q_cur * q_cur)
            g, h, u, v = hensel_lift_pair(fq, g, h, u, v, q_cur)
            q_cur *= q_cur
        g = mp_monic(g, modulus_target)
        h = mp_monic(h, modulus_target)
        return lift(g, facs[:half], modulus_target) + lift(h, facs[half:], modulus_target)

    modulus = q
    return modulus, lift(mp_normalize(f, modulus), factors, modulus)


def _symmetric(c, m):
    c %= m
    return c - m if c > m // 2 else c


def _norm2_bound(p):
    s = 0
    for c in p:
        s += c * c
    return isqrt(s) + 1


def monicize(p):
    """lc^(deg-1) p(x / lc): monic integer polynomial with the same factor degrees."""
    p = pnormalize(p)
    lead = p[-1]
    n = pdeg(p)
    return [c * lead ** (n - 1 - i) for i, c in enumerate(p[:-1])] + [1]


def _good_prime(f, start=5):
    p = start
    while True:
        p = _next_prime(p)
        fp = mp_normalize(f, p)
        if pdeg(fp) == pdeg(f) and pdeg(mp_gcd(fp, mp_normalize(pderiv(f), p), p)) == 0:
            return p


def _next_prime(n):
    n += 1
    while True:
        if n % 2 and all(n % q for q in range(3, isqrt(n) + 1, 2)):
            return n
        n += 1


def factors_up_to_degree(f, maxdeg):
    """Monic integer factors of monic squarefree f with degree <= maxdeg.

    Exhaustive over subsets of mod-p factors with degree sum <= maxdeg;
    every returned polynomial exactly divides f over ZZ.
    """
    f = pnormalize(f)
    if f[-1] != 1:
        raise ValueError("input must be monic")
    p = _good_prime(f)
    facs = factor_mod_p(f, p)
    if min(pdeg(q) for q in facs) > maxdeg:
        return []
    bound = 2 ** (maxdeg + 1) * _norm2_bound(f)
    modulus, lifted = hensel_lift_factors(f, facs, p, 2 * bound)
    found = []
    n = len(lifted)
    for mask in range(1, 1 << n):
        degsum = sum(pdeg(lifted[i]) for i in range(n) if mask & (1 << i))
        if degsum > maxdeg or degsum == 0:
            continue
        cand = [1]
        for i in range(n):
            if mask & (1 << i):
                cand = mp_mul(cand, lifted[i], modulus)
        cand = pnormalize([_symmetric(c, modulus) for c in cand])
        if pdivides_z(f, cand):
            found.append(cand)
    return found


def rational_roots(p):
    """All rational roots of an integer polynomial with nonzero discriminant."""
    p = pprimitive(p)
    roots = []
    # strip x^k
    k = 0
    while p and p[0] == 0:
        p = p[1:]
        k += 1
    if k:
        roots.append(Fraction(0))
    if pdeg(p) < 1:
        return roots
    if pdeg(p) == 1:
        roots.append(Fraction(-p[0], p[1]))
        return roots
    lead = p[-1]
    m = monicize(p)
    if not is_squarefree_z(m):
        raise ValueError("polynomial must be squarefree")
    for lin in factors_up_to_degree(m, 1):
        # lin = x + c -> integer root -c of m -> root -c/lead of p
        roots.append(Fraction(-lin[0], lead))
    roots.sort()
    return roots


def cubic_is_irreducible(p):
    """An integer cubic with no rational root is irreducible."""
    p = pprimitive(p)
    if pdeg(p) != 3:
        raise ValueError("expected degree 3")
    if not is_squarefree_z(p):
        return False  # a repeated factor of a cubic forces a rational root
    return not rational_roots(p)


def cubic_field_isomorphic(f, g):
    """Isomorphism of the fields QQ[t]/(f) and QQ[t]/(g), f, g integer cubics."""
    f = pprimitive(f)
    g = pprimitive(g)
    for p in (f, g):
        if pdeg(p) != 3 or not cubic_is_irreducible(p):
            raise ValueError("inputs must be irreducible integer cubics")
    if f == g:
        return True
    s = 0
    while True:
        s += 1
        n = shifted_resultant(f, g, s)
        if pdeg(n) == 9 and is_squarefree_z(n):
            break
        if s > 50:
            raise AssertionError("no squarefree shift found")
    if rational_roots(n):
        return True
    return bool(factors_up_to_degree(monicize(pprimitive(n)), 3))


# -- integer square classes ---------------------------------------------------


def is_square_int(n):
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def is_square_fraction(q):
    q = Fraction(q)
    return is_square_int(q.numerator) and is_square_int(q.denominator)


def _miller_rabin(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n):
    if n % 2 == 0:
        return 2
    rng = random.Random(0xC0FFEE ^ n)
    while True:
        c = rng.randrange(1, n)
        x = y = rng.randrange(2, n)
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d


def factorize_int(n):
    """Prime factorization of |n| as a dict prime -> exponent."""
    n = abs(n)
    out = {}
    if n <= 1:
        return out
    small = 2
    while small * small <= n and small < 100000:
        while n % small == 0:
            out[small] = out.get(small, 0) + 1
            n //= small
        small += 1 if small == 2 else 2
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _miller_rabin(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return out


def squarefree_part(q):
    """Squarefree integer representing the square class of a nonzero rational."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("square class of zero is undefined")
    n = q.numerator * q.denominator
    sign = -1 if n < 0 else 1
    out = sign
    for p, e in factorize_int(n).items():
        if e % 2:
            out *= p
    return out


def same_square_class(a, b):
    """Exact square-class comparison without factoring."""
    return is_square_fraction(Fraction(a) * Fraction(b))
