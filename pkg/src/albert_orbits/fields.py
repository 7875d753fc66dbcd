"""Exact base fields: arbitrary-precision rationals and prime fields F_p.

Field elements are stored raw (`fractions.Fraction` for the rationals,
`int` in [0, p) for F_p); a field object carries the operations.  The
characteristic is never 2 or 3: the cubic Jordan algebra constructions
divide by 2, 3 and 6 throughout.
"""

from fractions import Fraction


class FieldError(ValueError):
    """Scalar does not belong to the field, or fields of operands differ."""


class Rationals:
    """The field of rational numbers; values are `Fraction` (lowest terms)."""

    char = 0
    name = "q"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def of_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b

    def is_zero(self, a):
        return a == 0

    def eq(self, a, b):
        return a == b

    def to_str(self, a):
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def from_str(self, s):
        return Fraction(s.strip())

    def rand(self, rng, span=4):
        """Small random integer value; exactness tests never need big inputs."""
        return Fraction(rng.randint(-span, span))

    def rand_nonzero(self, rng, span=4):
        while True:
            a = self.rand(rng, span)
            if a != 0:
                return a

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")


def _is_prime(n):
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
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


class PrimeField:
    """F_p for a prime p not in {2, 3}; values are ints in [0, p)."""

    def __init__(self, p):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        if p in (2, 3):
            raise FieldError("characteristic 2 and 3 are not supported")
        self.p = p
        self.char = p
        self.name = f"fp:{p}"

    def zero(self):
        return 0

    def one(self):
        return 1

    def of_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def is_zero(self, a):
        return a % self.p == 0

    def eq(self, a, b):
        return (a - b) % self.p == 0

    def to_str(self, a):
        return str(a % self.p)

    def from_str(self, s):
        v = Fraction(s.strip())
        if v.denominator == 1:
            return v.numerator % self.p
        return self.div(v.numerator % self.p, v.denominator % self.p)

    def rand(self, rng, span=None):
        return rng.randrange(self.p)

    def rand_nonzero(self, rng, span=None):
        return rng.randrange(1, self.p)

    def is_square(self, a):
        a %= self.p
        return a == 0 or pow(a, (self.p - 1) // 2, self.p) == 1

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = Rationals()

_gf_cache = {}


def GF(p):
    if p not in _gf_cache:
        _gf_cache[p] = PrimeField(p)
    return _gf_cache[p]


def field_from_name(name):
    """Parse a field descriptor: "q" or "fp:<p>"."""
    name = name.strip().lower()
    if name == "q":
        return QQ
    if name.startswith("fp:"):
        return GF(int(name[3:]))
    raise FieldError(f"unknown field descriptor {name!r}")


def same_field(fa, fb):
    if fa != fb:
        raise FieldError(f"field mismatch: {fa!r} vs {fb!r}")
    return fa
