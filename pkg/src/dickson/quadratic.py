"""Exact rational arithmetic, quadratic fields Q(sqrt(a)), and the local
norm machinery (Legendre and Hilbert symbols) needed to decide whether a
rational is a norm from a quadratic field.

Rationals are stdlib fractions.Fraction throughout: arbitrary precision,
positive denominator, always reduced, which is exactly the contract this
package needs.  Radicands are normalized to squarefree integers, so
Q(sqrt(8/9)) and Q(sqrt(2)) construct the same field.

The division decision for a doubled quadratic field lives here as
cyclic_division_decision_quad: the doubling of K = Q(sqrt(a)) by c fails to be
division exactly when N(c) = s^2 for a rational s such that s or -s is a
norm from K.  Norm membership is decided by Hilbert symbols over the
finite set of places where either argument is a non-unit.
"""

from fractions import Fraction
from math import isqrt

from .reports import DIVISION, NOT_DIVISION, DivisionVerdict


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError("expected a rational, got %r" % (x,))


def rational_is_square(r):
    """True iff r >= 0 and numerator and denominator are perfect squares."""
    r = _as_fraction(r)
    if r < 0:
        return False
    n, d = r.numerator, r.denominator
    return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d


def rational_sqrt(r):
    """Exact nonnegative square root, or None when r is not a square."""
    r = _as_fraction(r)
    if not rational_is_square(r):
        return None
    return Fraction(isqrt(r.numerator), isqrt(r.denominator))


def prime_factors(n):
    """Sorted prime factors of a nonzero integer, by trial division."""
    n = abs(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def squarefree_part(n):
    """The squarefree integer with the same square class as n."""
    if n == 0:
        return 0
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = sign
    for p in prime_factors(n):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e % 2:
            out *= p
    return out


def valuation(r, p):
    """p-adic valuation of a nonzero rational."""
    r = _as_fraction(r)
    if r == 0:
        raise ZeroDivisionError("valuation of zero")
    v = 0
    n = r.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = r.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return v


def legendre(a, p):
    """Legendre symbol of a rational p-unit modulo an odd prime."""
    a = _as_fraction(a)
    m = (a.numerator * a.denominator) % p
    if m == 0:
        raise ValueError("not a p-unit")
    s = pow(m, (p - 1) // 2, p)
    return 1 if s == 1 else -1


def hilbert_symbol(s, a, place):
    """Hilbert symbol (s, a)_place for place an odd prime, 2, or "inf".

    (s, a)_p = 1 exactly when s x^2 + a y^2 = z^2 has a nontrivial
    solution over Q_p; equivalently s is a local norm from Q_p(sqrt(a)).
    """
    s = _as_fraction(s)
    a = _as_fraction(a)
    if s == 0 or a == 0:
        raise ValueError("Hilbert symbol needs nonzero arguments")
    if place == "inf":
        return -1 if (s < 0 and a < 0) else 1
    p = place
    if p == 2:
        alpha = valuation(s, 2)
        beta = valuation(a, 2)
        u = s / Fraction(2) ** alpha
        v = a / Fraction(2) ** beta
        # For odd rationals, num * den is congruent to the value mod 8.
        um = (u.numerator * u.denominator) % 8
        vm = (v.numerator * v.denominator) % 8
        eps_u = (um - 1) // 2 % 2
        eps_v = (vm - 1) // 2 % 2
        omega_u = (um * um - 1) // 8 % 2
        omega_v = (vm * vm - 1) // 8 % 2
        e = eps_u * eps_v + alpha * omega_v + beta * omega_u
        return -1 if e % 2 else 1
    alpha = valuation(s, p)
    beta = valuation(a, p)
    u = s / Fraction(p) ** alpha
    v = a / Fraction(p) ** beta
    sign = 1
    if (alpha * beta * (p - 1) // 2) % 2:
        sign = -sign
    if beta % 2 and legendre(u, p) == -1:
        sign = -sign
    if alpha % 2 and legendre(v, p) == -1:
        sign = -sign
    return sign


class QuadField:
    """Q(sqrt(a)) for a squarefree integer a not 0 or 1.

    Any nonzero rational radicand is accepted and normalized: the stored
    radicand is its squarefree part, and .scale is the rational lambda
    with input = lambda^2 * radicand (useful for re-expressing literals).
    """

    def __init__(self, a):
        a = _as_fraction(a)
        if a == 0:
            raise ValueError("radicand must be nonzero")
        d = squarefree_part(a.numerator * a.denominator)
        if d == 1:
            raise ValueError("radicand %s is a square; not a quadratic field" % a)
        self.a = d
        self.scale = rational_sqrt(a / d)

    def element(self, x, y):
        return QuadElement(self, _as_fraction(x), _as_fraction(y))

    def zero(self):
        return self.element(0, 0)

    def one(self):
        return self.element(1, 0)

    def root(self):
        return self.element(0, 1)

    def __eq__(self, other):
        return isinstance(other, QuadField) and other.a == self.a

    def __hash__(self):
        return hash(("QuadField", self.a))

    def __repr__(self):
        return "Q(sqrt(%d))" % self.a


class QuadElement:
    """x + y sqrt(a) with rational x, y."""

    __slots__ = ("field", "x", "y")

    def __init__(self, field, x, y):
        self.field = field
        self.x = _as_fraction(x)
        self.y = _as_fraction(y)

    def _coerce(self, other):
        if isinstance(other, QuadElement):
            if other.field != self.field:
                raise ValueError("elements of different quadratic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.element(other, 0)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.field.element(self.x + other.x, self.y + other.y)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.field.element(self.x - other.x, self.y - other.y)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return self.field.element(-self.x, -self.y)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a = self.field.a
        return self.field.element(self.x * other.x + a * self.y * other.y,
                                  self.x * other.y + self.y * other.x)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def conjugate(self):
        return self.field.element(self.x, -self.y)

    def norm(self):
        """N(x + y sqrt(a)) = x^2 - a y^2, a rational."""
        return self.x * self.x - self.field.a * self.y * self.y

    def inv(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in %r" % self.field)
        return self.field.element(self.x / n, -self.y / n)

    def is_zero(self):
        return self.x == 0 and self.y == 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.element(other, 0)
        return (isinstance(other, QuadElement) and other.field == self.field
                and other.x == self.x and other.y == self.y)

    def __hash__(self):
        return hash((self.field.a, self.x, self.y))

    def __repr__(self):
        return "(%s + %s*sqrt(%d))" % (self.x, self.y, self.field.a)

    def literal(self):
        return "%s,%s" % (self.x, self.y)


def quad_is_square(z):
    """Exact squareness of z in its quadratic field, with a witness root.

    Returns (True, w) with w*w = z, or (False, None).  For z = x + y sqrt(a)
    with y != 0: z is a square iff N(z) = d^2 for rational d >= 0 and
    (x + d)/2 or (x - d)/2 is a nonzero rational square (then s from that
    square root and t = y/(2s) give w = s + t sqrt(a)).  For rational z:
    square iff x or x/a is a rational square.
    """
    K = z.field
    if z.is_zero():
        return True, K.zero()
    if z.y == 0:
        r = rational_sqrt(z.x)
        if r is not None:
            return True, K.element(r, 0)
        r = rational_sqrt(z.x / K.a)
        if r is not None:
            return True, K.element(0, r)
        return False, None
    d = rational_sqrt(z.norm())
    if d is None:
        return False, None
    for sgn in (1, -1):
        cand = (z.x + sgn * d) / 2
        if cand != 0:
            s = rational_sqrt(cand)
            if s is not None and s != 0:
                w = K.element(s, z.y / (2 * s))
                assert w * w == z
                return True, w
    return False, None


def norm_support(s, a):
    """The finite places where (s, a)_p could be -1: 2 and the odd primes
    dividing a numerator or denominator of either argument."""
    s = _as_fraction(s)
    a = _as_fraction(a)
    ps = {2}
    for r in (s, a):
        ps.update(prime_factors(r.numerator))
        ps.update(prime_factors(r.denominator))
    return sorted(ps)


def is_norm_from_quadfield(s, field):
    """Is the nonzero rational s a norm x^2 - a y^2 from Q(sqrt(a))?

    Local-global: s is a global norm iff (s, a)_v = 1 at every place, and
    the symbol is automatically 1 at odd primes where both arguments are
    units, so only the support set plus the real place need checking.
    """
    s = _as_fraction(s)
    if s == 0:
        raise ValueError("norm membership of zero is not asked here")
    a = Fraction(field.a)
    if hilbert_symbol(s, a, "inf") != 1:
        return False
    for p in norm_support(s, a):
        if hilbert_symbol(s, a, p) != 1:
            return False
    return True


def find_norm_preimage(field, s, bound=60):
    """Small search for t in Q(sqrt(a)) with N(t) = s, clearing denominators
    and scanning X^2 - a Y^2 = s Z^2 up to the bound.  Returns None when the
    search space is exhausted; existence should be decided separately."""
    s = _as_fraction(s)
    a = field.a
    for z in range(1, bound + 1):
        target = s * z * z
        for y in range(0, bound + 1):
            x2 = target + a * y * y
            r = rational_sqrt(x2)
            if r is not None:
                t = field.element(Fraction(r, z), Fraction(y, z))
                if t.norm() == s:
                    return t
    return None


def cyclic_division_decision_quad(c, variant="commutative"):
    """Decide whether doubling Q(sqrt(a)) by c gives a division algebra.

    Division holds iff there is no rational s with N(c) = s^2 and s or -s
    a norm from the field.  When the answer is negative the verdict tries
    to carry an explicit zero-divisor pair: immediately when c is a square
    in the field (pair (r,1), (-r,1) for r = sqrt(c)), else through a
    bounded search for a norm preimage feeding the critical identity
    c = r^2 * w * N(t)^-1 with w = c/nu of norm 1.
    """
    K = c.field
    if c.is_zero():
        raise ValueError("c must be nonzero")
    n = c.norm()
    s = rational_sqrt(n)
    if s is None:
        return DivisionVerdict(
            DIVISION, method="norm-criterion",
            notes="N(c) = %s is not a rational square" % n)
    hits = [sgn * s for sgn in (1, -1)
            if s != 0 and is_norm_from_quadfield(sgn * s, K)]
    if not hits:
        return DivisionVerdict(
            DIVISION, method="norm-criterion",
            notes="neither square root of N(c) = %s is a norm from %r" % (n, K))
    witness = witness_literal = None
    ok, r = quad_is_square(c)
    if ok:
        pair = ((r, K.one()), (-r, K.one()))
    else:
        pair = None
        nu = hits[0]
        t = find_norm_preimage(K, nu)
        if t is not None:
            w = c * K.element(Fraction(1, 1) / nu, 0)
            if w == K.element(-1, 0):
                y_el = K.root()
            else:
                y_el = K.one() + w
            r_el = K.element(nu, 0)
            # critical triple (r, y, t): c = r^2 * (y/conj(y)) * N(t)^-1
            pair = ((r_el, t), (-(r_el * y_el) * t.inv(), y_el))
    if pair is not None:
        (u1, v1), (u2, v2) = pair
        first = u1 * u2 + c * (v1 * v2).conjugate()
        second = u1 * v2 + v1 * u2
        assert first.is_zero() and second.is_zero()
        witness, witness_literal = pair, _render_pair(pair)
    return DivisionVerdict(
        NOT_DIVISION, method="norm-criterion",
        witness=witness, witness_literal=witness_literal,
        notes="N(c) = %s^2 and %s is a norm" % (s, hits[0]))


def _render_pair(pair):
    return [[u.literal(), v.literal()] for (u, v) in pair]
