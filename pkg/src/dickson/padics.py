"""Bounded-precision p-adic numbers (odd p) and their quadratic extensions.

A number is (valuation, unit) with the unit kept to `prec` significant
p-adic digits, 32 by default.  Multiplication is exact on that window;
addition renormalizes and full cancellation collapses to exact zero.
Squareness questions only ever need the valuation parity plus one residue
digit, so the default window is generous.

Quadratic extensions come in the three square classes of conductors:
    sqrt_p   ramified,   alpha^2 = p
    sqrt_u   unramified, alpha^2 = u   (u the smallest positive non-residue)
    sqrt_up  ramified,   alpha^2 = u*p
The uniformizer is alpha for the ramified kinds and p otherwise, and the
residue field is GF(p) or GF(p^2) accordingly; squareness of units is read
off in the residue field and square roots are Hensel-lifted from it.

p = 2 is rejected outright; none of the analyses here need it and the
square theory is different there.
"""

from fractions import Fraction

from .fields import FiniteField, is_prime
from .reports import DIVISION, UNKNOWN, DivisionVerdict


class PrecisionError(ArithmeticError):
    """A verdict would need p-adic digits beyond the working precision."""


def _mod_sqrt(a, p):
    """A square root of a mod an odd prime p (Tonelli-Shanks), or None."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


class PadicContext:
    """Q_p at a fixed working precision of N significant digits."""

    def __init__(self, p, precision=32):
        if not is_prime(p):
            raise ValueError("%d is not prime" % p)
        if p == 2:
            raise ValueError("p = 2 is not supported")
        if precision < 4:
            raise ValueError("precision must be at least 4 digits")
        self.p = p
        self.N = precision
        self._u = None

    def zero(self):
        return PadicNumber(self, 0, 0, self.N)

    def one(self):
        return self.from_int(1)

    def from_int(self, a):
        return self.from_fraction(Fraction(a))

    def from_fraction(self, r):
        r = Fraction(r)
        if r == 0:
            return self.zero()
        p = self.p
        v = 0
        num, den = r.numerator, r.denominator
        while num % p == 0:
            num //= p
            v += 1
        while den % p == 0:
            den //= p
            v -= 1
        unit = num * pow(den, -1, p ** self.N) % p ** self.N
        return PadicNumber(self, v, unit, self.N)

    def nonresidue(self):
        """The smallest positive quadratic non-residue mod p."""
        if self._u is None:
            u = 2
            while pow(u, (self.p - 1) // 2, self.p) == 1:
                u += 1
            self._u = u
        return self._u

    def __eq__(self, other):
        return (isinstance(other, PadicContext) and other.p == self.p
                and other.N == self.N)

    def __hash__(self):
        return hash(("Qp", self.p, self.N))

    def __repr__(self):
        return "Q_%d (prec %d)" % (self.p, self.N)


class PadicNumber:
    __slots__ = ("ctx", "val", "unit", "prec")

    def __init__(self, ctx, val, unit, prec):
        self.ctx = ctx
        if unit == 0:
            self.val, self.unit, self.prec = 0, 0, ctx.N
            return
        if prec < 1:
            raise PrecisionError("no significant digits left")
        unit %= ctx.p ** prec
        if unit % ctx.p == 0:
            raise ValueError("unit part divisible by p")
        self.val, self.unit, self.prec = val, unit, prec

    def is_zero(self):
        return self.unit == 0

    def _coerce(self, other):
        if isinstance(other, PadicNumber):
            if other.ctx != self.ctx:
                raise ValueError("numbers from different contexts")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.from_fraction(Fraction(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        p = self.ctx.p
        v = min(self.val, other.val)
        # absolute precision of the sum
        absp = min(self.val + self.prec, other.val + other.prec)
        window = absp - v
        if window < 1:
            raise PrecisionError("operands do not overlap in precision")
        mod = p ** window
        raw = (self.unit * p ** (self.val - v)
               + other.unit * p ** (other.val - v)) % mod
        if raw == 0:
            return self.ctx.zero()
        s = 0
        while raw % p == 0:
            raw //= p
            s += 1
        return PadicNumber(self.ctx, v + s, raw, window - s)

    __radd__ = __add__

    def __neg__(self):
        if self.is_zero():
            return self
        return PadicNumber(self.ctx, self.val,
                           -self.unit % self.ctx.p ** self.prec, self.prec)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return self.ctx.zero()
        prec = min(self.prec, other.prec)
        return PadicNumber(self.ctx, self.val + other.val,
                           self.unit * other.unit % self.ctx.p ** prec, prec)

    __rmul__ = __mul__

    def inv(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of p-adic zero")
        return PadicNumber(self.ctx, -self.val,
                           pow(self.unit, -1, self.ctx.p ** self.prec), self.prec)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.from_fraction(Fraction(other))
        if not isinstance(other, PadicNumber) or other.ctx != self.ctx:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        if self.val != other.val:
            return False
        prec = min(self.prec, other.prec)
        return (self.unit - other.unit) % self.ctx.p ** prec == 0

    def __hash__(self):
        if self.is_zero():
            return hash(("padic", self.ctx.p, 0))
        return hash(("padic", self.ctx.p, self.val, self.unit % self.ctx.p))

    def __repr__(self):
        if self.is_zero():
            return "0 (p=%d)" % self.ctx.p
        return "%d^%d * %d (mod p^%d)" % (self.ctx.p, self.val,
                                          self.unit % self.ctx.p ** min(self.prec, 6),
                                          min(self.prec, 6))

    def literal(self):
        if self.is_zero():
            return "0"
        return "%d:%d" % (self.val, self.unit)

    def residue(self):
        """First digit of the unit part, in range(p)."""
        if self.is_zero():
            raise ValueError("zero has no unit residue")
        return self.unit % self.ctx.p


def padic_is_square(z):
    """Is z a square?  Accepts a PadicNumber or a quadratic-extension
    element; needs the valuation parity and one residue digit."""
    if isinstance(z, PadicExtElement):
        return ext_is_square(z)
    if not isinstance(z, PadicNumber):
        raise TypeError("expected a PadicNumber")
    if z.is_zero():
        raise ValueError("squareness of zero is not asked here")
    if z.prec < 1:
        raise PrecisionError("not enough digits to test squareness")
    if z.val % 2:
        return False
    return pow(z.residue(), (z.ctx.p - 1) // 2, z.ctx.p) == 1


def square_class(z):
    """The class of z modulo squares: one of "1", "u", "pi", "upi".
    Accepts a PadicNumber or a quadratic-extension element."""
    if isinstance(z, PadicExtElement):
        return ext_square_class(z)
    if z.is_zero():
        raise ValueError("zero has no square class")
    odd = z.val % 2 == 1
    unit_sq = pow(z.residue(), (z.ctx.p - 1) // 2, z.ctx.p) == 1
    return {(False, True): "1", (False, False): "u",
            (True, True): "pi", (True, False): "upi"}[(odd, unit_sq)]


def padic_sqrt(z):
    """The canonical square root in Q_p (smaller unit residue), or None."""
    if z.is_zero():
        return z.ctx.zero()
    if not padic_is_square(z):
        return None
    p, prec = z.ctx.p, z.prec
    x = _mod_sqrt(z.unit, p)
    k = 1
    while k < prec:
        k = min(2 * k, prec)
        mod = p ** k
        x = (x + z.unit * pow(x, -1, mod)) * pow(2, -1, mod) % mod
    x %= p ** prec
    x = min(x, (-x) % p ** prec)
    root = PadicNumber(z.ctx, z.val // 2, x, prec)
    assert root * root == z
    return root


class PadicQuadExt:
    """A quadratic extension Q_p(alpha) with alpha^2 in {p, u, u*p}."""

    KINDS = ("sqrt_p", "sqrt_u", "sqrt_up")

    def __init__(self, ctx, kind):
        if kind not in self.KINDS:
            raise ValueError("kind must be one of %s" % (self.KINDS,))
        self.ctx = ctx
        self.kind = kind
        u = ctx.nonresidue()
        d = {"sqrt_p": ctx.p, "sqrt_u": u, "sqrt_up": u * ctx.p}[kind]
        self.d_int = d
        self.d = ctx.from_int(d)
        self.ramified = kind != "sqrt_u"
        self._residue_field = None

    def element(self, x, y):
        def lift(v):
            return v if isinstance(v, PadicNumber) else self.ctx.from_fraction(Fraction(v))
        return PadicExtElement(self, lift(x), lift(y))

    def zero(self):
        return self.element(0, 0)

    def one(self):
        return self.element(1, 0)

    def root(self):
        """alpha itself."""
        return self.element(0, 1)

    def residue_field(self):
        """GF(p) for ramified kinds, GF(p^2) presented as GF(p)[X]/(X^2 - u)
        for the unramified one."""
        if self._residue_field is None:
            if self.ramified:
                self._residue_field = FiniteField(self.ctx.p, 1)
            else:
                u = self.ctx.nonresidue()
                self._residue_field = FiniteField(self.ctx.p, 2,
                                                  [-u % self.ctx.p, 0, 1])
        return self._residue_field

    def pi_power(self, j):
        """The uniformizer to the j-th power, as an extension element."""
        if not self.ramified:
            return self.element(Fraction(self.ctx.p) ** j, 0)
        # alpha^j = d^(j//2) * alpha^(j mod 2), floor division
        q, r = divmod(j, 2)
        scalar = Fraction(self.d_int) ** q
        if r == 0:
            return self.element(scalar, 0)
        return self.element(0, scalar)

    def nonsquare_unit(self):
        """A canonical non-square unit of the extension."""
        if self.ramified:
            return self.element(self.ctx.nonresidue(), 0)
        R = self.residue_field()
        for e in R.elements():
            if not e.is_zero() and not R.is_square(e):
                return self.element(e.coeffs[0], e.coeffs[1])
        raise AssertionError("no non-square in the residue field")

    def random_element(self, rng):
        while True:
            x = rng.randrange(-99, 100)
            y = rng.randrange(-99, 100)
            if x or y:
                break
        shift = rng.choice([0, 0, 1, -1])
        z = self.element(Fraction(x), Fraction(y))
        if shift:
            z = z * self.element(Fraction(self.ctx.p) ** shift, 0)
        return z

    def __eq__(self, other):
        return (isinstance(other, PadicQuadExt) and other.ctx == self.ctx
                and other.kind == self.kind)

    def __hash__(self):
        return hash(("QpExt", self.ctx.p, self.ctx.N, self.kind))

    def __repr__(self):
        return "Q_%d(%s)" % (self.ctx.p, self.kind)


class PadicExtElement:
    """x + y*alpha over a PadicQuadExt."""

    __slots__ = ("ext", "x", "y")

    def __init__(self, ext, x, y):
        self.ext = ext
        self.x = x
        self.y = y

    def _coerce(self, other):
        if isinstance(other, PadicExtElement):
            if other.ext != self.ext:
                raise ValueError("elements of different extensions")
            return other
        if isinstance(other, (int, Fraction, PadicNumber)):
            return self.ext.element(other, 0)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.ext.element(self.x + other.x, self.y + other.y)

    __radd__ = __add__

    def __neg__(self):
        return self.ext.element(-self.x, -self.y)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self.ext.d
        return self.ext.element(self.x * other.x + d * self.y * other.y,
                                self.x * other.y + self.y * other.x)

    __rmul__ = __mul__

    def conjugate(self):
        return self.ext.element(self.x, -self.y)

    def norm(self):
        """N(x + y alpha) = x^2 - (alpha^2) y^2, in Q_p."""
        return self.x * self.x - self.ext.d * self.y * self.y

    def inv(self):
        n = self.norm()
        if n.is_zero():
            raise ZeroDivisionError("inverse of zero")
        ni = n.inv()
        return self.ext.element(self.x * ni, -(self.y * ni))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def is_zero(self):
        return self.x.is_zero() and self.y.is_zero()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __repr__(self):
        return "(%r) + (%r)*alpha" % (self.x, self.y)

    def literal(self):
        return "%s,%s" % (self.x.literal(), self.y.literal())

    def val_pi(self):
        """Valuation with respect to the uniformizer."""
        if self.is_zero():
            raise ValueError("valuation of zero")
        parts = []
        if not self.x.is_zero():
            parts.append(2 * self.x.val if self.ext.ramified else self.x.val)
        if not self.y.is_zero():
            parts.append(2 * self.y.val + 1 if self.ext.ramified else self.y.val)
        return min(parts)

    def unit_part(self):
        return self * self.ext.pi_power(-self.val_pi())

    def residue(self):
        """Image of a unit in the residue field."""
        R = self.ext.residue_field()
        if self.val_pi() != 0:
            raise ValueError("residue of a non-unit")
        if self.ext.ramified:
            # pi-valuation 0 forces the scalar part to be a p-unit
            return R.element([self.x.residue()])
        cx = 0 if self.x.is_zero() or self.x.val > 0 else self.x.residue()
        cy = 0 if self.y.is_zero() or self.y.val > 0 else self.y.residue()
        return R.element([cx, cy])


def ext_is_square(z):
    """Squareness in the quadratic extension: even pi-valuation plus a
    square residue (Hensel lifting provides the converse for odd p)."""
    if z.is_zero():
        raise ValueError("squareness of zero is not asked here")
    if z.val_pi() % 2:
        return False
    R = z.ext.residue_field()
    return R.is_square(z.unit_part().residue())


def ext_square_class(z):
    """Class of z modulo squares of the extension: "1", "u", "pi", "upi"."""
    if z.is_zero():
        raise ValueError("zero has no square class")
    odd = z.val_pi() % 2 == 1
    R = z.ext.residue_field()
    unit_sq = R.is_square(z.unit_part().residue())
    return {(False, True): "1", (False, False): "u",
            (True, True): "pi", (True, False): "upi"}[(odd, unit_sq)]


def ext_sqrt(z):
    """A square root of z in the extension via Hensel lifting, or None."""
    if z.is_zero():
        return z.ext.zero()
    if not ext_is_square(z):
        return None
    ext = z.ext
    v = z.val_pi()
    w = z.unit_part()
    R = ext.residue_field()
    r0 = R.sqrt(w.residue())
    s = ext.element(r0.coeffs[0], 0) if ext.ramified else ext.element(r0.coeffs[0], r0.coeffs[1])
    half = ext.element(Fraction(1, 2), 0)
    for _ in range(ext.ctx.N.bit_length() + 2):
        s = (s + w / s) * half
    assert s * s == w
    root = s * ext.pi_power(v // 2)
    assert root * root == z
    return root


def padic_example_division_check(p, ext, y):
    """For p = 1 mod 4, the doubling of Q_p(alpha) by c = y*alpha is a
    division algebra: N(c) = -y^2 alpha^2 has odd interaction with the
    non-square alpha^2 while -1 and y^2 are squares.  This computes the
    norm and applies the norm criterion rather than trusting the argument.
    """
    if not isinstance(ext, PadicQuadExt) or ext.ctx.p != p:
        raise ValueError("the extension is not over Q_%d" % p)
    if ext.ctx.p % 4 != 1:
        raise ValueError("this check is stated for p = 1 mod 4")
    if not isinstance(y, PadicNumber):
        y = ext.ctx.from_fraction(Fraction(y))
    if y.is_zero():
        raise ValueError("y must be nonzero")
    c = ext.element(ext.ctx.zero(), y)
    n = c.norm()
    if not padic_is_square(n):
        return DivisionVerdict(
            DIVISION, method="norm-criterion",
            notes="N(y*alpha) has square class %s in Q_%d"
                  % (square_class(n), ext.ctx.p))
    return DivisionVerdict(UNKNOWN, method="norm-criterion",
                           notes="norm criterion did not apply")


class PadicOps:
    """linalg scalar ops over PadicNumbers of one context."""

    def __init__(self, ctx):
        self.ctx = ctx
        self.zero = ctx.zero()
        self.one = ctx.one()

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return a.inv()

    def is_zero(self, a):
        return a.is_zero()

    def eq(self, a, b):
        return a == b

    def prefer_pivot(self, a, b):
        return a.val < b.val
