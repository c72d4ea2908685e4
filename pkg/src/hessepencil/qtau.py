"""Exact arithmetic in Q(tau), tau a primitive cube root of unity.

Elements are stored as a + b*tau with rational a, b.  All products reduce
with tau^2 = -1 - tau, so every value has a unique (a, b) representation
and equality is exact.
"""

from __future__ import annotations

import numbers as _numbers
from fractions import Fraction

try:  # gmpy2 rationals are drop-in here and far faster on large workloads
    from gmpy2 import mpq as _RATIONAL
except ImportError:  # pragma: no cover - gmpy2 is a hard speedup, soft dependency
    _RATIONAL = Fraction


def _to_rational(v):
    if isinstance(v, int):
        return _RATIONAL(v)
    # route other rational types through their integer parts so exotic
    # numerator representations cannot confuse the backend constructor
    return _RATIONAL(int(v.numerator), int(v.denominator))


class QTau:
    """An element a + b*tau of Q(tau)."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", a if type(a) is _RATIONAL else _to_rational(a))
        object.__setattr__(self, "b", b if type(b) is _RATIONAL else _to_rational(b))

    def __setattr__(self, name, value):
        raise AttributeError("QTau is immutable")

    # -- basic predicates ---------------------------------------------------

    def is_zero(self):
        return not self.a and not self.b

    def is_rational(self):
        return not self.b

    def is_integral(self):
        """True when both coordinates are integers (element of Z(tau))."""
        return self.a.denominator == 1 and self.b.denominator == 1

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QTau(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QTau(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return QTau(-self.a, -self.b)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # (a + b t)(c + d t) = ac + (ad + bc) t + bd t^2,  t^2 = -1 - t
        a, b, c, d = self.a, self.b, other.a, other.b
        bd = b * d
        return QTau(a * c - bd, a * d + b * c - bd)

    __rmul__ = __mul__

    def conjugate(self):
        """Image under tau -> tau^2 (complex conjugation on Q(tau))."""
        return QTau(self.a - self.b, -self.b)

    def norm(self):
        """Field norm a^2 - a*b + b^2, a nonnegative rational."""
        return self.a * self.a - self.a * self.b + self.b * self.b

    def inverse(self):
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero in Q(tau)")
        c = self.conjugate()
        return QTau(c.a / n, c.b / n)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison / hashing -----------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __bool__(self):
        return not self.is_zero()

    # -- rendering ------------------------------------------------------------

    def __repr__(self):
        return f"QTau({self.a!r}, {self.b!r})"

    def __str__(self):
        return self.render("t")

    def render(self, symbol="t"):
        """Human-readable form, e.g. '2-3t', with tau written as `symbol`."""
        if self.is_zero():
            return "0"
        parts = []
        if self.a:
            parts.append(str(self.a))
        if self.b:
            if self.b == 1:
                s = symbol
            elif self.b == -1:
                s = "-" + symbol
            else:
                s = f"{self.b}{symbol}"
            if parts and not s.startswith("-"):
                parts.append("+" + s)
            else:
                parts.append(s)
        return "".join(parts)


def _coerce(value):
    if isinstance(value, QTau):
        return value
    if isinstance(value, (int, Fraction)) or type(value) is _RATIONAL:
        return QTau(value, 0)
    if isinstance(value, _numbers.Rational):
        return QTau(value, 0)
    return NotImplemented


ZERO = QTau(0, 0)
ONE = QTau(1, 0)
TAU = QTau(0, 1)
TAU2 = QTau(-1, -1)  # tau^2 = -1 - tau

#: The six units of Z(tau).
UNITS = (ONE, TAU, TAU2, -ONE, -TAU, -TAU2)


def _canonical_key(v):
    # prefer the positive half-plane (a > 0, or a = 0 and b > 0), then the
    # multiple closest to the rational axis; unit orbits canonicalize to 1
    positive = v.a > 0 or (v.a == 0 and v.b > 0)
    return (not positive, abs(v.b), v.a)


def canonical_unit_multiple(w):
    """The representative of w's orbit under the six units of Z(tau).

    The choice is deterministic and idempotent; it always has a > 0, or
    a = 0 and b > 0, and the orbit of any unit canonicalizes to 1.
    """
    if w.is_zero():
        return w
    return min((w * u for u in UNITS), key=_canonical_key)


def unit_to_canonical(w):
    """The unit u with w * u == canonical_unit_multiple(w)."""
    if w.is_zero():
        return ONE
    return min(UNITS, key=lambda u: _canonical_key(w * u))


def integer_cube_root(n):
    """Exact integer cube root of n >= 0, or None."""
    n = int(n)
    if n < 0:
        return None
    r = round(n ** (1 / 3)) if n < 2**51 else int(n ** (1 / 3))
    while r**3 > n:
        r -= 1
    while (r + 1) ** 3 <= n:
        r += 1
    return r if r**3 == n else None


def cube_root_scalar(c):
    """Exact cube root of c in Q(tau), or None if no cube root exists.

    Reduces to an Eisenstein-integer cube root: candidates s = p + q*tau
    satisfy N(s)^3 = N(c), and p^2 - p*q + q^2 = N(s) bounds the search.
    """
    if c.is_zero():
        return ZERO
    den = c.a.denominator * c.b.denominator // _gcd(c.a.denominator, c.b.denominator)
    w = c * (den * den * den)  # now in Z(tau) when den clears c; rescale below
    if not w.is_integral():
        return None
    nw = w.norm()
    assert nw.denominator == 1
    nu = integer_cube_root(nw.numerator)
    if nu is None:
        return None
    # p^2 - pq + q^2 = nu implies |p|, |q| <= 2*sqrt(nu/3)
    bound = int((4 * nu / 3) ** 0.5) + 1
    for p in range(-bound, bound + 1):
        disc = 4 * nu - 3 * p * p
        if disc < 0:
            continue
        r = _isqrt(disc)
        if r * r != disc or (p + r) % 2:
            continue
        for q in ((p + r) // 2, (p - r) // 2):
            s = QTau(p, q)
            if s * s * s == w:
                return s / den
    return None


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _isqrt(n):
    import math

    return math.isqrt(n)
