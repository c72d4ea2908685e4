"""Sparse homogeneous polynomials in (x, y, z) over Q(tau), and projective 1-forms.

Terms are kept in a map from exponent triples (i, j, k), i + j + k = degree,
to nonzero QTau coefficients.  The monomial order everywhere (serialization,
leading terms, cube-root lifting) is graded lex with x > y > z; since all
polynomials are homogeneous this is plain lex on the exponent triple.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from functools import reduce

from .qtau import QTau, ZERO, ONE, cube_root_scalar, unit_to_canonical


class DegreeMismatchError(ValueError):
    """Operands have incompatible homogeneous degrees."""


def _coerce_scalar(c):
    if isinstance(c, QTau):
        return c
    if isinstance(c, (int, Fraction)):
        return QTau(c, 0)
    raise TypeError(f"cannot use {type(c).__name__} as a Q(tau) scalar")


class HomPoly:
    """A homogeneous polynomial; immutable once constructed."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree, terms):
        clean = {}
        for mono, coeff in terms.items():
            coeff = _coerce_scalar(coeff)
            if coeff.is_zero():
                continue
            if len(mono) != 3 or sum(mono) != degree or min(mono) < 0:
                raise ValueError(f"exponent triple {mono} invalid for degree {degree}")
            clean[mono] = coeff
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("HomPoly is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def _raw(cls, degree, terms):
        """Internal constructor for terms already known to be valid QTau
        entries of the right degree; only zero coefficients are filtered."""
        obj = cls.__new__(cls)
        object.__setattr__(obj, "degree", degree)
        object.__setattr__(
            obj, "terms", {m: c for m, c in terms.items() if c.a or c.b}
        )
        return obj

    @classmethod
    def zero(cls, degree=0):
        return cls(degree, {})

    @classmethod
    def monomial(cls, coeff, mono):
        return cls(sum(mono), {tuple(mono): coeff})

    @classmethod
    def variable(cls, name):
        idx = "xyz".index(name)
        mono = tuple(1 if i == idx else 0 for i in range(3))
        return cls(1, {mono: ONE})

    @classmethod
    def linear(cls, cx, cy, cz):
        """cx*x + cy*y + cz*z."""
        return cls(1, {(1, 0, 0): cx, (0, 1, 0): cy, (0, 0, 1): cz})

    # -- predicates and term access ------------------------------------------

    def is_zero(self):
        return not self.terms

    def leading_monomial(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms)

    def leading_coefficient(self):
        return self.terms[self.leading_monomial()]

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return [(m, self.terms[m]) for m in sorted(self.terms, reverse=True)]

    def __len__(self):
        return len(self.terms)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, HomPoly):
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.degree != other.degree:
            raise DegreeMismatchError(
                f"cannot add degrees {self.degree} and {other.degree}"
            )
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            acc = terms.get(mono)
            terms[mono] = coeff if acc is None else acc + coeff
        return HomPoly._raw(self.degree, terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return HomPoly._raw(self.degree, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QTau)):
            return self.scale(other)
        if not isinstance(other, HomPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return HomPoly.zero(self.degree + other.degree)
        acc = {}
        for (i1, j1, k1), c1 in self.terms.items():
            for (i2, j2, k2), c2 in other.terms.items():
                mono = (i1 + i2, j1 + j2, k1 + k2)
                prod = c1 * c2
                old = acc.get(mono)
                acc[mono] = prod if old is None else old + prod
        return HomPoly._raw(self.degree + other.degree, acc)

    __rmul__ = __mul__

    def scale(self, c):
        c = _coerce_scalar(c)
        if c.is_zero():
            return HomPoly.zero(self.degree)
        return HomPoly._raw(self.degree, {m: v * c for m, v in self.terms.items()})

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = HomPoly.monomial(ONE, (0, 0, 0))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, HomPoly):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def __repr__(self):
        from .serialize import poly_to_text

        return f"HomPoly({poly_to_text(self)})"

    # -- evaluation -----------------------------------------------------------

    def __call__(self, coords):
        coords = tuple(_coerce_scalar(c) for c in coords)
        powers = [_power_table(c, self.degree) for c in coords]
        total = ZERO
        for (i, j, k), coeff in self.terms.items():
            total = total + coeff * powers[0][i] * powers[1][j] * powers[2][k]
        return total


def _power_table(c, n):
    table = [ONE]
    for _ in range(n):
        table.append(table[-1] * c)
    return table


# -- core operations ----------------------------------------------------------


def poly_mul(f, g):
    """Exact product; degrees add."""
    return f * g


def pullback(f, components):
    """Substitute the three map components for (x, y, z) and expand.

    The components must be homogeneous of one common degree q; the result
    has degree q * deg(f).
    """
    px, py, pz = components
    if not (px.degree == py.degree == pz.degree):
        raise DegreeMismatchError("map components must share one degree")
    q = px.degree
    if f.is_zero():
        return HomPoly.zero(q * f.degree)
    d = f.degree
    powx = [None] * (d + 1)
    powy = [None] * (d + 1)
    powz = [None] * (d + 1)
    for table, p in ((powx, px), (powy, py), (powz, pz)):
        table[0] = HomPoly.monomial(ONE, (0, 0, 0))
        for e in range(1, d + 1):
            table[e] = table[e - 1] * p
    acc = HomPoly.zero(q * d)
    for (i, j, k), coeff in f.terms.items():
        acc = acc + (powx[i] * powy[j] * powz[k]).scale(coeff)
    return acc


def exact_div(f, g):
    """Quotient h with f = g*h exactly, or None when g does not divide f."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return HomPoly.zero(f.degree - g.degree) if f.degree >= g.degree else HomPoly.zero(0)
    if f.degree < g.degree:
        return None
    lm_g = g.leading_monomial()
    lc_g = g.terms[lm_g]
    rem = dict(f.terms)
    quot = {}
    # a lazy max-heap of candidate leading monomials (stale entries allowed)
    heap = [(-i, -j, -k) for (i, j, k) in rem]
    heapq.heapify(heap)
    while rem:
        while heap:
            ni, nj, nk = heap[0]
            lm_r = (-ni, -nj, -nk)
            if lm_r in rem:
                break
            heapq.heappop(heap)
        mono = (lm_r[0] - lm_g[0], lm_r[1] - lm_g[1], lm_r[2] - lm_g[2])
        if min(mono) < 0:
            return None
        c = rem[lm_r] / lc_g
        quot[mono] = c
        for (i, j, k), cg in g.terms.items():
            target = (mono[0] + i, mono[1] + j, mono[2] + k)
            old = rem.get(target)
            if old is None:
                heapq.heappush(heap, (-target[0], -target[1], -target[2]))
                new = -(c * cg)
            else:
                new = old - c * cg
            if new.is_zero():
                rem.pop(target, None)
            else:
                rem[target] = new
    return HomPoly._raw(f.degree - g.degree, quot)


def divide_out(f, g):
    """Largest k and cofactor h with f = g^k * h; returns (k, h)."""
    k = 0
    while True:
        h = exact_div(f, g)
        if h is None:
            return k, f
        f = h
        k += 1


def partial(f, var):
    """Formal partial derivative with respect to 'x', 'y' or 'z'."""
    idx = "xyz".index(var)
    if f.degree == 0:
        return HomPoly.zero(0)
    terms = {}
    for mono, coeff in f.terms.items():
        e = mono[idx]
        if e == 0:
            continue
        new = list(mono)
        new[idx] = e - 1
        terms[tuple(new)] = coeff * e
    return HomPoly(f.degree - 1, terms)


class ProjPoint:
    """A point (x0 : y0 : z0) of the projective plane over Q(tau)."""

    __slots__ = ("coords",)

    def __init__(self, x0, y0, z0):
        coords = (_coerce_scalar(x0), _coerce_scalar(y0), _coerce_scalar(z0))
        if all(c.is_zero() for c in coords):
            raise ValueError("(0:0:0) is not a projective point")
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("ProjPoint is immutable")

    def chart_index(self):
        """Index of the chart coordinate: first nonzero among (z, y, x)."""
        for idx in (2, 1, 0):
            if not self.coords[idx].is_zero():
                return idx
        raise AssertionError("unreachable")

    def canonical(self):
        pivot = self.coords[self.chart_index()]
        inv = pivot.inverse()
        return tuple(c * inv for c in self.coords)

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __repr__(self):
        return "(" + " : ".join(str(c) for c in self.coords) + ")"


def multiplicity_at(f, point):
    """Multiplicity of the curve f = 0 at a projective point.

    Works in the affine chart of the first nonzero coordinate in the order
    (z, y, x): the multiplicity is the least n for which some order-n partial
    in the two chart variables does not vanish at the point, equivalently the
    least total degree in the chart translated to put the point at the origin.
    """
    if f.is_zero():
        raise ValueError("multiplicity of the zero polynomial is undefined")
    pivot = point.chart_index()
    u, v = [i for i in range(3) if i != pivot]
    coords = point.canonical()
    powers = [_power_table(c, f.degree) for c in coords]
    for order in range(f.degree + 1):
        for a in range(order + 1):
            b = order - a
            if not _partial_eval(f, u, a, v, b, powers).is_zero():
                return order
    # f is divisible by a full power of the chart plane; cannot happen for
    # homogeneous f nonzero of this degree
    return f.degree + 1


def _partial_eval(f, u, a, v, b, powers):
    """Evaluate (d/du)^a (d/dv)^b f at the point behind `powers`."""
    total = ZERO
    for mono, coeff in f.terms.items():
        eu, ev = mono[u], mono[v]
        if eu < a or ev < b:
            continue
        factor = 1
        for s in range(a):
            factor *= eu - s
        for s in range(b):
            factor *= ev - s
        new = list(mono)
        new[u] = eu - a
        new[v] = ev - b
        total = total + coeff * factor * powers[0][new[0]] * powers[1][new[1]] * powers[2][new[2]]
    return total


def in_span(h, f, g):
    """Coefficients (c1, c2) with h = c1*f + c2*g, or None.

    f and g must be homogeneous of the same degree as h and linearly
    independent.
    """
    if f.degree != g.degree or f.degree != h.degree:
        raise DegreeMismatchError("in_span requires equal degrees")
    monos = sorted(set(f.terms) | set(g.terms), reverse=True)
    pivot = None
    for m1 in monos:
        for m2 in monos:
            det = f.terms.get(m1, ZERO) * g.terms.get(m2, ZERO) - f.terms.get(
                m2, ZERO
            ) * g.terms.get(m1, ZERO)
            if not det.is_zero():
                pivot = (m1, m2, det)
                break
        if pivot:
            break
    if pivot is None:
        raise ValueError("in_span requires linearly independent f, g")
    m1, m2, det = pivot
    h1 = h.terms.get(m1, ZERO)
    h2 = h.terms.get(m2, ZERO)
    c1 = (h1 * g.terms.get(m2, ZERO) - h2 * g.terms.get(m1, ZERO)) / det
    c2 = (f.terms.get(m1, ZERO) * h2 - f.terms.get(m2, ZERO) * h1) / det
    if f.scale(c1) + g.scale(c2) == h:
        return (c1, c2)
    return None


def cube_root(f):
    """Polynomial s with s^3 = f exactly, or None.

    Lifts term by term from the graded-lex leading term: the leading monomial
    of f must have exponents divisible by 3 and its coefficient must be a cube
    in Q(tau).
    """
    if f.is_zero():
        raise ValueError("cube root of the zero polynomial")
    if f.degree % 3:
        return None
    lm = f.leading_monomial()
    if any(e % 3 for e in lm):
        return None
    lead = cube_root_scalar(f.terms[lm])
    if lead is None:
        return None
    root_deg = f.degree // 3
    s = HomPoly.monomial(lead, (lm[0] // 3, lm[1] // 3, lm[2] // 3))
    max_terms = (root_deg + 1) * (root_deg + 2) // 2
    for _ in range(max_terms):
        r = f - s * s * s
        if r.is_zero():
            return normalized(s)
        lm_r = max(r.terms)
        lm_s2 = tuple(2 * e for e in s.leading_monomial())
        mono = tuple(lm_r[i] - lm_s2[i] for i in range(3))
        if min(mono) < 0 or mono >= s.leading_monomial():
            return None
        coeff = r.terms[lm_r] / (3 * s.leading_coefficient() * s.leading_coefficient())
        s = s + HomPoly.monomial(coeff, mono)
    return None


def normalized(f):
    """Canonical scalar normalization of a nonzero polynomial.

    Scales so all coefficients lie in Z(tau) with coordinate content 1, then
    multiplies by the unit of Z(tau) that canonicalizes the graded-lex leading
    coefficient.  The result is the unique representative of f's scalar class.
    """
    if f.is_zero():
        return f
    dens = []
    nums = []
    for c in f.terms.values():
        dens.append(c.a.denominator)
        dens.append(c.b.denominator)
        if c.a.numerator:
            nums.append(abs(c.a.numerator))
        if c.b.numerator:
            nums.append(abs(c.b.numerator))
    lcm_den = int(reduce(_lcm, (int(d) for d in dens), 1))
    scaled = [c * lcm_den for c in f.terms.values()]
    content = reduce(_gcd, (abs(int(v.a)) for v in scaled if v.a), 0)
    content = reduce(_gcd, (abs(int(v.b)) for v in scaled if v.b), content)
    factor = Fraction(lcm_den, content)
    g = f.scale(factor)
    unit = unit_to_canonical(g.leading_coefficient())
    return g.scale(unit)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _lcm(a, b):
    return a * b // _gcd(a, b)


class OneForm:
    """A projective 1-form A dx + B dy + C dz with homogeneous coefficients."""

    __slots__ = ("A", "B", "C")

    def __init__(self, A, B, C, require_projective=False):
        if not (A.degree == B.degree == C.degree):
            raise DegreeMismatchError("1-form coefficients must share one degree")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "C", C)
        if require_projective and not self.euler_defect().is_zero():
            raise ValueError("form does not satisfy the Euler identity xA+yB+zC=0")

    def __setattr__(self, name, value):
        raise AttributeError("OneForm is immutable")

    def euler_defect(self):
        x, y, z = (HomPoly.variable(v) for v in "xyz")
        return x * self.A + y * self.B + z * self.C

    def is_projective(self):
        return self.euler_defect().is_zero()

    def scale(self, c):
        return OneForm(self.A.scale(c), self.B.scale(c), self.C.scale(c))

    def __add__(self, other):
        return OneForm(self.A + other.A, self.B + other.B, self.C + other.C)

    def __repr__(self):
        return f"OneForm(A={self.A!r}, B={self.B!r}, C={self.C!r})"


def wedge_vanishes(w1, w2):
    """True when w1 and w2 define the same foliation (w1 ^ w2 = 0).

    Checks that the three 2x2 minors of the coefficient matrix vanish
    identically; this decides proportionality up to polynomial factors
    without any factorization.
    """
    return (
        (w1.A * w2.B - w2.A * w1.B).is_zero()
        and (w1.A * w2.C - w2.A * w1.C).is_zero()
        and (w1.B * w2.C - w2.B * w1.C).is_zero()
    )
