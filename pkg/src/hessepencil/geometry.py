"""Fixed geometric data: the dual Hesse arrangement (nine lines, twelve
triple points), the four quadratic Cremona maps with their exceptional
triangles, and the two degree-five 1-forms generating the family.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .params import CremonaStep, INFINITY
from .poly import HomPoly, OneForm, ProjPoint, exact_div, pullback
from .qtau import ONE, QTau, TAU, TAU2

_X = HomPoly.variable("x")
_Y = HomPoly.variable("y")
_Z = HomPoly.variable("z")


@dataclass(frozen=True)
class Arrangement:
    """Nine labeled lines, twelve points in four triples, and incidences."""

    lines: dict  # label -> degree-1 HomPoly
    point_triples: dict  # triple key ("1","tau","tau2","inf") -> [ProjPoint]
    incidence: dict  # ProjPoint -> frozenset of the 3 line labels through it

    def points(self):
        return [p for triple in self.point_triples.values() for p in triple]

    def nine_line_product(self):
        prod = HomPoly.monomial(ONE, (0, 0, 0))
        for line in self.lines.values():
            prod = prod * line
        return prod


@lru_cache(maxsize=1)
def arrangement():
    """The dual Hesse arrangement in its standard coordinates."""
    lines = {
        "l1": _Y - _X,
        "l2": _Y - _X.scale(TAU),
        "l3": _Y - _X.scale(TAU2),
        "m1": _Z - _X,
        "m2": _Z - _X.scale(TAU),
        "m3": _Z - _X.scale(TAU2),
        "n1": _Z - _Y,
        "n2": _Z - _Y.scale(TAU),
        "n3": _Z - _Y.scale(TAU2),
    }
    table = {
        "1": [
            (ProjPoint(1, 1, 1), ("l1", "m1", "n1")),
            (ProjPoint(1, TAU, TAU2), ("l2", "m3", "n2")),
            (ProjPoint(1, TAU2, TAU), ("l3", "m2", "n3")),
        ],
        "tau": [
            (ProjPoint(1, TAU, 1), ("l2", "m1", "n3")),
            (ProjPoint(1, 1, TAU), ("l1", "m2", "n2")),
            (ProjPoint(TAU, 1, 1), ("l3", "m3", "n1")),
        ],
        "tau2": [
            (ProjPoint(1, 1, TAU2), ("l1", "m3", "n3")),
            (ProjPoint(TAU2, 1, 1), ("l2", "m2", "n1")),
            (ProjPoint(1, TAU2, 1), ("l3", "m1", "n2")),
        ],
        "inf": [
            (ProjPoint(0, 0, 1), ("l1", "l2", "l3")),
            (ProjPoint(0, 1, 0), ("m1", "m2", "m3")),
            (ProjPoint(1, 0, 0), ("n1", "n2", "n3")),
        ],
    }
    point_triples = {key: [p for p, _ in rows] for key, rows in table.items()}
    incidence = {p: frozenset(labels) for rows in table.values() for p, labels in rows}
    return Arrangement(lines, point_triples, incidence)


TRIPLE_KEYS = ("1", "tau", "tau2", "inf")

_STEP_TO_TRIPLE = {
    CremonaStep.Q1: "1",
    CremonaStep.QTAU: "tau",
    CremonaStep.QTAU2: "tau2",
    CremonaStep.QINF: "inf",
}


@dataclass(frozen=True)
class QuadMap:
    """One quadratic Cremona map: components, indeterminacy triple key, and
    the three lines of the exceptional triangle joining its base points."""

    tag: CremonaStep
    components: tuple  # three HomPoly of degree 2
    triangle: tuple  # three HomPoly of degree 1

    def indeterminacy_key(self):
        return _STEP_TO_TRIPLE[self.tag]


def _lin(cx, cy, cz):
    return HomPoly.linear(cx, cy, cz)


@lru_cache(maxsize=None)
def quad_map(step):
    xy = _X * _Y
    xz = _X * _Z
    yz = _Y * _Z
    x2 = _X * _X
    y2 = _Y * _Y
    z2 = _Z * _Z
    if step == CremonaStep.Q1:
        comps = (y2 - xz, x2 - yz, z2 - xy)
        triangle = (_lin(1, 1, 1), _lin(1, TAU, TAU2), _lin(1, TAU2, TAU))
    elif step == CremonaStep.QTAU:
        comps = (y2.scale(TAU) - xz, x2.scale(TAU) - yz, z2 - xy.scale(TAU2))
        triangle = (_lin(1, TAU, TAU), _lin(1, 1, TAU2), _lin(1, TAU2, 1))
    elif step == CremonaStep.QTAU2:
        comps = (y2.scale(TAU2) - xz, x2.scale(TAU2) - yz, z2 - xy.scale(TAU))
        triangle = (_lin(1, TAU, 1), _lin(1, TAU2, TAU2), _lin(1, 1, TAU))
    elif step == CremonaStep.QINF:
        comps = (yz, xz, xy)
        triangle = (_X, _Y, _Z)
    else:
        raise ValueError(f"unknown step {step!r}")
    return QuadMap(step, comps, triangle)


def point_triple_action(step):
    """Permutation of the four point triples induced by one quadratic map.

    Each map fixes its own indeterminacy triple and P3(inf) (Qinf fixes
    P3(1) as well) and swaps the remaining two triples.
    """
    if step == CremonaStep.Q1:
        return {"1": "1", "tau": "tau2", "tau2": "tau", "inf": "inf"}
    if step == CremonaStep.QTAU:
        return {"1": "tau2", "tau": "tau", "tau2": "1", "inf": "inf"}
    if step == CremonaStep.QTAU2:
        return {"1": "tau", "tau": "1", "tau2": "tau2", "inf": "inf"}
    if step == CremonaStep.QINF:
        return {"1": "1", "tau": "tau2", "tau2": "tau", "inf": "inf"}
    raise ValueError(f"unknown step {step!r}")


def verify_arrangement_invariance(step):
    """Check pullback(L9, Q_i) = c * (triangle product)^3 * L9 exactly."""
    qm = quad_map(step)
    l9 = arrangement().nine_line_product()
    lhs = pullback(l9, qm.components)
    cofactor = HomPoly.monomial(ONE, (0, 0, 0))
    for line in qm.triangle:
        cofactor = cofactor * line**3
    ratio = exact_div(lhs, cofactor * l9)
    return ratio is not None and len(ratio) == 1 and ratio.degree == 0


@lru_cache(maxsize=1)
def family_forms():
    """The two degree-five projective 1-forms whose span cuts out the family.

    Both satisfy the Euler identity exactly; this is asserted on first use
    to lock the transcription of the fixed constants.
    """
    x, y, z = _X, _Y, _Z
    cyz = z * z + y * y + y * z  # z^2 + y^2 + yz
    cxz = x * x + z * x + z * z  # x^2 + zx + z^2
    cxy = x * x + x * y + y * y  # x^2 + xy + y^2
    omega = OneForm(
        z * (y - z) * cyz * y,
        -(z * (x - z) * cxz * x),
        x * y * (x - y) * cxy,
        require_projective=True,
    )
    xi = OneForm(
        -((y - z) * cyz * x * x),
        (x - z) * cxz * y * y,
        -(z * z * (x - y) * cxy),
        require_projective=True,
    )
    return omega, xi


def lins_neto_form(t):
    """The 1-form of the family member for parameter t (Xi at infinity)."""
    omega, xi = family_forms()
    if t is INFINITY:
        return xi
    if not isinstance(t, QTau):
        t = QTau(t, 0)
    return omega + xi.scale(t)
