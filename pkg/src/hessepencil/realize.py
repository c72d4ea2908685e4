"""Realization of the pencils: base generators, strict transforms under the
quadratic maps, the full parameter -> generators pipeline, and the
verification battery (multiplicities, foliation identity, special members).
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import arrangement, lins_neto_form, quad_map
from .params import BaseTag, CremonaStep
from .pencil import InconsistencyError, PencilData, data_trace
from .poly import (
    HomPoly,
    OneForm,
    cube_root,
    divide_out,
    exact_div,
    in_span,
    multiplicity_at,
    normalized,
    partial,
    pullback,
    wedge_vanishes,
)
from .qtau import ONE, QTau


class DegreeCapExceeded(RuntimeError):
    """Realization refused because the predicted degree is over the cap."""

    def __init__(self, predicted_degree, cap):
        self.predicted_degree = predicted_degree
        self.cap = cap
        super().__init__(
            f"predicted generator degree {predicted_degree} exceeds cap {cap}"
        )


@dataclass(frozen=True)
class PencilGenerators:
    """Two canonically normalized, linearly independent generators."""

    F: HomPoly
    G: HomPoly

    @property
    def degree(self):
        return self.F.degree


def base_generators(base):
    """Generators of the two pencils of cubics at the bottom of every plan."""
    lines = arrangement().lines
    if base == BaseTag.F1:
        f = lines["l1"] * lines["m1"] * lines["n1"]
        g = lines["l2"] * lines["m3"] * lines["n2"]
    elif base == BaseTag.FINF:
        f = lines["l1"] * lines["l2"] * lines["l3"]  # y^3 - x^3
        g = -(lines["n1"] * lines["n2"] * lines["n3"])  # y^3 - z^3
    else:
        raise ValueError(f"unknown base {base!r}")
    return PencilGenerators(normalized(f), normalized(g))


def strict_transform_pencil(step, gens):
    """Pull both generators back under one quadratic map and strip the
    exceptional fixed components.

    For each triangle line the minimal common order across the two pulled
    back generators is divided out; this removes exactly the pencil's fixed
    components without consulting the data-list prediction.
    """
    qm = quad_map(step)
    f = pullback(gens.F, qm.components)
    g = pullback(gens.G, qm.components)
    for line in qm.triangle:
        kf, f_red = divide_out(f, line)
        kg, g_red = divide_out(g, line)
        k = min(kf, kg)
        if k:
            f = f_red if kf == k else f_red * line ** (kf - k)
            g = g_red if kg == k else g_red * line ** (kg - k)
    f = normalized(f)
    g = normalized(g)
    if in_span_safe(g, f):
        raise InconsistencyError(
            f"{step.name} produced a linearly dependent generator pair"
        )
    return PencilGenerators(f, g)


def in_span_safe(h, f):
    """True when h is a scalar multiple of f."""
    if h.degree != f.degree or set(h.terms) != set(f.terms):
        return False
    mono = f.leading_monomial()
    ratio = h.terms[mono] / f.terms[mono]
    return h == f.scale(ratio)


@dataclass(frozen=True)
class StepCheck:
    step: CremonaStep
    predicted: PencilData
    generator_degree: int

    @property
    def passed(self):
        return self.predicted.d == self.generator_degree


@dataclass(frozen=True)
class RealizationResult:
    t: object
    plan: object
    data: PencilData
    generators: PencilGenerators
    step_checks: tuple

    @property
    def degree(self):
        return self.generators.degree


DEFAULT_DEGREE_CAP = 400


def realize(t, degree_cap=DEFAULT_DEGREE_CAP):
    """Explicit generators of the pencil for t, with degree tracking.

    Folds the strict transform over the descent plan, asserting after every
    step that the generator degree matches the data-list prediction.  Refuses
    up front when the predicted final degree exceeds `degree_cap`.
    """
    plan, trace = data_trace(t)
    predicted = trace[-1]
    if predicted.d > degree_cap:
        raise DegreeCapExceeded(predicted.d, degree_cap)
    gens = base_generators(plan.base)
    checks = []
    for step, expected in zip(plan.steps, trace[1:]):
        gens = strict_transform_pencil(step, gens)
        check = StepCheck(step, expected, gens.degree)
        checks.append(check)
        if not check.passed:
            raise InconsistencyError(
                f"degree {gens.degree} after {step.name} disagrees with "
                f"predicted {expected.d}"
            )
    return RealizationResult(t, plan, predicted, gens, tuple(checks))


# -- verification battery --------------------------------------------------------

#: Deterministic pseudo-generic member coefficients; the second pair is the
#: fallback when the first lands on a special member.
GENERIC_COEFFS = ((QTau(2, 3), QTau(5, -1)), (QTau(7, 1), QTau(1, 11)))

_TRIPLE_TO_FIELD = {"1": "m1", "tau": "mtau", "tau2": "mtau2", "inf": "minf"}


@dataclass(frozen=True)
class PointMultiplicity:
    point: object
    triple: str
    expected: int
    member: int
    min_of_generators: int

    @property
    def passed(self):
        return self.member == self.expected


@dataclass(frozen=True)
class MultiplicityReport:
    coefficients: tuple
    entries: tuple

    @property
    def passed(self):
        return all(e.passed for e in self.entries)


def verify_multiplicities(gens, data):
    """Compare multiplicities of a pseudo-generic member with the data list.

    Retries with the fallback coefficient pair if any point shows a higher
    multiplicity than predicted (the sign of having hit a special member).
    """
    arr = arrangement()
    report = None
    for coeffs in GENERIC_COEFFS:
        member = gens.F.scale(coeffs[0]) + gens.G.scale(coeffs[1])
        entries = []
        for key, points in arr.point_triples.items():
            expected = getattr(data, _TRIPLE_TO_FIELD[key])
            for p in points:
                entries.append(
                    PointMultiplicity(
                        p,
                        key,
                        expected,
                        multiplicity_at(member, p),
                        min(
                            multiplicity_at(gens.F, p),
                            multiplicity_at(gens.G, p),
                        ),
                    )
                )
        report = MultiplicityReport(coeffs, tuple(entries))
        if not any(e.member > e.expected for e in report.entries):
            break
    return report


def foliation_oneform(gens):
    """The 1-form G dF - F dG of the pencil; Euler identity holds by construction."""
    f, g = gens.F, gens.G
    form = OneForm(
        g * partial(f, "x") - f * partial(g, "x"),
        g * partial(f, "y") - f * partial(g, "y"),
        g * partial(f, "z") - f * partial(g, "z"),
    )
    assert form.euler_defect().is_zero()
    return form


def verify_lins_neto(gens, t):
    """True iff the realized pencil induces exactly the family member for t."""
    return wedge_vanishes(foliation_oneform(gens), lins_neto_form(t))


@dataclass(frozen=True)
class SpecialMember:
    coefficients: tuple  # (c1, c2) with the member c1*F + c2*G
    member: HomPoly
    line_orders: dict  # arrangement line label -> multiplicity in the member
    residual: HomPoly  # member with all arrangement-line factors removed
    residual_cube_root: object  # HomPoly or None


def special_members(gens):
    """The members containing arrangement lines, with their factor structure.

    For each of the nine lines, membership of the line in c1*F + c2*G is the
    linear condition that the two generators restrict proportionally to the
    line; parameters are deduplicated projectively.
    """
    arr = arrangement()
    found = {}
    for label, line in arr.lines.items():
        coeffs = _line_member_coefficients(line, gens)
        if coeffs is None:
            continue
        found.setdefault(_projective_key(coeffs), coeffs)
    members = []
    for coeffs in found.values():
        member = normalized(gens.F.scale(coeffs[0]) + gens.G.scale(coeffs[1]))
        residual = member
        line_orders = {}
        for label, line in arr.lines.items():
            k, residual = divide_out(residual, line)
            if k:
                line_orders[label] = k
        residual = normalized(residual)
        members.append(
            SpecialMember(coeffs, member, line_orders, residual, cube_root(residual))
        )
    members.sort(key=lambda s: sorted(s.line_orders))
    return members


def _line_member_coefficients(line, gens):
    """(c1, c2) with line | c1*F + c2*G, or None when no member contains it."""
    basis = _line_parametrization(line)
    f_r = pullback(gens.F, basis)
    g_r = pullback(gens.G, basis)
    if f_r.is_zero() and g_r.is_zero():
        raise InconsistencyError("arrangement line divides the whole pencil")
    if f_r.is_zero():
        return (ONE, QTau(0, 0))
    if g_r.is_zero():
        return (QTau(0, 0), ONE)
    ratio = exact_div(f_r, g_r)
    if ratio is None or ratio.degree != 0:
        return None
    lam = ratio.leading_coefficient()
    return (ONE, -lam)


def _line_parametrization(line):
    """Three degree-1 polynomials in (x, y) mapping P^1 onto the line."""
    coeffs = [line.terms.get(m, QTau(0, 0)) for m in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    a, b, c = coeffs
    # two independent kernel vectors of (a, b, c)
    if not a.is_zero():
        inv = a.inverse()
        v1 = (-b * inv, ONE, QTau(0, 0))
        v2 = (-c * inv, QTau(0, 0), ONE)
    elif not b.is_zero():
        inv = b.inverse()
        v1 = (ONE, QTau(0, 0) - a * inv, QTau(0, 0))
        v2 = (QTau(0, 0), -c * inv, ONE)
    else:
        v1 = (ONE, QTau(0, 0), QTau(0, 0))
        v2 = (QTau(0, 0), ONE, QTau(0, 0))
    return tuple(
        HomPoly(1, {(1, 0, 0): v1[i], (0, 1, 0): v2[i]}) for i in range(3)
    )


def _projective_key(coeffs):
    c1, c2 = coeffs
    if not c1.is_zero():
        return (QTau(1, 0), c2 / c1)
    return (QTau(0, 0), QTau(1, 0))
