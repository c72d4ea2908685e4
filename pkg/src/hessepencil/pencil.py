"""The data-list calculus: [d, m1, mtau, mtau2, minf] for a pencil's generic
member, its transformation under each quadratic map, composition along a
descent plan, and arithmetic consistency checks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .params import BaseTag, CremonaStep, INFINITY, plan_descent


class InconsistencyError(RuntimeError):
    """A transform produced data that cannot belong to the family."""


@dataclass(frozen=True)
class PencilData:
    """Degree of the generic member and its uniform multiplicities at the
    four point triples P3(1), P3(tau), P3(tau^2), P3(inf)."""

    d: int
    m1: int
    mtau: int
    mtau2: int
    minf: int

    def as_list(self):
        return [self.d, self.m1, self.mtau, self.mtau2, self.minf]

    def multiplicities(self):
        return (self.m1, self.mtau, self.mtau2, self.minf)


BASE_DATA = {
    BaseTag.F1: PencilData(3, 0, 1, 1, 1),
    BaseTag.FINF: PencilData(3, 1, 1, 1, 0),
}


def transform_data(step, data):
    """Data list of the strict transform under one quadratic map.

    Blowing up the triple P3(i) costs 3*m_i in degree and swaps the two
    non-fixed triples; the multiplicity at P3(i) becomes d - 2*m_i.
    """
    d, m1, mt, mt2, mi = data.d, data.m1, data.mtau, data.mtau2, data.minf
    if step == CremonaStep.Q1:
        out = PencilData(2 * d - 3 * m1, d - 2 * m1, mt2, mt, mi)
    elif step == CremonaStep.QTAU:
        out = PencilData(2 * d - 3 * mt, mt2, d - 2 * mt, m1, mi)
    elif step == CremonaStep.QTAU2:
        out = PencilData(2 * d - 3 * mt2, mt, m1, d - 2 * mt2, mi)
    elif step == CremonaStep.QINF:
        out = PencilData(2 * d - 3 * mi, m1, mt2, mt, d - 2 * mi)
    else:
        raise ValueError(f"unknown step {step!r}")
    if out.d <= 0 or min(out.multiplicities()) < 0:
        raise InconsistencyError(
            f"{step.name} on {data.as_list()} gives {out.as_list()}: "
            "not realizable in the family"
        )
    return out


def data_trace(t):
    """Descent plan for t plus every intermediate data list along the replay.

    The trace starts with the base pencil's data and has one more entry per
    step; the last entry is the data of the pencil for t.
    """
    plan = plan_descent(t)
    data = BASE_DATA[plan.base]
    trace = [data]
    for step in plan.steps:
        data = transform_data(step, data)
        trace.append(data)
    return plan, trace


def data_for(t):
    """Degree and multiplicities of the pencil for t in Z(tau) or infinity."""
    plan, trace = data_trace(t)
    return plan, trace[-1]


def data_symmetry_trivolution(data):
    """Effect on a data list of the order-three linear symmetry t -> tau*t.

    The symmetry permutes the finite point triples cyclically and fixes
    P3(inf), so (m1, mtau, mtau2) -> (mtau2, m1, mtau).
    """
    return PencilData(data.d, data.mtau2, data.m1, data.mtau, data.minf)


@dataclass(frozen=True)
class InvariantReport:
    """Outcome of the arithmetic consistency checks on one data list."""

    data: PencilData
    bezout: bool  # d^2 = 3 * sum(m_i^2)
    genus_one: bool  # (d-1)(d-2)/2 - 3 * sum(m_i (m_i - 1)/2) = 1
    degree_multiple_of_three: bool

    @property
    def passed(self):
        return self.bezout and self.genus_one and self.degree_multiple_of_three


def check_data_invariants(data):
    d = data.d
    ms = data.multiplicities()
    bezout = d * d == 3 * sum(m * m for m in ms)
    genus = (d - 1) * (d - 2) // 2 - 3 * sum(m * (m - 1) // 2 for m in ms) == 1
    return InvariantReport(data, bezout, genus, d % 3 == 0)


def darboux_pencil_degree(member_degree, multiple_components=()):
    """Degree as a foliation of a pencil with the given multiple components.

    `multiple_components` lists (multiplicity alpha >= 2, component degree)
    over all special members; each one lowers 2*deg - 2 by (alpha-1)*deg.
    """
    total = 2 * member_degree - 2
    for alpha, deg in multiple_components:
        if alpha < 2:
            raise ValueError("listed components must have multiplicity >= 2")
        total -= (alpha - 1) * deg
    return total
