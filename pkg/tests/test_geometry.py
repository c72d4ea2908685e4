"""Fixed geometry: the nine-line arrangement and its incidences, the four
quadratic maps, arrangement invariance, and the two generating 1-forms."""

import pytest

from hessepencil.geometry import (
    arrangement,
    family_forms,
    lins_neto_form,
    point_triple_action,
    quad_map,
    verify_arrangement_invariance,
)
from hessepencil.params import CremonaStep, INFINITY
from hessepencil.poly import (
    HomPoly,
    ProjPoint,
    divide_out,
    exact_div,
    normalized,
    pullback,
    wedge_vanishes,
)
from hessepencil.qtau import ONE, QTau, TAU, TAU2

X = HomPoly.variable("x")
Y = HomPoly.variable("y")
Z = HomPoly.variable("z")

ALL_STEPS = list(CremonaStep)


def test_twelve_points_in_four_triples():
    arr = arrangement()
    points = arr.points()
    assert len(points) == 12
    assert len(set(points)) == 12
    assert sorted(len(v) for v in arr.point_triples.values()) == [3, 3, 3, 3]


def test_incidence_structure():
    arr = arrangement()
    # every point lies on exactly the 3 recorded lines and on no others
    for p, labels in arr.incidence.items():
        assert len(labels) == 3
        for label, line in arr.lines.items():
            vanishes = line(p.coords).is_zero()
            assert vanishes == (label in labels), (p, label)
    # every line carries exactly 4 of the 12 points
    for label in arr.lines:
        on_line = [p for p, labels in arr.incidence.items() if label in labels]
        assert len(on_line) == 4, label


def test_nine_line_product():
    arr = arrangement()
    expected = (X**3 - Z**3) * (Y**3 - Z**3) * (X**3 - Y**3)
    l9 = arr.nine_line_product()
    assert normalized(l9) == normalized(expected)


def test_quad_maps_are_quadratic_involutions():
    for step in ALL_STEPS:
        qm = quad_map(step)
        assert all(c.degree == 2 for c in qm.components)
        # composing the map with itself gives the identity times a common factor
        twice = tuple(pullback(c, qm.components) for c in qm.components)
        ratios = [exact_div(t, v) for t, v in zip(twice, (X, Y, Z))]
        assert all(r is not None for r in ratios)
        assert ratios[0] == ratios[1] == ratios[2]


def test_indeterminacy_points_are_the_named_triple():
    arr = arrangement()
    for step in ALL_STEPS:
        qm = quad_map(step)
        base_points = arr.point_triples[qm.indeterminacy_key()]
        for p in arr.points():
            all_vanish = all(c(p.coords).is_zero() for c in qm.components)
            assert all_vanish == (p in base_points), (step, p)


def test_triangle_joins_the_base_points():
    arr = arrangement()
    for step in ALL_STEPS:
        qm = quad_map(step)
        base_points = arr.point_triples[qm.indeterminacy_key()]
        for line in qm.triangle:
            through = [p for p in base_points if line(p.coords).is_zero()]
            assert len(through) == 2, (step, line)


def test_arrangement_invariance_all_maps():
    for step in ALL_STEPS:
        assert verify_arrangement_invariance(step), step


def test_invariance_cofactor_is_the_triangle_cubed():
    arr = arrangement()
    l9 = arr.nine_line_product()
    for step in ALL_STEPS:
        qm = quad_map(step)
        lhs = pullback(l9, qm.components)
        cofactor = exact_div(lhs, l9)
        assert cofactor is not None
        for line in qm.triangle:
            k, cofactor = divide_out(cofactor, line)
            assert k == 3, (step, line)
        assert cofactor.degree == 0 and len(cofactor) == 1
    # spot check: for Qinf the cofactor is x^3 y^3 z^3 up to a scalar
    lhs = pullback(l9, quad_map(CremonaStep.QINF).components)
    assert normalized(exact_div(lhs, l9)) == HomPoly.monomial(ONE, (3, 3, 3))


def test_point_triple_action_matches_the_actual_maps():
    arr = arrangement()
    for step in ALL_STEPS:
        perm = point_triple_action(step)
        qm = quad_map(step)
        assert perm[qm.indeterminacy_key()] == qm.indeterminacy_key()
        assert perm["inf"] == "inf"
        assert sorted(perm.values()) == sorted(perm.keys())
        for src, dst in perm.items():
            targets = set(arr.point_triples[dst])
            for p in arr.point_triples[src]:
                image = tuple(c(p.coords) for c in qm.components)
                if all(v.is_zero() for v in image):
                    continue  # indeterminacy point, no image
                assert ProjPoint(*image) in targets, (step, src, p)


def test_family_forms_satisfy_euler():
    omega, xi = family_forms()
    assert omega.euler_defect().is_zero()
    assert xi.euler_defect().is_zero()
    assert all(c.degree == 5 for c in (omega.A, omega.B, omega.C, xi.A, xi.B, xi.C))


def test_family_forms_are_independent_but_share_the_nine_lines():
    omega, xi = family_forms()
    assert not wedge_vanishes(omega, xi)
    l9 = arrangement().nine_line_product()
    minors = (
        omega.A * xi.B - xi.A * omega.B,
        omega.A * xi.C - xi.A * omega.C,
        omega.B * xi.C - xi.B * omega.C,
    )
    for minor in minors:
        assert exact_div(minor, l9) is not None


def test_lins_neto_form_parameters():
    omega, xi = family_forms()
    assert wedge_vanishes(lins_neto_form(INFINITY), xi)
    w = lins_neto_form(QTau(2, -1))
    assert w.A == omega.A + xi.A.scale(QTau(2, -1))
    assert wedge_vanishes(lins_neto_form(0), omega)
    assert not wedge_vanishes(lins_neto_form(QTau(1, 0)), lins_neto_form(QTau(0, 1)))
