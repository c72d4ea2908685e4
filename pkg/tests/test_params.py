"""Parameter involutions, symmetries, and the norm-descent planner."""

import pytest
from hypothesis import given, strategies as st

from hessepencil.params import (
    BaseTag,
    CremonaStep,
    EisensteinParam,
    INFINITY,
    Symmetry,
    apply_q,
    apply_symmetry,
    base_parameter,
    norm,
    plan_descent,
    replay_plan,
)
from hessepencil.qtau import QTau

params = st.builds(
    EisensteinParam,
    st.integers(min_value=-60, max_value=60),
    st.integers(min_value=-60, max_value=60),
)
scalars = st.builds(
    QTau, st.integers(min_value=-30, max_value=30), st.integers(min_value=-30, max_value=30)
)


def test_norm_is_the_descent_measure():
    assert norm(EisensteinParam(3, -4)) == 25
    assert norm(EisensteinParam(0, 0)) == 0
    with pytest.raises(ValueError):
        norm(INFINITY)


def test_involutions_on_examples():
    t = QTau(2, 5)
    assert apply_q(CremonaStep.Q1, t) == QTau(-3, -5)
    assert apply_q(CremonaStep.QTAU, t) == QTau(-2, -6)
    assert apply_q(CremonaStep.QTAU2, t) == QTau(-1, -4)
    assert apply_q(CremonaStep.QINF, QTau(0, 0)) is INFINITY
    assert apply_q(CremonaStep.QINF, INFINITY) == QTau(0, 0)
    # 1/tau = tau^2
    assert apply_q(CremonaStep.QINF, QTau(0, 1)) == QTau(-1, -1)


@given(scalars, st.sampled_from(list(CremonaStep)))
def test_each_q_is_an_involution(t, step):
    image = apply_q(step, t)
    back = apply_q(step, image)
    if back is INFINITY:
        assert t.is_zero() and step == CremonaStep.QINF
    else:
        assert back == t


def test_symmetry_examples():
    assert apply_symmetry(Symmetry.TRIVOLUTION, QTau(6, -3)) == QTau(3, 9)
    assert apply_symmetry(Symmetry.NEGATION, QTau(2, -7)) == QTau(-2, 7)
    assert apply_symmetry(Symmetry.INV_T, INFINITY) == QTau(1, 0)
    assert apply_symmetry(Symmetry.INV_T, QTau(1, 0)) is INFINITY
    assert apply_symmetry(Symmetry.INV_T, QTau(0, 0)) == QTau(-2, 0)


@given(scalars)
def test_trivolution_has_order_three(t):
    out = t
    for _ in range(3):
        out = apply_symmetry(Symmetry.TRIVOLUTION, out)
    assert out == t


@given(scalars)
def test_inv_t_has_order_two(t):
    once = apply_symmetry(Symmetry.INV_T, t)
    assert apply_symmetry(Symmetry.INV_T, once) == t


@given(scalars)
def test_inv_t_conjugates_q1_to_qinf(t):
    lhs = apply_symmetry(
        Symmetry.INV_T,
        apply_q(CremonaStep.Q1, apply_symmetry(Symmetry.INV_T, t)),
    )
    rhs = apply_q(CremonaStep.QINF, t)
    if rhs is INFINITY:
        assert lhs is INFINITY
    else:
        assert lhs == rhs


# -- planner ------------------------------------------------------------------


def test_terminal_plans():
    assert plan_descent(INFINITY).steps == ()
    assert plan_descent(INFINITY).base == BaseTag.FINF
    assert plan_descent(EisensteinParam(1, 0)).steps == ()
    assert plan_descent(EisensteinParam(1, 0)).base == BaseTag.F1
    p = plan_descent(EisensteinParam(0, 0))
    assert p.step_codes() == [0] and p.base == BaseTag.FINF
    p = plan_descent(EisensteinParam(0, 1))
    assert p.step_codes() == [3] and p.base == BaseTag.F1
    p = plan_descent(EisensteinParam(-1, 0))
    assert p.step_codes() == [0, 1] and p.base == BaseTag.FINF
    p = plan_descent(EisensteinParam(0, -1))
    assert p.step_codes() == [0, 2] and p.base == BaseTag.FINF


def test_plan_for_minus_two_plus_eight_tau():
    plan = plan_descent(EisensteinParam(-2, 8))
    assert plan.base == BaseTag.FINF
    # thirteen maps applied to the base pencil, ending with the two
    # alternating blocks that rebuild the large parameter
    assert plan.step_codes() == [0, 2, 1, 2, 1, 2, 1, 2, 1, 2, 3, 2, 3]


def test_plan_step_counts_for_large_parameters():
    assert len(plan_descent(EisensteinParam(-2, 41)).steps) == 57
    assert len(plan_descent(EisensteinParam(-40, 160)).steps) == 241
    assert len(plan_descent(EisensteinParam(180, -110)).steps) == 312


@given(params)
def test_descent_loop_branches_strictly_decrease_the_norm(t):
    m, n = t.m, t.n
    if abs(m) + abs(n) <= 1:
        return
    if m + n > 1:
        m2, n2 = -m + 1, -n + 1
    elif m <= n:
        m2, n2 = -m - 1, -n
    else:
        m2, n2 = -m, -n - 1
    assert m2 * m2 + n2 * n2 < m * m + n * n


@given(params)
def test_replay_reproduces_the_parameter(t):
    plan = plan_descent(t)
    assert replay_plan(plan) == t.to_scalar()


def test_replay_at_infinity():
    plan = plan_descent(INFINITY)
    assert replay_plan(plan) is INFINITY
    assert base_parameter(BaseTag.F1) == QTau(1, 0)
    assert base_parameter(BaseTag.FINF) is INFINITY
