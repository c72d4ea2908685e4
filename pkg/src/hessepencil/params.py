"""Parameters t = m + n*tau, the four parameter involutions, symmetries,
and the norm-descent planner reducing any Eisenstein parameter to a
fundamental pencil.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .qtau import QTau, TAU


class _Infinity:
    """The distinguished parameter value infinity (a singleton)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"


INFINITY = _Infinity()


@dataclass(frozen=True)
class EisensteinParam:
    """Parameter t = m + n*tau with integer m, n."""

    m: int
    n: int

    def to_scalar(self):
        return QTau(self.m, self.n)

    def __repr__(self):
        return f"EisensteinParam({self.m}, {self.n})"


def norm(t):
    """N(m, n) = m^2 + n^2 (the planner's descent measure, not the field norm)."""
    if t is INFINITY:
        raise ValueError("norm is undefined at infinity")
    return t.m * t.m + t.n * t.n


class CremonaStep(enum.IntEnum):
    """The four quadratic maps, with the wire codes of the step listings."""

    QINF = 0
    Q1 = 1
    QTAU = 2
    QTAU2 = 3


class BaseTag(enum.Enum):
    """Which pencil of cubics a descent plan bottoms out at."""

    F1 = "F1"
    FINF = "Finf"


@dataclass(frozen=True)
class DescentPlan:
    """Steps that rebuild the pencil for `t` from a base pencil of cubics.

    `steps` are applied left-to-right starting from the base parameter
    (1 for F1, infinity for Finf).
    """

    t: object
    steps: tuple
    base: BaseTag

    def step_codes(self):
        return [int(s) for s in self.steps]


# -- rational-parameter arithmetic (Q(tau) union infinity) ---------------------


def _as_scalar(t):
    if isinstance(t, EisensteinParam):
        return t.to_scalar()
    if isinstance(t, QTau):
        return t
    if isinstance(t, (int, Fraction)):
        return QTau(t, 0)
    raise TypeError(f"not a parameter value: {t!r}")


def apply_q(step, t):
    """Parameter involution of one quadratic map: q1 = -t-1, qtau = -t-tau,
    qtau2 = -t+1+tau, qinf = 1/t (with 0 and infinity exchanged)."""
    if step == CremonaStep.QINF:
        if t is INFINITY:
            return QTau(0, 0)
        t = _as_scalar(t)
        if t.is_zero():
            return INFINITY
        return t.inverse()
    if t is INFINITY:
        return INFINITY
    t = _as_scalar(t)
    if step == CremonaStep.Q1:
        return -t - QTau(1, 0)
    if step == CremonaStep.QTAU:
        return -t - QTau(0, 1)
    if step == CremonaStep.QTAU2:
        return -t + QTau(1, 1)
    raise ValueError(f"unknown step {step!r}")


class Symmetry(enum.Enum):
    TRIVOLUTION = "trivolution"  # t -> tau * t, order three
    INV_T = "inv_t"  # t -> (t + 2) / (t - 1), order two
    NEGATION = "negation"  # t -> -t


def apply_symmetry(sym, t):
    if sym == Symmetry.TRIVOLUTION:
        if t is INFINITY:
            return INFINITY
        return _as_scalar(t) * TAU
    if sym == Symmetry.NEGATION:
        if t is INFINITY:
            return INFINITY
        return -_as_scalar(t)
    if sym == Symmetry.INV_T:
        if t is INFINITY:
            return QTau(1, 0)
        t = _as_scalar(t)
        if t == QTau(1, 0):
            return INFINITY
        return (t + QTau(2, 0)) / (t - QTau(1, 0))
    raise ValueError(f"unknown symmetry {sym!r}")


# -- descent planner ------------------------------------------------------------


def plan_descent(t):
    """Norm-descent plan from t in Z(tau) (or infinity) down to F1 or Finf.

    The loop reduces |m| + |n| to at most 1 by always picking the unique
    norm-decreasing involution under the fixed branch order (qtau2 when
    m + n > 1, else q1 when m <= n, else qtau), then dispatches the five
    terminal parameters.  The recorded codes are reversed so that the plan
    reads as maps applied to the base pencil.
    """
    if t is INFINITY:
        return DescentPlan(t, (), BaseTag.FINF)
    m, n = t.m, t.n
    recorded = []
    while abs(m) + abs(n) > 1:
        if m + n > 1:
            m, n = -m + 1, -n + 1
            recorded.append(CremonaStep.QTAU2)
        elif m <= n:
            m, n = -m - 1, -n
            recorded.append(CremonaStep.Q1)
        else:
            m, n = -m, -n - 1
            recorded.append(CremonaStep.QTAU)
    if (m, n) == (0, 0):
        recorded.append(CremonaStep.QINF)
        base = BaseTag.FINF
    elif (m, n) == (-1, 0):
        recorded.append(CremonaStep.Q1)
        recorded.append(CremonaStep.QINF)
        base = BaseTag.FINF
    elif (m, n) == (1, 0):
        base = BaseTag.F1
    elif (m, n) == (0, -1):
        recorded.append(CremonaStep.QTAU)
        recorded.append(CremonaStep.QINF)
        base = BaseTag.FINF
    elif (m, n) == (0, 1):
        recorded.append(CremonaStep.QTAU2)
        base = BaseTag.F1
    else:  # pragma: no cover - the loop leaves |m|+|n| <= 1
        raise AssertionError(f"descent loop left unexpected remainder ({m}, {n})")
    return DescentPlan(t, tuple(reversed(recorded)), base)


def base_parameter(base):
    return QTau(1, 0) if base == BaseTag.F1 else INFINITY


def replay_plan(plan):
    """Apply the plan's steps to its base parameter; must reproduce plan.t."""
    value = base_parameter(plan.base)
    for step in plan.steps:
        value = apply_q(step, value)
    return value
