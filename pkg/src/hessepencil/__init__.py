"""Exact symbolic toolkit for the elliptic pencils obtained from the dual
Hesse arrangement by quadratic Cremona descent.
"""

from .params import (
    BaseTag,
    CremonaStep,
    DescentPlan,
    EisensteinParam,
    INFINITY,
    Symmetry,
    apply_q,
    apply_symmetry,
    norm,
    plan_descent,
    replay_plan,
)
from .pencil import (
    PencilData,
    check_data_invariants,
    darboux_pencil_degree,
    data_for,
    data_symmetry_trivolution,
    data_trace,
    transform_data,
)
from .poly import (
    HomPoly,
    OneForm,
    ProjPoint,
    cube_root,
    exact_div,
    in_span,
    multiplicity_at,
    normalized,
    partial,
    poly_mul,
    pullback,
    wedge_vanishes,
)
from .qtau import QTau, TAU, TAU2
from .geometry import (
    arrangement,
    lins_neto_form,
    point_triple_action,
    quad_map,
    verify_arrangement_invariance,
)
from .realize import (
    DegreeCapExceeded,
    PencilGenerators,
    RealizationResult,
    base_generators,
    foliation_oneform,
    realize,
    special_members,
    strict_transform_pencil,
    verify_lins_neto,
    verify_multiplicities,
)

__all__ = [name for name in dir() if not name.startswith("_")]
