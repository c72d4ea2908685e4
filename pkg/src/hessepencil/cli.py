"""Command-line surface: descent plans, data lists, symbolic realization,
verification batteries, lattice sweeps, and Singular script emission.

Exit codes: 0 success, 2 usage error, 3 verification failure,
4 degree-cap refusal, 5 I/O error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from datetime import datetime, timezone

from .params import (
    BaseTag,
    EisensteinParam,
    INFINITY,
    plan_descent,
    replay_plan,
)
from .pencil import (
    check_data_invariants,
    data_for,
    data_trace,
)
from .realize import (
    DEFAULT_DEGREE_CAP,
    DegreeCapExceeded,
    realize,
    special_members,
    verify_lins_neto,
    verify_multiplicities,
)
from .serialize import poly_to_json, poly_to_latex, poly_to_text, singular_script

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFICATION = 3
EXIT_DEGREE_CAP = 4
EXIT_IO = 5

#: Degree ceilings for the expensive members of the verification battery.
MULTIPLICITY_CHECK_MAX_DEGREE = 60
FOLIATION_CHECK_MAX_DEGREE = 30

_T_PATTERN = re.compile(
    r"""^
    (?P<a>[+-]?\d+(?=$|[+-]))?      # integer part, must end or be followed by a sign
    (?:(?P<sign>[+-]?)(?P<mag>\d*)t)?   # tau part, tau spelled t
    $""",
    re.VERBOSE,
)


def parse_t(text):
    """Parse 'm+n*t' style input (tau spelled t), or 'inf' for infinity."""
    if text.strip().lower() in ("inf", "infinity", "oo"):
        return INFINITY
    compact = re.sub(r"[\s*]", "", text)
    match = _T_PATTERN.match(compact)
    if not match or (match.group("a") is None and match.group("mag") is None):
        raise ValueError(f"cannot parse parameter {text!r}")
    m = int(match.group("a")) if match.group("a") is not None else 0
    if match.group("mag") is None:
        return EisensteinParam(m, 0)
    mag = int(match.group("mag")) if match.group("mag") else 1
    n = -mag if match.group("sign") == "-" else mag
    return EisensteinParam(m, n)


def _add_t_flags(sub):
    sub.add_argument("-m", type=int, help="coefficient of 1 in t = m + n*tau")
    sub.add_argument("-n", type=int, help="coefficient of tau in t = m + n*tau")
    sub.add_argument("--t", help="parameter as 'm+n*t' (tau spelled t), or 'inf'")


def _param_from_args(parser, args):
    if args.t is not None:
        if args.m is not None or args.n is not None:
            parser.error("give either --t or -m/-n, not both")
        try:
            return parse_t(args.t)
        except ValueError as exc:
            parser.error(str(exc))
    if args.m is None and args.n is None:
        parser.error("a parameter is required: --t or -m/-n")
    return EisensteinParam(args.m or 0, args.n or 0)


def _param_text(t):
    if t is INFINITY:
        return "inf"
    from .qtau import QTau

    return QTau(t.m, t.n).render("t")


def cmd_plan(parser, args):
    t = _param_from_args(parser, args)
    plan = plan_descent(t)
    codes = plan.step_codes()
    if args.format == "json":
        print(json.dumps({"t": _param_text(t), "steps": codes, "base": plan.base.value, "count": len(codes)}))
    else:
        names = [s.name for s in plan.steps]
        print(f"t = {_param_text(t)}")
        print(f"base pencil: {plan.base.value}")
        print(f"steps ({len(codes)}, applied left to right): {codes}")
        print(f"step names: {' '.join(names) if names else '(none)'}")
    return EXIT_OK


def cmd_data(parser, args):
    t = _param_from_args(parser, args)
    plan, trace = data_trace(t)
    if args.format == "json":
        payload = {
            "t": _param_text(t),
            "steps": plan.step_codes(),
            "base": plan.base.value,
            "data": trace[-1].as_list(),
        }
        if args.trace:
            payload["trace"] = [d.as_list() for d in trace[1:]]
        print(json.dumps(payload))
    else:
        print(f"t = {_param_text(t)}  base {plan.base.value}  steps {plan.step_codes()}")
        if args.trace:
            for step, d in zip(plan.steps, trace[1:]):
                print(f"{step.name:>5}: {d.as_list()}")
        print(f"data: {trace[-1].as_list()}")
    return EXIT_OK


def _run_battery(result):
    """Degree-gated verification battery for one realization."""
    report = {"step_degrees_match": all(c.passed for c in result.step_checks)}
    if result.degree <= MULTIPLICITY_CHECK_MAX_DEGREE:
        mult = verify_multiplicities(result.generators, result.data)
        report["multiplicities"] = mult.passed
    if result.degree <= FOLIATION_CHECK_MAX_DEGREE:
        t = result.t
        scalar = t if t is INFINITY else t.to_scalar()
        report["foliation_identity"] = verify_lins_neto(result.generators, scalar)
    return report


def cmd_realize(parser, args):
    t = _param_from_args(parser, args)
    try:
        result = realize(t, degree_cap=args.max_degree)
    except DegreeCapExceeded as exc:
        print(
            f"refused: predicted degree {exc.predicted_degree} exceeds cap {exc.cap}",
            file=sys.stderr,
        )
        return EXIT_DEGREE_CAP
    report = _run_battery(result)
    ok = all(report.values())
    if args.format == "json":
        print(
            json.dumps(
                {
                    "t": _param_text(t),
                    "steps": result.plan.step_codes(),
                    "base": result.plan.base.value,
                    "data": result.data.as_list(),
                    "degree": result.degree,
                    "generators": {
                        "F": poly_to_json(result.generators.F),
                        "G": poly_to_json(result.generators.G),
                    },
                    "verification": report,
                }
            )
        )
    elif args.format == "latex":
        print(f"% t = {_param_text(t)}, data {result.data.as_list()}")
        print(f"F = {poly_to_latex(result.generators.F)}")
        print(f"G = {poly_to_latex(result.generators.G)}")
    else:
        print(f"t = {_param_text(t)}  data {result.data.as_list()}")
        print(f"F = {poly_to_text(result.generators.F)}")
        print(f"G = {poly_to_text(result.generators.G)}")
        print(f"verification: {report}")
    if not ok:
        print("verification failed", file=sys.stderr)
        return EXIT_VERIFICATION
    return EXIT_OK


def cmd_verify(parser, args):
    t = _param_from_args(parser, args)
    level = args.level
    details = {}
    if level == "data":
        plan, data = data_for(t)
        details["invariants"] = check_data_invariants(data).passed
        replayed = replay_plan(plan)
        if t is INFINITY:
            details["replay"] = replayed is INFINITY
        else:
            details["replay"] = replayed == t.to_scalar()
    else:
        try:
            result = realize(t, degree_cap=args.max_degree)
        except DegreeCapExceeded as exc:
            print(
                f"refused: predicted degree {exc.predicted_degree} exceeds cap {exc.cap}",
                file=sys.stderr,
            )
            return EXIT_DEGREE_CAP
        if level == "multiplicities":
            report = verify_multiplicities(result.generators, result.data)
            details["multiplicities"] = report.passed
        elif level == "foliation":
            scalar = t if t is INFINITY else t.to_scalar()
            details["foliation_identity"] = verify_lins_neto(result.generators, scalar)
        elif level == "special":
            members = special_members(result.generators)
            details["three_special_parameters"] = len(members) == 3
            details["residuals_are_cubes"] = all(
                s.residual_cube_root is not None for s in members
            )
    ok = all(details.values())
    print(json.dumps({"t": _param_text(t), "level": level, "checks": details, "passed": ok}))
    return EXIT_OK if ok else EXIT_VERIFICATION


def cmd_sweep(parser, args):
    records = []
    for m in range(args.mmin, args.mmax + 1):
        for n in range(args.nmin, args.nmax + 1):
            t = EisensteinParam(m, n)
            plan, data = data_for(t)
            invariants = check_data_invariants(data).passed and replay_plan(
                plan
            ) == t.to_scalar()
            realized_degree = None
            if args.realize_under is not None and data.d <= args.realize_under:
                result = realize(t, degree_cap=args.realize_under)
                realized_degree = result.degree
            records.append(
                {
                    "m": m,
                    "n": n,
                    "steps": plan.step_codes(),
                    "base": plan.base.value,
                    "data": data.as_list(),
                    "invariants_passed": invariants,
                    "realized_degree": realized_degree,
                    "timestamp": datetime.now(timezone.utc).isoformat(),
                }
            )
    try:
        with open(args.out, "w") as fh:
            for rec in records:
                fh.write(json.dumps(rec) + "\n")
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {len(records)} records to {args.out}")
    return EXIT_OK


def cmd_emit_singular(parser, args):
    t = _param_from_args(parser, args)
    plan = plan_descent(t)
    sys.stdout.write(singular_script(plan))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hessepencil",
        description="Exact toolkit for the elliptic pencils reached by quadratic "
        "Cremona descent from the dual Hesse arrangement.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("plan", help="print the Cremona descent plan for t")
    _add_t_flags(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_plan)

    p = subs.add_parser("data", help="print degree and multiplicities for t")
    _add_t_flags(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--trace", action="store_true", help="print every intermediate data list")
    p.set_defaults(func=cmd_data)

    p = subs.add_parser("realize", help="compute explicit pencil generators for t")
    _add_t_flags(p)
    p.add_argument("--max-degree", type=int, default=DEFAULT_DEGREE_CAP)
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p.set_defaults(func=cmd_realize)

    p = subs.add_parser("verify", help="run one verification battery for t")
    _add_t_flags(p)
    p.add_argument(
        "--level",
        choices=("data", "multiplicities", "foliation", "special"),
        required=True,
    )
    p.add_argument("--max-degree", type=int, default=DEFAULT_DEGREE_CAP)
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("sweep", help="catalog a lattice rectangle as JSON lines")
    p.add_argument("--mmin", type=int, required=True)
    p.add_argument("--mmax", type=int, required=True)
    p.add_argument("--nmin", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument(
        "--realize-under",
        type=int,
        default=None,
        help="also realize generators when the predicted degree is at most this",
    )
    p.set_defaults(func=cmd_sweep)

    p = subs.add_parser("emit-singular", help="emit a Singular cross-check script for t")
    _add_t_flags(p)
    p.set_defaults(func=cmd_emit_singular)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(parser, args)


if __name__ == "__main__":
    sys.exit(main())
