"""Serialization of polynomials and catalog records: canonical JSON terms,
human-readable text, LaTeX, and Singular scripts for external cross-checks.
"""

from __future__ import annotations

from fractions import Fraction

from .params import BaseTag, CremonaStep
from .poly import HomPoly
from .qtau import QTau


def _frac_str(x):
    return f"{x.numerator}/{x.denominator}"


def _frac_parse(s):
    return Fraction(s)


def poly_to_json(f):
    """Canonical JSON object for a polynomial.

    Terms are records [i, j, k, a, b] for the coefficient a + b*tau, sorted
    in descending graded-lex order; the degree is stored redundantly so a
    parsed record can be validated on its own.
    """
    return {
        "degree": f.degree,
        "terms": [
            [m[0], m[1], m[2], _frac_str(c.a), _frac_str(c.b)]
            for m, c in f.sorted_terms()
        ],
    }


def poly_from_json(obj):
    terms = {}
    for i, j, k, a, b in obj["terms"]:
        terms[(i, j, k)] = QTau(_frac_parse(a), _frac_parse(b))
    return HomPoly(obj["degree"], terms)


def _monomial_text(mono, sep="*", power="^"):
    parts = []
    for name, e in zip("xyz", mono):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}{power}{e}")
    return sep.join(parts)


def poly_to_text(f, tau_symbol="t"):
    """Readable rendering with tau spelled as `tau_symbol`, graded-lex order."""
    if f.is_zero():
        return "0"
    chunks = []
    for mono, coeff in f.sorted_terms():
        mono_txt = _monomial_text(mono)
        coeff_txt = coeff.render(tau_symbol)
        if not mono_txt:
            term = f"({coeff_txt})" if ("+" in coeff_txt[1:] or "-" in coeff_txt[1:]) else coeff_txt
        elif coeff_txt == "1":
            term = mono_txt
        elif coeff_txt == "-1":
            term = f"-{mono_txt}"
        elif "+" in coeff_txt[1:] or "-" in coeff_txt[1:] or tau_symbol in coeff_txt:
            term = f"({coeff_txt})*{mono_txt}"
        else:
            term = f"{coeff_txt}*{mono_txt}"
        if chunks and not term.startswith("-"):
            chunks.append("+" + term)
        else:
            chunks.append(term)
    return "".join(chunks)


def _latex_frac(x):
    if x.denominator == 1:
        return str(x.numerator)
    sign = "-" if x < 0 else ""
    return f"{sign}\\frac{{{abs(x.numerator)}}}{{{x.denominator}}}"


def _latex_coeff(c):
    if c.b == 0:
        return _latex_frac(c.a)
    if c.a == 0:
        if c.b == 1:
            return "\\tau"
        if c.b == -1:
            return "-\\tau"
        return f"{_latex_frac(c.b)}\\tau"
    b_part = "\\tau" if c.b == 1 else ("-\\tau" if c.b == -1 else f"{_latex_frac(c.b)}\\tau")
    joiner = "" if b_part.startswith("-") else "+"
    return f"{_latex_frac(c.a)}{joiner}{b_part}"


def poly_to_latex(f):
    """LaTeX rendering, graded-lex term order, tau as \\tau."""
    if f.is_zero():
        return "0"
    chunks = []
    for mono, coeff in f.sorted_terms():
        mono_txt = _monomial_text(mono, sep=" ", power="^")
        mono_txt = mono_txt.replace("^10", "^{10}")  # only 2-digit exponents need braces
        for e in range(10, f.degree + 1):
            mono_txt = mono_txt.replace(f"^{e}", f"^{{{e}}}")
        coeff_txt = _latex_coeff(coeff)
        if not mono_txt:
            term = coeff_txt
        elif coeff_txt == "1":
            term = mono_txt
        elif coeff_txt == "-1":
            term = f"-{mono_txt}"
        elif "+" in coeff_txt[1:] or "-" in coeff_txt[1:]:
            term = f"({coeff_txt}) {mono_txt}"
        else:
            term = f"{coeff_txt} {mono_txt}"
        if chunks and not term.startswith("-"):
            chunks.append(" + " + term)
        elif chunks:
            chunks.append(" " + term)
        else:
            chunks.append(term)
    return "".join(chunks)


# -- Singular emission ------------------------------------------------------------

SINGULAR_MAP_NAMES = {
    CremonaStep.QINF: "Qinf",
    CremonaStep.Q1: "Q1",
    CremonaStep.QTAU: "Qt",
    CremonaStep.QTAU2: "Qt2",
}

_SINGULAR_PREAMBLE = [
    "ring R=(0,a),(x,y,z),dp;",
    "minpoly=a2+a+1;",
]

_SINGULAR_MAPS = [
    "map Qinf = R, y*z, x*z,  x*y;",
    "map Q1 = R, y^2- x*z, x^2- y*z, z^2- x*y;",
    "map Qt = R, a*y^2- x*z, a*x^2- y*z, z^2- a^2 *x*y;",
    "map Qt2 = R, a^2*y^2- x*z, a^2 *x^2- y*z, z^2- a*x*y;",
]

_BASE_POLYS = {
    BaseTag.FINF: ("y^3-x^3", "y^3-z^3"),
    BaseTag.F1: ("(y-x)*(z-x)*(y-z)", "(y-a*x)*(z-a^2*x)*(z-a*y)"),
}


def singular_script(plan):
    """A Singular session reproducing the plan's composition chain.

    The ring and map preamble match the published listing convention (tau is
    the ring parameter `a`); the final factorize calls expose the strict
    transform's factors for independent cross-validation.
    """
    f_txt, g_txt = _BASE_POLYS[plan.base]
    lines = list(_SINGULAR_PREAMBLE)
    lines.append(f"poly f = {f_txt};")
    lines.append(f"poly g = {g_txt};")
    lines.extend(_SINGULAR_MAPS)
    if plan.steps:
        lines.append(f"map Cr= {SINGULAR_MAP_NAMES[plan.steps[0]]};")
        for step in plan.steps[1:]:
            lines.append(f"Cr={SINGULAR_MAP_NAMES[step]}(Cr);")
        lines.append("poly Crf=Cr(f);")
        lines.append("poly Crg=Cr(g);")
    else:
        lines.append("poly Crf=f;")
        lines.append("poly Crg=g;")
    lines.append("factorize(Crf);")
    lines.append("factorize(Crg);")
    return "\n".join(lines) + "\n"
