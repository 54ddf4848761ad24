"""Shared helpers and frozen expected values for the test suite.

Expected equation strings were computed once with this package, cross-checked
by independent elimination paths (Groebner and resultant), and frozen here so
regressions surface as text diffs.
"""
from fractions import Fraction as Q

from curvelab.catalog import construction_program
from curvelab.exprio import parse_polynomial
from curvelab.locus import compile_construction
from curvelab.poly import MultiPoly, content_primitive


def P(text: str) -> MultiPoly:
    return parse_polynomial(text)


def xy_primitive(p: MultiPoly) -> MultiPoly:
    """The {x,y}-primitive part, scaled to integer coefficients with a
    positive leading coefficient."""
    _, prim = content_primitive(p, {"x", "y"})
    return prim.normalized()


def same_curve(a: MultiPoly, b: MultiPoly) -> bool:
    """Equal {x,y}-primitive parts up to a positive rational scalar."""
    return xy_primitive(a) == xy_primitive(b)


def build_point(name: str, bindings: dict | None = None):
    return compile_construction(construction_program(name), bindings or {})


# Canonical texts of the implicit equation of every cataloged construction,
# with symbolic parameters.
CONSTRUCTION_IMPLICITS = {
    "agnesi_cubic": "b^2*x + x*y^2 - a*b^2",
    "ellipse_hyperbolism": "b^2*x^2 + x^2*y^2 - a^2*b^2",
    "gerono": "x^4 - a^2*x^2 + b^2*y^2",
    "kulp": "r^2*x^2 + x^2*y^2 - r^4",
    "nephroid_hyperbolism": (
        "4*b^6*x^6 + 12*b^4*x^6*y^2 + 12*b^2*x^6*y^4 + 4*x^6*y^6"
        " - 12*a^2*b^6*x^4 - 24*a^2*b^4*x^4*y^2 - 12*a^2*b^2*x^4*y^4"
        " - 15*a^4*b^6*x^2 + 12*a^4*b^4*x^2*y^2 - 4*a^6*b^6"
    ),
    "piriform_antihyperbolism": "x^4 - a*x^3 + b^2*y^2",
    "piriform_hyperbolism": "a^2*x^2 - a^3*x + b^2*y^2",
    "secant_quartic": "d^2*x^2 + x^2*y^2 - d^2*r^2",
}

# The same equations as printed in the source material that the catalog
# fixtures transcribe (scalar-content variants kept as printed).
PUBLISHED_FORMS = dict(
    CONSTRUCTION_IMPLICITS,
    gerono="a^2*x^4 - a^4*x^2 + a^2*b^2*y^2",
)

Q1 = Q(1)
