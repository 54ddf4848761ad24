"""Rational functions, quadratic-radical coordinates, parametric points."""
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from curvelab.errors import ComputationError
from curvelab.exprio import parse_expression
from curvelab.poly import MultiPoly, poly_gcd
from curvelab.ratfunc import (
    ExclusionRecord,
    ParametricPoint,
    RatFunc,
    SqrtElem,
    UnsupportedFunctionError,
    clear_to_system,
    desquare,
    exclusions_from_denominator,
    verify_on_curve,
    weierstrass_substitute,
)
from oracles import P, build_point


# -- RatFunc reduction invariant ----------------------------------------------

def test_reduction_cancels_common_factor():
    r = RatFunc(P("2*x^2 - 2"), P("4*x + 4"))
    assert r.num.exact_text() == "(x - 1)/2"
    assert r.den == MultiPoly.const(1)


def test_reduction_den_positive_primitive():
    r = RatFunc(P("x"), P("-2*x^2 - 2"))
    assert r.den.leading()[1] > 0
    g = poly_gcd(r.num, r.den)
    assert g.is_constant()


def test_zero_denominator_rejected():
    with pytest.raises(Exception):
        RatFunc(P("x"), MultiPoly.zero())


@settings(max_examples=40, deadline=None)
@given(
    st.fractions(min_value=-6, max_value=6, max_denominator=4),
    st.fractions(min_value=-6, max_value=6, max_denominator=4),
)
def test_field_identities(a, b):
    u = RatFunc.var("u")
    f = (u + a) / (u * u + 1)
    g = (u - b) / (u + RatFunc.const(7))
    assert f + g - g == f
    assert (f * g) / g == f if not g.is_zero() else True
    assert f - f == RatFunc.const(0)


def test_derivative_quotient_rule():
    d = RatFunc(P("u^2"), P("1 + u")).derivative("u")
    assert d == RatFunc(P("u^2 + 2*u"), P("u^2 + 2*u + 1"))


def test_evaluate_exact_and_float():
    r = RatFunc(P("u + 1"), P("u - 1"))
    assert r.evaluate({"u": Q(3)}) == Q(2)
    assert r.evaluate_float({"u": 3.0}) == pytest.approx(2.0)


# -- Weierstrass substitution ---------------------------------------------------

def test_weierstrass_cos():
    w = weierstrass_substitute(parse_expression("cos(t)"), "t", "u")
    assert w == RatFunc(P("1 - u^2"), P("1 + u^2"))


def test_weierstrass_sin():
    w = weierstrass_substitute(parse_expression("sin(t)"), "t", "u")
    assert w == RatFunc(P("2*u"), P("1 + u^2"))


def test_weierstrass_pythagorean_identity():
    w = weierstrass_substitute(parse_expression("sin(t)^2 + cos(t)^2 - 1"), "t", "u")
    assert w.is_zero()


@settings(max_examples=30, deadline=None)
@given(st.integers(-4, 4), st.integers(-4, 4))
def test_weierstrass_identity_with_coefficients(a, b):
    text = f"({a})*sin(t)^2 + ({a})*cos(t)^2 + ({b})"
    w = weierstrass_substitute(parse_expression(text), "t", "u")
    assert w == RatFunc.const(Q(a + b))


def test_weierstrass_rejects_unknown_function():
    with pytest.raises(UnsupportedFunctionError):
        weierstrass_substitute(parse_expression("sqrt(t)"), "t", "u")
    with pytest.raises(UnsupportedFunctionError):
        # the angle variable may only appear inside cos/sin/tan
        weierstrass_substitute(parse_expression("t + cos(t)"), "t", "u")


# -- SqrtElem -------------------------------------------------------------------

def test_sqrt_square_recovers_radicand():
    g = SqrtElem.var("a") * SqrtElem.var("a") - SqrtElem.const(4)
    s = SqrtElem.sqrt_of(g)
    assert not s.is_rational()
    assert (s * s) == g


def test_sqrt_of_symbolic_square_stays_radical_but_squares_back():
    s = SqrtElem.sqrt_of(SqrtElem.var("a") * SqrtElem.var("a"))
    assert not s.is_rational()  # no symbolic perfect-square detection
    sq = s * s
    assert sq.is_rational()
    assert sq.rational().text() == "a^2"


def test_sqrtelem_conjugate_norm():
    a = SqrtElem.var("x") + SqrtElem.sqrt_of(SqrtElem.var("g"))
    n = a * a.conjugate()
    assert n.is_rational()
    assert n.rational() == RatFunc(P("x^2 - g"), P("1"))


def test_sqrtelem_mixed_radicals_rejected():
    s1 = SqrtElem.sqrt_of(SqrtElem.var("a"))
    s2 = SqrtElem.sqrt_of(SqrtElem.var("b"))
    with pytest.raises(Exception):
        s1 + s2


def test_sqrtelem_substitute():
    s = SqrtElem.sqrt_of(SqrtElem.var("a"))
    out = s.substitute({"a": Q(9)})
    # the radical form is kept symbolically; numeric evaluation resolves it
    assert not out.is_rational()
    assert out.evaluate_float({}) == pytest.approx(3.0)
    assert (out * out).rational() == RatFunc.const(9)


# -- exclusions -------------------------------------------------------------------

def test_exclusions_from_denominator_records_rational_roots():
    rec = ExclusionRecord()
    exclusions_from_denominator(P("u^2 - 1"), "u", rec)
    assert set(rec.values) == {Q(-1), Q(1)}


def test_exclusions_no_real_roots_noted_empty():
    rec = ExclusionRecord()
    exclusions_from_denominator(P("u^2 + 1"), "u", rec)
    assert rec.values == []


def test_exclusion_record_merge_and_describe():
    a = ExclusionRecord()
    a.add_value(Q(1))
    b = ExclusionRecord()
    b.add_value(Q(2))
    b.add_note("parallel lines")
    m = a.merged(b)
    assert set(m.values) == {Q(1), Q(2)}
    assert any("parallel" in d for d in m.describe())


# -- parametric points ---------------------------------------------------------

def test_point_parameters_and_bind():
    pt = build_point("gerono")
    assert pt.parameters() == {"a", "b"}
    bound = pt.bind({"a": 2, "b": 1})
    assert bound.parameters() == set()
    xy = bound.evaluate_float(0.5)
    assert xy is not None


def test_point_evaluate_float_skips_excluded():
    pt = build_point("kulp", {"r": 1})
    assert Q(1) in pt.exclusions.values or Q(-1) in pt.exclusions.values
    assert pt.evaluate_float(1.0) is None


def test_verify_on_curve_exact():
    pt = build_point("kulp")
    assert verify_on_curve(P("r^2*x^2 + x^2*y^2 - r^4"), pt)
    assert not verify_on_curve(P("x^2 + y^2 - r^2"), pt)


def test_verify_on_curve_radical_coordinates():
    pt = build_point("piriform_hyperbolism")
    assert verify_on_curve(P("a^2*x^2 - a^3*x + b^2*y^2"), pt)


# -- desquaring and clearing ------------------------------------------------------

def test_desquare_frozen():
    out = desquare("x - a/2 = sqrt(a^2 - 4*b^2*t^2)/2")
    assert out.canonical_text() == "4*b^2*t^2 + 4*x^2 - 4*a*x"


def test_desquare_requires_radical():
    with pytest.raises(Exception):
        desquare("x = t + 1")


def test_clear_to_system_rational_coordinates():
    pt = build_point("kulp")
    p1, p2 = clear_to_system(pt)
    # each cleared relation vanishes identically along the parametrization
    xr, yr = pt.x.rational(), pt.y.rational()
    for p in (p1, p2):
        out = p.substitute_ratio("x", xr.num, xr.den).substitute_ratio(
            "y", yr.num, yr.den
        )
        assert out.is_zero()


def test_clear_to_system_shared_radical_couples_branches():
    # x = sqrt(1 - t^2), y = t*sqrt(1 - t^2): both coordinates ride one radical
    g = SqrtElem.const(1) - SqrtElem.var("t") * SqrtElem.var("t")
    root = SqrtElem.sqrt_of(g)
    pt = ParametricPoint(
        x=root, y=SqrtElem.var("t") * root, parameter="t", exclusions=ExclusionRecord()
    )
    p1, p2 = clear_to_system(pt)
    # squaring x alone gives x^2 = 1 - t^2; the second relation is the
    # radical-free branch coupling t*x - y = 0, not a second squared equation
    assert p1.canonical_text() == "x^2 + t^2 - 1"
    assert p2.canonical_text() == "t*x - y"


def test_clear_to_system_rejects_distinct_radicals():
    x = SqrtElem.sqrt_of(SqrtElem.var("t"))
    y = SqrtElem.sqrt_of(SqrtElem.var("t") + SqrtElem.const(1))
    pt = ParametricPoint(x=x, y=y, parameter="t", exclusions=ExclusionRecord())
    with pytest.raises(ComputationError):
        clear_to_system(pt)
