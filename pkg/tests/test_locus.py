"""Geometric construction compiler: hyperbolisms, line intersections, tracing."""
from fractions import Fraction as Q

import pytest

from curvelab.catalog import construction_names, construction_program, curve_point
from curvelab.elim import Deadline, implicitize
from curvelab.errors import ComputationError, DegenerateConstruction, InputError
from curvelab.locus import (
    antihyperbolism,
    compile_construction,
    hyperbolism,
    hyperbolism_program,
    trace_samples,
)
from curvelab.ratfunc import verify_on_curve
from oracles import CONSTRUCTION_IMPLICITS, P, build_point


def test_all_cataloged_constructions_compile():
    for name in construction_names():
        pt = compile_construction(construction_program(name))
        assert pt.parameter
        assert pt.x is not None and pt.y is not None


def test_compile_accepts_source_text():
    src = (
        "param r\n"
        "point O = (0, 0)\n"
        "point P = on_curve(circle(r = r))\n"
        "line axis = vertical(x = r)\n"
        "line OP = line_through(O, P)\n"
        "point Q = intersect(OP, axis)\n"
        "line v = vertical_through(P)\n"
        "line h = horizontal_through(Q)\n"
        "point M = intersect(v, h)\n"
        "locus M\n"
    )
    pt = compile_construction(src)
    ic = implicitize(pt, deadline=Deadline(30))
    assert ic.defining.canonical_text() == CONSTRUCTION_IMPLICITS["kulp"]


def test_hyperbolism_transform_shape():
    from curvelab.ratfunc import SqrtElem

    base = curve_point("circle")
    pt = hyperbolism(base, "r")
    # (x, y) -> (x, c*y/x) with c = r
    assert pt.x == base.x
    assert pt.y * base.x == base.y * SqrtElem.var("r")
    ic = implicitize(pt, deadline=Deadline(30))
    assert ic.defining.canonical_text() == CONSTRUCTION_IMPLICITS["kulp"]


def test_antihyperbolism_inverts_hyperbolism():
    base = curve_point("circle")
    round_trip = antihyperbolism(hyperbolism(base, "5/3"), "5/3")
    assert round_trip.x == base.x
    assert round_trip.y == base.y


def test_hyperbolism_binds_line_abscissa():
    base = curve_point("circle", {"r": 1})
    pt = hyperbolism(base, "r", {"r": 1})
    samples = trace_samples(pt, n=64)
    assert samples


def test_hyperbolism_program_text_round_trips():
    src = hyperbolism_program("circle", "b", anti=True)
    pt = compile_construction(src, {"r": 1})
    # antihyperbolism of a unit circle about x = b is the figure-eight
    ic = implicitize(pt, deadline=Deadline(30))
    assert ic.defining.canonical_text() == "x^4 + b^2*y^2 - x^2"


def test_degenerate_antihyperbolism_rejected():
    base = curve_point("circle")
    with pytest.raises((DegenerateConstruction, ComputationError, InputError)):
        pt = antihyperbolism(base, "0")
        implicitize(pt, deadline=Deadline(10))


def test_parallel_lines_degenerate():
    src = (
        "param r\n"
        "point P = on_curve(circle(r = r))\n"
        "line a = vertical(x = 1)\n"
        "line b = vertical(x = 2)\n"
        "point M = intersect(a, b)\n"
        "locus M\n"
    )
    with pytest.raises(DegenerateConstruction):
        compile_construction(src)


def test_unknown_curve_in_program():
    src = "param a\npoint P = on_curve(parachute(r = a))\nlocus P\n"
    with pytest.raises(InputError):
        compile_construction(src)


def test_trace_samples_on_locus():
    pt = build_point("gerono", {"a": 2, "b": 1})
    samples = trace_samples(pt, n=128)
    F = P("x^4 - 4*x^2 + y^2")
    for _, x, y in samples:
        assert abs(x**4 - 4 * x**2 + y**2) < 1e-8


def test_trace_samples_skips_exclusions():
    pt = build_point("kulp", {"r": 1})
    samples = trace_samples(pt, lo=-2, hi=2, n=201)
    ts = [t for t, _, _ in samples]
    assert 1.0 not in ts and -1.0 not in ts


def test_trace_samples_requires_bound_parameters():
    pt = build_point("gerono")
    with pytest.raises(InputError):
        trace_samples(pt)


def test_trace_samples_guard_drops_blowups():
    pt = build_point("kulp", {"r": 1})
    samples = trace_samples(pt, lo=0.9, hi=1.1, n=100, guard=10.0)
    for _, x, y in samples:
        assert abs(x) <= 10.0 and abs(y) <= 10.0


def test_trace_samples_empty_range_raises():
    pt = build_point("kulp", {"r": 1})
    with pytest.raises(ComputationError):
        trace_samples(pt, lo=1.0 - 1e-12, hi=1.0 + 1e-12, n=3, guard=1e-9)


def test_locus_matches_trace_for_every_construction():
    # numeric cross-check of the implicit equation against traced points
    for name, text in CONSTRUCTION_IMPLICITS.items():
        if name == "nephroid_hyperbolism":
            continue  # degree 12: float residuals blow up near poles; exact check elsewhere
        pt = build_point(name)
        defaults = {p: Q(1) for p in sorted(pt.parameters())}
        bound = pt.bind(defaults)
        F = P(text).substitute(defaults)
        samples = trace_samples(bound, lo=-3, hi=3, n=64)
        for _, x, y in samples:
            val = F.evaluate({"x": Q(x), "y": Q(y)})
            assert abs(float(val)) < 1e-5, name
