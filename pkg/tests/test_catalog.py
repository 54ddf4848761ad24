"""Bundled curve and construction fixtures."""
from fractions import Fraction as Q

import pytest

from curvelab.catalog import (
    UnknownConstructionError,
    UnknownCurveError,
    catalog_verify_all,
    construction_names,
    construction_program,
    construction_source,
    curve_document,
    curve_implicit,
    curve_names,
    curve_point,
    default_bindings,
)
from curvelab.ratfunc import verify_on_curve
from oracles import P


def test_curve_names_frozen():
    assert curve_names() == [
        "circle",
        "circle_origin",
        "ellipse",
        "nephroid",
        "parabola",
        "piriform_lower",
        "piriform_upper",
    ]


def test_construction_names_frozen():
    assert construction_names() == [
        "agnesi_cubic",
        "ellipse_hyperbolism",
        "gerono",
        "kulp",
        "nephroid_hyperbolism",
        "piriform_antihyperbolism",
        "piriform_hyperbolism",
        "secant_quartic",
    ]


def test_unknown_names_rejected():
    with pytest.raises(UnknownCurveError):
        curve_document("klein_bottle")
    with pytest.raises(UnknownConstructionError):
        construction_source("klein_bottle")


def test_curve_document_fields():
    doc = curve_document("circle")
    assert [p.name for p in doc.params] == ["r"]
    assert doc.rational_param is not None
    assert doc.rational_param["var"]
    j = doc.to_json()
    assert j["name"] == "circle"


def test_construction_program_parses_and_caches():
    p1 = construction_program("gerono")
    p2 = construction_program("gerono")
    assert p1 is p2
    assert sorted(p1.params) == ["a", "b"]
    assert p1.locus_name


def test_every_curve_point_lies_on_its_implicit():
    # the catalog's own cross-check: parametrization versus implicit equation
    report = catalog_verify_all()
    assert report
    assert all(report.values()), report


def test_curve_point_symbolic_and_bound():
    pt = curve_point("circle")
    assert pt.parameters() == {"r"}
    assert verify_on_curve(P("x^2 + y^2 - r^2"), pt)
    bound = curve_point("circle", {"r": Q(2)})
    assert bound.parameters() == set()
    assert verify_on_curve(P("x^2 + y^2 - 4"), bound)


def test_curve_point_radical_coordinates():
    pt = curve_point("piriform_upper")
    assert not pt.y.is_rational()
    assert verify_on_curve(P("b^2*y^2 - x^3*(a - x)"), pt)


def test_curve_implicit_binding():
    F = curve_implicit("circle", {"r": 3})
    assert F == P("x^2 + y^2 - 9")


def test_binding_validation():
    with pytest.raises(Exception):
        curve_point("circle", {"r": "zebra"})
    with pytest.raises(Exception):
        curve_point("circle", {"nothere": 1})


def test_default_bindings_within_declared_ranges():
    for name in curve_names():
        doc = curve_document(name)
        defaults = default_bindings(name)
        for spec in doc.params:
            assert spec.min <= defaults[spec.name] <= spec.max
