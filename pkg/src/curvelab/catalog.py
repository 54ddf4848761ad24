"""Built-in curve documents and construction programs.

Curves are JSON documents (fixtures/*.json) with an implicit equation and/or
exact parametrizations; constructions are small point/line programs
(fixtures/*.dsl).  This module loads them, binds parameter values, and turns
parametrizations into exact ParametricPoint objects.
"""

from __future__ import annotations

from fractions import Fraction
from importlib import resources

from .errors import InputError
from .exprio import (
    CurveDocument,
    ConstructionProgram,
    eval_ast,
    parse_construction,
    parse_expression,
    parse_polynomial,
)
from .poly import MultiPoly, Q
from .ratfunc import ParametricPoint, RatFunc, SqrtElem, UnsupportedFunctionError


class UnknownCurveError(InputError):
    code = "unknown-curve"


class UnknownConstructionError(InputError):
    code = "unknown-construction"


_CURVE_CACHE: dict = {}
_DSL_CACHE: dict = {}


def _fixtures():
    return resources.files(__package__) / "fixtures"


def curve_names() -> list:
    return sorted(p.name[: -len(".json")] for p in _fixtures().iterdir() if p.name.endswith(".json"))


def construction_names() -> list:
    return sorted(p.name[: -len(".dsl")] for p in _fixtures().iterdir() if p.name.endswith(".dsl"))


def curve_document(name) -> CurveDocument:
    if name not in _CURVE_CACHE:
        path = _fixtures() / f"{name}.json"
        try:
            text = path.read_text()
        except (FileNotFoundError, KeyError):
            raise UnknownCurveError(
                f"unknown curve '{name}'; available: {', '.join(curve_names())}"
            ) from None
        doc = CurveDocument.from_text(text)
        if doc.name != name:
            raise InputError(f"curve document '{name}' declares mismatched name '{doc.name}'")
        _CURVE_CACHE[name] = doc
    return _CURVE_CACHE[name]


def construction_source(name) -> str:
    path = _fixtures() / f"{name}.dsl"
    try:
        return path.read_text()
    except (FileNotFoundError, KeyError):
        raise UnknownConstructionError(
            f"unknown construction '{name}'; available: {', '.join(construction_names())}"
        ) from None


def construction_program(name) -> ConstructionProgram:
    if name not in _DSL_CACHE:
        _DSL_CACHE[name] = parse_construction(construction_source(name))
    return _DSL_CACHE[name]


def _check_bindings(doc: CurveDocument, bindings) -> dict:
    """Validate binding names against the document and coerce values to Q."""
    known = {p.name for p in doc.params}
    out = {}
    for k, v in (bindings or {}).items():
        if k not in known:
            raise InputError(
                f"curve '{doc.name}' has no parameter '{k}'"
                + (f"; expected one of: {', '.join(sorted(known))}" if known else "")
            )
        out[k] = _as_q(v, k)
    return out


def _as_q(v, name) -> Fraction:
    try:
        if isinstance(v, str):
            q = Fraction(v)
        elif isinstance(v, float):
            q = Fraction(v).limit_denominator(10**9)
        else:
            q = Fraction(v)
    except (ValueError, ZeroDivisionError, TypeError):
        raise InputError(f"binding for '{name}' is not a rational number: {v!r}") from None
    return q


def _sqrt_eval(text, bound, free_ok):
    """Evaluate an expression string in the quadratic-extension domain."""
    ast = parse_expression(text)

    def var_fn(name):
        if name in bound:
            return SqrtElem.const(bound[name])
        if name in free_ok:
            return SqrtElem(RatFunc.var(name))
        raise InputError(f"expression references unknown name '{name}'")

    def call_fn(fname, value):
        if fname == "sqrt":
            return SqrtElem.sqrt_of(value)
        raise UnsupportedFunctionError(
            f"'{fname}' is not allowed in an exact parametrization (only sqrt)"
        )

    return eval_ast(ast, var_fn, call_fn, SqrtElem.const)


def curve_point(name, bindings=None) -> ParametricPoint:
    """Exact parametric point of a catalog curve; unbound parameters stay
    symbolic."""
    doc = curve_document(name)
    if not doc.rational_param:
        raise InputError(f"curve '{name}' has no exact parametrization")
    bound = _check_bindings(doc, bindings)
    spec = doc.rational_param
    var = spec["var"]
    free = {p.name for p in doc.params if p.name not in bound} | {var}
    x = _sqrt_eval(spec["x"], bound, free)
    y = _sqrt_eval(spec["y"], bound, free)
    return ParametricPoint(x, y, var)


def curve_implicit(name, bindings=None) -> MultiPoly:
    """Implicit polynomial of a catalog curve with bindings substituted."""
    doc = curve_document(name)
    if not doc.implicit:
        raise InputError(f"curve '{name}' has no implicit equation")
    bound = _check_bindings(doc, bindings)
    p = parse_polynomial(doc.implicit)
    if bound:
        p = p.substitute({k: MultiPoly.const(v) for k, v in bound.items()})
    return p


def default_bindings(name) -> dict:
    doc = curve_document(name)
    return {p.name: p.default for p in doc.params}


def catalog_verify_all() -> dict:
    """Exact self-check: every curve's parametrization satisfies its implicit
    equation.  Returns {curve: bool}."""
    from .ratfunc import verify_on_curve

    out = {}
    for name in curve_names():
        doc = curve_document(name)
        if not (doc.implicit and doc.rational_param):
            out[name] = True
            continue
        F = curve_implicit(name)
        pt = curve_point(name)
        out[name] = verify_on_curve(F, pt)
    return out
