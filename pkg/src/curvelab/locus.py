"""Geometric constructions over exact coordinates.

Turns point/line programs and the two axis transformations (hyperbolism and
antihyperbolism) into exact ParametricPoint objects whose coordinates live in
a quadratic extension of the rational functions of the moving parameter.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import catalog
from .errors import ComputationError, DegenerateConstruction, InputError
from .exprio import ConstructionProgram, SemanticError, eval_ast, parse_construction
from .poly import MultiPoly, Q
from .ratfunc import (
    ExclusionRecord,
    ParametricPoint,
    RatFunc,
    SqrtElem,
    exclusions_from_denominator,
)


@dataclass
class GeomLine:
    """Line alpha*x + beta*y + gamma = 0 with coefficients in the coordinate
    domain."""

    alpha: SqrtElem
    beta: SqrtElem
    gamma: SqrtElem

    @classmethod
    def vertical(cls, c: SqrtElem):
        one = SqrtElem.const(1)
        return cls(one, SqrtElem.const(0), -c)

    @classmethod
    def horizontal(cls, c: SqrtElem):
        one = SqrtElem.const(1)
        return cls(SqrtElem.const(0), one, -c)

    @classmethod
    def through(cls, p1, p2):
        (x1, y1), (x2, y2) = p1, p2
        return cls(y1 - y2, x2 - x1, x1 * y2 - x2 * y1)


def _is_identically_zero(v: SqrtElem) -> bool:
    return v.e.is_zero() and v.s.is_zero()


def intersect_lines(l1: GeomLine, l2: GeomLine, exclusions: ExclusionRecord, var=None, what="intersection"):
    """Intersection point of two lines; an identically singular system is a
    degenerate construction, isolated singular parameter values are excluded."""
    det = l1.alpha * l2.beta - l2.alpha * l1.beta
    if _is_identically_zero(det):
        raise DegenerateConstruction(f"the lines defining the {what} are parallel for every parameter value")
    if var is not None:
        _exclude_zeros_of(det, var, exclusions)
    x = (l1.beta * l2.gamma - l2.beta * l1.gamma) / det
    y = (l2.alpha * l1.gamma - l1.alpha * l2.gamma) / det
    return (x, y)


def _exclude_zeros_of(det: SqrtElem, var, exclusions: ExclusionRecord):
    """Record parameter values where det vanishes.  For sqrt-free values the
    zeros are the numerator's roots; otherwise zeros are contained in the
    zeros of the norm e^2 - s^2*g."""
    if det.is_rational():
        num = det.e.num
    else:
        norm = det.e * det.e - det.s * det.s * RatFunc(det.g)
        num = norm.num
    if num.is_constant():
        return
    exclusions_from_denominator(num, var, exclusions)


def _domain_eval(ast, names, bound):
    def var_fn(name):
        if name in bound:
            return SqrtElem.const(bound[name])
        if name in names:
            return SqrtElem(RatFunc.var(name))
        raise SemanticError(f"expression references undefined name '{name}'")

    def call_fn(fname, value):
        if fname == "sqrt":
            return SqrtElem.sqrt_of(value)
        raise SemanticError(f"'{fname}' is not allowed in construction expressions")

    return eval_ast(ast, var_fn, call_fn, SqrtElem.const)


def _as_poly_value(v: SqrtElem, context):
    """Coerce a domain value to a rational or polynomial for substitution."""
    if not v.is_rational():
        raise SemanticError(f"{context} must not contain square roots")
    if not v.e.is_poly():
        raise SemanticError(f"{context} must be polynomial in the construction parameters")
    p = v.e.num
    return p.constant_value() if p.is_constant() else p


def compile_construction(program, bindings=None) -> ParametricPoint:
    """Run a construction program and return the exact moving locus point.

    bindings map program parameters to rationals; unbound parameters stay
    symbolic.  The program must contain exactly one on_curve point (the
    mover); its curve parameter becomes the locus parameter.
    """
    if isinstance(program, str):
        program = parse_construction(program)
    bound = {}
    for k, v in (bindings or {}).items():
        if k not in program.params:
            raise InputError(f"construction has no parameter '{k}'")
        bound[k] = Q(v) if not isinstance(v, float) else Q(v).limit_denominator(10**9)

    params = set(program.params)
    points: dict = {}
    lines: dict = {}
    exclusions = ExclusionRecord()
    mover_var = None

    for step in program.steps:
        if step.kind == "param":
            continue
        if step.kind == "point":
            body = step.body
            if body[0] == "coords":
                x = _domain_eval(body[1], params, bound)
                y = _domain_eval(body[2], params, bound)
                points[step.name] = (x, y)
            elif body[0] == "on_curve":
                curve_name, curve_bindings = body[1]
                doc = catalog.curve_document(curve_name)
                base = catalog.curve_point(curve_name)
                if base.parameter in params:
                    raise SemanticError(
                        f"curve parameter '{base.parameter}' collides with a construction parameter"
                    )
                subst = {}
                for pname, pexpr in curve_bindings.items():
                    if pname not in {p.name for p in doc.params}:
                        raise InputError(f"curve '{curve_name}' has no parameter '{pname}'")
                    subst[pname] = _as_poly_value(
                        _domain_eval(pexpr, params, bound), f"binding for '{pname}'"
                    )
                x = base.x.substitute(subst) if subst else base.x
                y = base.y.substitute(subst) if subst else base.y
                points[step.name] = (x, y)
                mover_var = base.parameter
            else:  # intersect
                pt = intersect_lines(
                    lines[body[1]], lines[body[2]], exclusions, mover_var, f"point '{step.name}'"
                )
                points[step.name] = pt
        elif step.kind == "line":
            body = step.body
            kind = body[0]
            if kind == "vertical":
                lines[step.name] = GeomLine.vertical(_domain_eval(body[1], params, bound))
            elif kind == "horizontal":
                lines[step.name] = GeomLine.horizontal(_domain_eval(body[1], params, bound))
            elif kind == "line_through":
                p1, p2 = points[body[1]], points[body[2]]
                ln = GeomLine.through(p1, p2)
                if _is_identically_zero(ln.alpha) and _is_identically_zero(ln.beta):
                    raise DegenerateConstruction(
                        f"line '{step.name}' passes through two identical points"
                    )
                lines[step.name] = ln
            elif kind == "vertical_through":
                lines[step.name] = GeomLine.vertical(points[body[1]][0])
            else:  # horizontal_through
                lines[step.name] = GeomLine.horizontal(points[body[1]][1])
        elif step.kind == "locus":
            if mover_var is None:
                raise DegenerateConstruction("locus point does not move: no on_curve point in the program")
            x, y = points[step.name]
            out = ParametricPoint(x, y, mover_var, exclusions)
            return out
    raise SemanticError("program ended without a locus statement")


def _resolve_base(curve, bindings) -> ParametricPoint:
    if isinstance(curve, ParametricPoint):
        if bindings:
            return curve.bind(bindings)
        return curve
    return catalog.curve_point(curve, bindings)


def _resolve_abscissa(c, bindings=None) -> RatFunc:
    if isinstance(c, RatFunc):
        out = c
    elif isinstance(c, float):
        out = RatFunc.const(Q(c).limit_denominator(10**9))
    elif isinstance(c, str):
        try:
            out = RatFunc.const(Q(c))
        except (ValueError, ZeroDivisionError):
            if c.isidentifier():
                out = RatFunc.var(c)
            else:
                raise InputError(
                    f"line abscissa must be a rational or a parameter name, got {c!r}"
                ) from None
    else:
        out = RatFunc.const(Q(c))
    if bindings:
        hit = {k: Q(v) if not isinstance(v, (Q, MultiPoly)) else v
               for k, v in bindings.items() if k in out.variables()}
        if hit:
            out = out.substitute(hit)
    return out


def hyperbolism(curve, line_x, bindings=None) -> ParametricPoint:
    """Transform (x, y) -> (x, c*y/x) applied to a curve point, where c is the
    abscissa of a fixed vertical line.

    `curve` is a catalog name or a ParametricPoint; `line_x` is a rational,
    a parameter name, or a RatFunc.
    """
    base = _resolve_base(curve, bindings)
    c = SqrtElem(_resolve_abscissa(line_x, bindings))
    if _is_identically_zero(base.x):
        raise DegenerateConstruction(
            "hyperbolism is undefined for a curve contained in the vertical axis"
        )
    y_new = c * base.y / base.x
    out = ParametricPoint(base.x, y_new, base.parameter, base.exclusions.merged(ExclusionRecord()))
    return out


def antihyperbolism(curve, line_x, bindings=None) -> ParametricPoint:
    """Inverse transform (x, y) -> (x, x*y/c); undoes hyperbolism with the
    same line."""
    base = _resolve_base(curve, bindings)
    c = SqrtElem(_resolve_abscissa(line_x, bindings))
    if _is_identically_zero(c):
        raise DegenerateConstruction("antihyperbolism needs a vertical line off the y-axis")
    y_new = base.x * base.y / c
    return ParametricPoint(base.x, y_new, base.parameter, base.exclusions.merged(ExclusionRecord()))


def hyperbolism_program(curve_name, line_expr="c", anti=False) -> str:
    """Construction-program source for the hyperbolism (or antihyperbolism) of
    a catalog curve with respect to the vertical line x = line_expr."""
    doc = catalog.curve_document(curve_name)
    args = ", ".join(f"{p.name} = {p.name}" for p in doc.params)
    params = [p.name for p in doc.params]
    lines = [f"param {p}" for p in params]
    if line_expr not in params and not _looks_numeric(line_expr):
        lines.append(f"param {line_expr}")
    lines += [
        "point O = (0, 0)",
        f"point P = on_curve({curve_name}({args}))",
        f"line axis = vertical(x = {line_expr})",
    ]
    if not anti:
        lines += [
            "line OP = line_through(O, P)",
            "point Q = intersect(OP, axis)",
            "line v = vertical_through(P)",
            "line h = horizontal_through(Q)",
            "point M = intersect(v, h)",
        ]
    else:
        lines += [
            "line h = horizontal_through(P)",
            "point Q = intersect(h, axis)",
            "line OQ = line_through(O, Q)",
            "line v = vertical_through(P)",
            "point M = intersect(v, OQ)",
        ]
    lines.append("locus M")
    return "\n".join(lines) + "\n"


def _looks_numeric(text):
    try:
        Q(text)
        return True
    except (ValueError, ZeroDivisionError):
        return False


def trace_samples(point: ParametricPoint, lo=-8.0, hi=8.0, n=512, guard=1e6):
    """Float samples (t, x, y) of the parametrized point, skipping excluded
    parameter values, square roots of negative radicands, and runaway
    branches beyond the guard radius."""
    if n < 2 or hi <= lo:
        raise InputError("sample range must satisfy lo < hi and n >= 2")
    excluded = set()
    for v in point.exclusions.values:
        excluded.add(float(v))
    free = point.parameters()
    if free:
        raise InputError(
            "cannot sample a point with unbound parameters: " + ", ".join(sorted(free))
        )
    out = []
    step = (hi - lo) / (n - 1)
    for i in range(n):
        t = lo + i * step
        if any(abs(t - e) < 1e-12 for e in excluded):
            continue
        try:
            x = point.x.evaluate_float({point.parameter: t})
            y = point.y.evaluate_float({point.parameter: t})
        except ZeroDivisionError:
            continue
        if x is None or y is None:
            continue
        if abs(x) > guard or abs(y) > guard:
            continue
        out.append((t, x, y))
    if not out:
        raise ComputationError("no finite samples in the requested parameter range")
    return out
