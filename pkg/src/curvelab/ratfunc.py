"""Rational functions, a single-sqrt quadratic extension, and parametric points.

RatFunc is a reduced fraction of MultiPoly: gcd(numer, denom) = 1 and the
denominator is primitive with positive leading coefficient (rational scale
lives in the numerator).  SqrtElem is e + s*sqrt(g) with e, s rational
functions over a shared radicand polynomial g; it exists so the piriform
branch x = a/2 + sqrt(a^2 - 4 b^2 t^2)/2 can be carried exactly and removed
again by squaring.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import ComputationError, InputError
from .exprio import parse_expression
from .poly import MultiPoly, ONE, Q, poly_gcd

X = MultiPoly.var("x")
Y = MultiPoly.var("y")


class UnsupportedFunctionError(InputError):
    code = "unsupported-function"


class MultipleSqrtError(InputError):
    code = "multiple-sqrt"


def poly_lcm(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    if p.is_zero() or q.is_zero():
        return MultiPoly()
    g = poly_gcd(p, q)
    return (p * q).exact_divide(g).normalized()


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, MultiPoly):
            num = MultiPoly.const(num)
        if den is None:
            den = ONE
        elif not isinstance(den, MultiPoly):
            den = MultiPoly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = MultiPoly(), ONE
            return
        if den == ONE:
            self.num, self.den = num, den
            return
        if den.is_constant():
            c = den.constant_value()
            self.num, self.den = num * MultiPoly.const(1 / c), ONE
            return
        g = poly_gcd(num, den)
        if not g == ONE:
            num = num.exact_divide(g)
            den = den.exact_divide(g)
        # canonical denominator: primitive, positive leading coefficient
        c = den.rat_content()
        _, lead = den.leading()
        if lead < 0:
            c = -c
        if c != 1:
            den = den * MultiPoly.const(1 / c)
            num = num * MultiPoly.const(1 / c)
        self.num, self.den = num, den

    @classmethod
    def var(cls, name):
        return cls(MultiPoly.var(name))

    @classmethod
    def const(cls, c):
        return cls(MultiPoly.const(c))

    def is_zero(self):
        return self.num.is_zero()

    def is_poly(self):
        return self.den == ONE

    def variables(self):
        return self.num.variables() | self.den.variables()

    def __add__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        r = RatFunc.__new__(RatFunc)
        r.num, r.den = -self.num, self.den
        return r

    def __sub__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n):
        if not isinstance(n, int):
            raise ValueError("rational function powers must be integers")
        if n < 0:
            return RatFunc(self.den, self.num) ** (-n)
        return RatFunc(self.num**n, self.den**n)

    def __eq__(self, other):
        other = _as_ratfunc(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def substitute(self, mapping) -> "RatFunc":
        return RatFunc(self.num.substitute(mapping), self.den.substitute(mapping))

    def derivative(self, var) -> "RatFunc":
        return RatFunc(
            self.num.derivative(var) * self.den - self.num * self.den.derivative(var),
            self.den * self.den,
        )

    def evaluate(self, assignment) -> Q:
        d = self.den.evaluate(assignment)
        if not d:
            raise ZeroDivisionError("denominator vanishes at the given point")
        return self.num.evaluate(assignment) / d

    def evaluate_float(self, assignment) -> float:
        num = den = 0.0
        for m, c in self.num.terms.items():
            v = float(c)
            for name, e in m:
                v *= assignment[name] ** e
            num += v
        for m, c in self.den.terms.items():
            v = float(c)
            for name, e in m:
                v *= assignment[name] ** e
            den += v
        return num / den

    def text(self) -> str:
        if self.den == ONE:
            return self.num.exact_text()
        return f"({self.num.exact_text()})/({self.den.exact_text()})"

    def __repr__(self):
        return f"RatFunc({self.text()})"


def _as_ratfunc(v):
    if isinstance(v, RatFunc):
        return v
    if isinstance(v, (int, Q, MultiPoly)):
        return RatFunc(v if isinstance(v, MultiPoly) else MultiPoly.const(v))
    return None


RF_ZERO = RatFunc(MultiPoly())
RF_ONE = RatFunc(ONE)


class SqrtElem:
    """Element e + s*sqrt(g) of a quadratic extension of the rational
    functions; g is a fixed polynomial radicand (None for sqrt-free values)."""

    __slots__ = ("e", "s", "g")

    def __init__(self, e, s=None, g=None):
        e = _as_ratfunc(e) or e
        s = _as_ratfunc(s if s is not None else 0)
        if not isinstance(e, RatFunc) or not isinstance(s, RatFunc):
            raise TypeError("SqrtElem components must be rational functions")
        if s.is_zero():
            g = None
        elif g is None:
            raise ValueError("sqrt part without a radicand")
        self.e, self.s, self.g = e, s, g

    @classmethod
    def var(cls, name):
        return cls(RatFunc.var(name))

    @classmethod
    def const(cls, c):
        return cls(RatFunc.const(c))

    def variables(self):
        names = self.e.variables() | self.s.variables()
        if self.g is not None:
            names |= self.g.variables()
        return names

    @classmethod
    def sqrt_of(cls, v: "SqrtElem") -> "SqrtElem":
        if not v.is_rational():
            raise MultipleSqrtError("nested square roots are not supported")
        r = v.e
        if r.is_zero():
            return cls(RF_ZERO)
        # sqrt(n/d) = sqrt(n*d)/d keeps the radicand polynomial; scale the
        # radicand by a square so its coefficients are integers
        g = r.num * r.den
        L = 1
        for c in g.terms.values():
            L = L * c.denominator // math.gcd(L, c.denominator)
        return cls(RF_ZERO, RatFunc(ONE, r.den) * Q(1, L), g * (L * L))

    def is_rational(self):
        return self.g is None

    def rational(self) -> RatFunc:
        if not self.is_rational():
            raise MultipleSqrtError("value still carries a square root")
        return self.e

    def is_zero(self):
        return self.e.is_zero() and self.s.is_zero()

    def _common_g(self, other):
        if self.g is None:
            return other.g
        if other.g is None or other.g == self.g:
            return self.g
        raise MultipleSqrtError("cannot mix two different square roots")

    def __add__(self, other):
        other = _as_sqrtelem(other)
        if other is None:
            return NotImplemented
        g = self._common_g(other)
        s = self.s + other.s
        return SqrtElem(self.e + other.e, s, g if not s.is_zero() else None)

    __radd__ = __add__

    def __neg__(self):
        return SqrtElem(-self.e, -self.s, self.g)

    def __sub__(self, other):
        other = _as_sqrtelem(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_sqrtelem(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_sqrtelem(other)
        if other is None:
            return NotImplemented
        g = self._common_g(other)
        if g is None:
            return SqrtElem(self.e * other.e)
        e = self.e * other.e + self.s * other.s * RatFunc(g)
        s = self.e * other.s + self.s * other.e
        return SqrtElem(e, s, g if not s.is_zero() else None)

    __rmul__ = __mul__

    def conjugate(self):
        return SqrtElem(self.e, -self.s, self.g)

    def norm(self) -> RatFunc:
        # (e + s sqrt g)(e - s sqrt g) = e^2 - s^2 g
        if self.g is None:
            return self.e * self.e
        return self.e * self.e - self.s * self.s * RatFunc(self.g)

    def __truediv__(self, other):
        other = _as_sqrtelem(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero")
        if other.g is None:
            return SqrtElem(self.e / other.e, self.s / other.e, self.g)
        n = other.norm()
        if n.is_zero():
            raise ZeroDivisionError("division by a zero divisor (radicand is a perfect square)")
        return self * other.conjugate() * SqrtElem(RF_ONE / n)

    def __rtruediv__(self, other):
        other = _as_sqrtelem(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("SqrtElem powers must be nonnegative integers")
        out = SqrtElem(RF_ONE)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = _as_sqrtelem(other)
        if other is None:
            return NotImplemented
        if self.s.is_zero() and other.s.is_zero():
            return self.e == other.e
        return self.e == other.e and self.s == other.s and self.g == other.g

    def substitute(self, mapping) -> "SqrtElem":
        g = self.g.substitute(mapping) if self.g is not None else None
        s = self.s.substitute(mapping)
        return SqrtElem(self.e.substitute(mapping), s, g if not s.is_zero() else None)

    def evaluate_float(self, assignment):
        """Float value, or None where the radicand is negative."""
        v = self.e.evaluate_float(assignment)
        if self.g is None:
            return v
        rad = 0.0
        for m, c in self.g.terms.items():
            t = float(c)
            for name, e in m:
                t *= assignment[name] ** e
            rad += t
        if rad < 0:
            return None
        return v + self.s.evaluate_float(assignment) * math.sqrt(rad)

    def text(self) -> str:
        if self.g is None:
            return self.e.text()
        return f"{self.e.text()} + ({self.s.text()})*sqrt({self.g.exact_text()})"

    def __repr__(self):
        return f"SqrtElem({self.text()})"


def _as_sqrtelem(v):
    if isinstance(v, SqrtElem):
        return v
    r = _as_ratfunc(v)
    return SqrtElem(r) if r is not None else None


@dataclass
class ExclusionRecord:
    values: list = field(default_factory=list)  # exact rationals of the mover parameter
    polys: list = field(default_factory=list)  # parameter polynomials whose roots are excluded
    notes: list = field(default_factory=list)

    def add_value(self, v: Q):
        if v not in self.values:
            self.values.append(v)
            self.values.sort()

    def add_poly(self, p: MultiPoly):
        if not any(p == q for q in self.polys):
            self.polys.append(p)

    def add_note(self, note: str):
        if note not in self.notes:
            self.notes.append(note)

    def merged(self, other: "ExclusionRecord") -> "ExclusionRecord":
        out = ExclusionRecord(list(self.values), list(self.polys), list(self.notes))
        for v in other.values:
            out.add_value(v)
        for p in other.polys:
            out.add_poly(p)
        for n in other.notes:
            out.add_note(n)
        return out

    def describe(self) -> list:
        out = [f"u = {v}" for v in self.values]
        out += [f"roots of {p.canonical_text()}" for p in self.polys]
        out += list(self.notes)
        return out


def _rational_roots_of(p: MultiPoly, var) -> list:
    """Rational roots of p in var when its coefficients are plain rationals;
    returns [] when coefficients involve other symbols."""
    coeffs = p.coeffs_in(var)
    if any(not c.is_constant() for c in coeffs.values()):
        return []
    deg = max(coeffs) if coeffs else 0
    if deg == 0:
        return []
    vals = {e: c.constant_value() for e, c in coeffs.items()}
    L = 1
    for c in vals.values():
        L = L * c.denominator // math.gcd(L, c.denominator)
    ints = {e: int(c * L) for e, c in vals.items()}
    roots = []
    low = min(ints)
    if low > 0:  # x^low factors out
        roots.append(Q(0))
        ints = {e - low: c for e, c in ints.items()}
    lead = ints[max(ints)]
    tail = ints.get(0, 0)
    if tail == 0:
        return sorted(set(roots))
    for pn in _divisors(abs(tail)):
        for qn in _divisors(abs(lead)):
            for cand in (Q(pn, qn), Q(-pn, qn)):
                val = sum(c * cand**e for e, c in ints.items())
                if val == 0:
                    roots.append(cand)
    return sorted(set(roots))


def _divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def exclusions_from_denominator(den: MultiPoly, var, record: ExclusionRecord):
    """Record real rational roots of den (in var) as excluded values; if the
    root structure depends on other parameters, record the polynomial."""
    from .poly import content_primitive

    if den.degree_in(var) == 0:
        return
    _, prim = content_primitive(den, {var})
    roots = _rational_roots_of(prim, var)
    for r in roots:
        record.add_value(r)
    if any(not c.is_constant() for c in prim.coeffs_in(var).values()):
        record.add_poly(prim)


@dataclass
class ParametricPoint:
    """A point (x(u), y(u)) with coordinates in the sqrt extension."""

    x: SqrtElem
    y: SqrtElem
    parameter: str
    exclusions: ExclusionRecord = field(default_factory=ExclusionRecord)

    def __post_init__(self):
        if isinstance(self.x, RatFunc):
            self.x = SqrtElem(self.x)
        if isinstance(self.y, RatFunc):
            self.y = SqrtElem(self.y)
        for coord in (self.x, self.y):
            for den in (coord.e.den, coord.s.den):
                exclusions_from_denominator(den, self.parameter, self.exclusions)

    def is_rational(self):
        return self.x.is_rational() and self.y.is_rational()

    def parameters(self) -> set:
        names = set()
        for coord in (self.x, self.y):
            names |= coord.e.variables() | coord.s.variables()
            if coord.g is not None:
                names |= coord.g.variables()
        names.discard(self.parameter)
        return names

    def bind(self, bindings) -> "ParametricPoint":
        clean = {k: Q(v) if not isinstance(v, (Q, MultiPoly)) else v for k, v in bindings.items()}
        return ParametricPoint(
            self.x.substitute(clean),
            self.y.substitute(clean),
            self.parameter,
            ExclusionRecord(list(self.exclusions.values), [], list(self.exclusions.notes)),
        )

    def evaluate_float(self, u: float, bindings=None) -> tuple | None:
        env = {self.parameter: u}
        if bindings:
            env.update({k: float(v) for k, v in bindings.items()})
        try:
            fx = self.x.evaluate_float(env)
            fy = self.y.evaluate_float(env)
        except ZeroDivisionError:
            return None
        if fx is None or fy is None:
            return None
        return (fx, fy)


# -- trig -> rational substitution --------------------------------------------

def weierstrass_substitute(ast, trig_var, new_var) -> RatFunc:
    """Apply the tangent half-angle substitution to a trig expression.

    cos t -> (1-u^2)/(1+u^2), sin t -> 2u/(1+u^2), tan t -> 2u/(1-u^2);
    the only allowed function calls are cos/sin/tan applied to trig_var.
    """
    if isinstance(ast, str):
        ast = parse_expression(ast)
    u = MultiPoly.var(new_var)
    images = {
        "cos": RatFunc(1 - u**2, 1 + u**2),
        "sin": RatFunc(2 * u, 1 + u**2),
        "tan": RatFunc(2 * u, 1 - u**2),
    }

    def go(node):
        k = node[0]
        if k == "num":
            return RatFunc.const(node[1])
        if k == "var":
            if node[1] == trig_var:
                raise UnsupportedFunctionError(
                    f"'{trig_var}' may only appear inside cos/sin/tan"
                )
            return RatFunc.var(node[1])
        if k == "neg":
            return -go(node[1])
        if k == "add":
            return go(node[1]) + go(node[2])
        if k == "sub":
            return go(node[1]) - go(node[2])
        if k == "mul":
            return go(node[1]) * go(node[2])
        if k == "div":
            return go(node[1]) / go(node[2])
        if k == "pow":
            return go(node[1]) ** node[2]
        if k == "call":
            fname, arg = node[1], node[2]
            if fname not in images:
                raise UnsupportedFunctionError(f"unsupported function '{fname}'")
            if arg != ("var", trig_var):
                raise UnsupportedFunctionError(
                    f"{fname}(...) must be applied to '{trig_var}' directly"
                )
            return images[fname]
        raise ValueError(f"unknown AST node {k!r}")

    return go(ast)


# -- clearing to polynomial systems -------------------------------------------

def _coord_clear(coord: SqrtElem, target: MultiPoly) -> MultiPoly:
    """Polynomial vanishing when target equals the coordinate.

    Sqrt-free: target*den - num.  With a sqrt part: square it away,
    (target - e)^2 - s^2 g over a cleared common denominator.
    """
    if coord.is_rational():
        r = coord.e
        p = target * r.den - r.num
        return _int_clear(p)
    a = SqrtElem(RatFunc(target)) - coord  # A + B sqrt(g) = 0
    return _squared_clear(a.e, a.s, a.g)


def _int_clear(p: MultiPoly) -> MultiPoly:
    """Scale by the lcm of coefficient denominators (value-preserving shape,
    integer coefficients; no content stripped)."""
    L = 1
    for c in p.terms.values():
        L = L * c.denominator // math.gcd(L, c.denominator)
    return p * L if L > 1 else p


def _squared_clear(A: RatFunc, B: RatFunc, g: MultiPoly) -> MultiPoly:
    """Clear A + B*sqrt(g) = 0 to a polynomial: isolate and square the radical
    AFTER scaling A, B to a common integer-coefficient form, so the squared
    shape (and its content) is preserved rather than pre-reduced."""
    d = poly_lcm(A.den, B.den)
    an = A.num * d.exact_divide(A.den)
    bn = B.num * d.exact_divide(B.den)
    L = 1
    for c in list(an.terms.values()) + list(bn.terms.values()):
        L = L * c.denominator // math.gcd(L, c.denominator)
    an = an * L
    bn = bn * L
    return an * an - bn * bn * g


def clear_to_system(point: ParametricPoint) -> tuple:
    """Return (p1, p2): polynomials in {x, y, parameter, symbols} whose common
    zeros (projected) contain the traced curve; p_i = coord_var*den - num for
    rational coordinates, squared form for sqrt coordinates.

    When both coordinates involve the radical, squaring each one separately
    would also admit points mixing the two branches; instead p2 becomes the
    radical-free cross relation s_y*(x - e_x) - s_x*(y - e_y) = 0, which holds
    exactly when both coordinates take the same branch."""
    if not point.x.is_rational() and not point.y.is_rational():
        if point.x.g != point.y.g:
            raise ComputationError(
                "coordinates involve different radicals; cannot clear to a system"
            )
        p1 = _coord_clear(point.x, X)
        cross = point.y.s * (RatFunc(X) - point.x.e) - point.x.s * (RatFunc(Y) - point.y.e)
        if cross.is_zero():
            raise ComputationError(
                "coordinates are proportional along the radical; locus is degenerate"
            )
        return (p1, _int_clear(cross.num))
    return (_coord_clear(point.x, X), _coord_clear(point.y, Y))


def desquare(equation) -> MultiPoly:
    """Square away the single sqrt in `lhs = rhs` and clear denominators.

    Accepts "x - a/2 = sqrt(a^2 - 4*b^2*t^2)/2" or a pair of ASTs; the result
    is (lhs - rhs) with the radical isolated and squared, scaled to integer
    coefficients (content kept).
    """
    if isinstance(equation, str):
        if "=" not in equation:
            raise InputError("equation must contain '='")
        lhs_text, rhs_text = equation.split("=", 1)
        lhs, rhs = parse_expression(lhs_text), parse_expression(rhs_text)
    else:
        lhs, rhs = equation
    val = _eval_sqrt_domain(lhs) - _eval_sqrt_domain(rhs)
    if val.is_rational():
        raise InputError("no sqrt found in equation; nothing to desquare")
    return _squared_clear(val.e, val.s, val.g)


def _eval_sqrt_domain(ast) -> SqrtElem:
    from .exprio import eval_ast

    def call(fname, value):
        if fname != "sqrt":
            raise UnsupportedFunctionError(f"unsupported function '{fname}' (only sqrt here)")
        return SqrtElem.sqrt_of(value)

    return eval_ast(ast, var_fn=SqrtElem.var, call_fn=call, const_fn=SqrtElem.const)


# -- exact verification --------------------------------------------------------

def verify_on_curve(F: MultiPoly, point: ParametricPoint) -> bool:
    """Exact identity check: F(x(u), y(u)) == 0 in the coordinate field."""
    xs = [SqrtElem.const(1)]
    for _ in range(F.degree_in("x")):
        xs.append(xs[-1] * point.x)
    ys = [SqrtElem.const(1)]
    for _ in range(F.degree_in("y")):
        ys.append(ys[-1] * point.y)
    acc = SqrtElem.const(0)
    for m, c in F.terms.items():
        rest = MultiPoly.const(c)
        ex = ey = 0
        for v, e in m:
            if v == "x":
                ex = e
            elif v == "y":
                ey = e
            else:
                rest = rest * MultiPoly.var(v, e)
        acc = acc + xs[ex] * ys[ey] * SqrtElem(RatFunc(rest))
    return acc.is_zero()
