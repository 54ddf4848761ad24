"""Expression and construction-program parsing, plus curve-document JSON.

Expressions use explicit `*` (no juxtaposition), `^` for powers with
nonnegative integer exponents, and the function calls cos/sin/tan/sqrt with
exactly one argument.  Precedence: ^ > unary minus > * / > + -, with ^
right-associative.

Construction programs are line-oriented:

    param a
    param b
    point O = (0, 0)
    point M0 = on_curve(circle(r=a))
    line D = vertical(x=b)
    line H = horizontal_through(M0)
    point P = intersect(D, H)
    line OP = line_through(O, P)
    line V = vertical_through(M0)
    point M = intersect(OP, V)
    locus M

`#` starts a comment.  Every identifier must be defined before use and there
is exactly one `locus` statement, naming a point.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InputError
from .poly import MultiPoly, Q

FUNCTIONS = ("cos", "sin", "tan", "sqrt")


class ParseError(InputError):
    code = "parse-error"


class NonPolynomialError(InputError):
    code = "non-polynomial"


class UnknownIdentifierError(InputError):
    code = "unknown-identifier"


# -- tokenizer ----------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d+)?)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^(),=]))"
)


def tokenize(text):
    """Yield (kind, value, offset) triples; kind in {num, ident, op, end}."""
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            bad_at = len(text) - len(stripped)
            raise ParseError(f"unexpected character {stripped[0]!r}", location=bad_at)
        if m.group("num") is not None:
            out.append(("num", m.group("num"), m.start("num")))
        elif m.group("ident") is not None:
            out.append(("ident", m.group("ident"), m.start("ident")))
        else:
            out.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


# -- expression parser (precedence climbing) ---------------------------------

_BIN_PREC = {"+": 1, "-": 1, "*": 2, "/": 2, "^": 4}


class _ExprParser:
    def __init__(self, tokens, vars=None):
        self.toks = tokens
        self.i = 0
        self.vars = vars  # None accepts any identifier

    def peek(self):
        return self.toks[self.i]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_op(self, op):
        kind, val, off = self.next()
        if kind != "op" or val != op:
            raise ParseError(f"expected '{op}', found {val or 'end of input'!r}", location=off)

    def parse(self, min_prec=1):
        lhs = self.parse_unary()
        while True:
            kind, val, _ = self.peek()
            if kind != "op" or val not in _BIN_PREC or _BIN_PREC[val] < min_prec:
                return lhs
            self.next()
            if val == "^":
                rhs = self.parse(_BIN_PREC[val])  # right-associative
                lhs = ("pow", lhs, self._const_exponent(rhs))
            else:
                rhs = self.parse(_BIN_PREC[val] + 1)
                node = {"+": "add", "-": "sub", "*": "mul", "/": "div"}[val]
                lhs = (node, lhs, rhs)

    def _const_exponent(self, node):
        # exponents must fold to a nonnegative integer literal
        if node[0] == "num" and node[1].denominator == 1:
            return int(node[1])
        if node[0] == "pow":
            return self._const_exponent(node[1]) ** node[2]
        raise ParseError("exponent must be a nonnegative integer literal")

    def parse_unary(self):
        kind, val, off = self.peek()
        if kind == "op" and val == "-":
            self.next()
            return ("neg", self.parse(3))  # binds tighter than * / but looser than ^
        return self.parse_primary()

    def parse_primary(self):
        kind, val, off = self.next()
        if kind == "num":
            return ("num", Q(val))
        if kind == "ident":
            nk, nv, _ = self.peek()
            if nk == "op" and nv == "(":
                if val not in FUNCTIONS:
                    raise ParseError(f"unknown function '{val}'", location=off)
                self.next()
                arg = self.parse()
                self.expect_op(")")
                return ("call", val, arg)
            if self.vars is not None and val not in self.vars:
                raise UnknownIdentifierError(f"unknown identifier '{val}'", location=off)
            return ("var", val)
        if kind == "op" and val == "(":
            inner = self.parse()
            self.expect_op(")")
            return inner
        raise ParseError(f"unexpected {val or 'end of input'!r}", location=off)


def parse_expression(text, vars=None):
    """Parse an expression into an AST of nested tuples.

    Node kinds: ("num", Fraction), ("var", name), ("neg", a), ("add", a, b),
    ("sub", a, b), ("mul", a, b), ("div", a, b), ("pow", a, int),
    ("call", fname, arg).
    """
    if not text or not text.strip():
        raise ParseError("empty expression", location=0)
    p = _ExprParser(tokenize(text), vars)
    ast = p.parse()
    kind, val, off = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected trailing {val!r}", location=off)
    return ast


def ast_variables(ast) -> set:
    k = ast[0]
    if k == "num":
        return set()
    if k == "var":
        return {ast[1]}
    if k == "neg":
        return ast_variables(ast[1])
    if k == "pow":
        return ast_variables(ast[1])
    if k == "call":
        return ast_variables(ast[2])
    return ast_variables(ast[1]) | ast_variables(ast[2])


def ast_to_poly(ast) -> MultiPoly:
    """Expand an AST into a MultiPoly; function calls and division by a
    non-constant raise NonPolynomialError naming the offending node."""
    k = ast[0]
    if k == "num":
        return MultiPoly.const(ast[1])
    if k == "var":
        return MultiPoly.var(ast[1])
    if k == "neg":
        return -ast_to_poly(ast[1])
    if k == "add":
        return ast_to_poly(ast[1]) + ast_to_poly(ast[2])
    if k == "sub":
        return ast_to_poly(ast[1]) - ast_to_poly(ast[2])
    if k == "mul":
        return ast_to_poly(ast[1]) * ast_to_poly(ast[2])
    if k == "pow":
        return ast_to_poly(ast[1]) ** ast[2]
    if k == "div":
        den = ast_to_poly(ast[2])
        if not den.is_constant():
            raise NonPolynomialError("division by a non-constant expression")
        c = den.constant_value()
        if not c:
            raise NonPolynomialError("division by zero")
        return ast_to_poly(ast[1]) * MultiPoly.const(1 / c)
    if k == "call":
        raise NonPolynomialError(f"function call {ast[1]}(...) is not polynomial")
    raise ValueError(f"unknown AST node {k!r}")


def parse_polynomial(text, vars=None) -> MultiPoly:
    return ast_to_poly(parse_expression(text, vars))


def eval_ast(ast, var_fn, call_fn=None, const_fn=None):
    """Fold an AST in an arbitrary domain.

    var_fn(name) and call_fn(fname, value) supply atoms; const_fn(Fraction)
    defaults to identity.  The domain's values must support +, -, *, /, unary
    negation and ** with integer exponents.
    """
    const_fn = const_fn or (lambda q: q)

    def go(node):
        k = node[0]
        if k == "num":
            return const_fn(node[1])
        if k == "var":
            return var_fn(node[1])
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
            if call_fn is None:
                raise NonPolynomialError(f"function {node[1]} not allowed here")
            return call_fn(node[1], go(node[2]))
        raise ValueError(f"unknown AST node {k!r}")

    return go(ast)


# -- construction DSL ---------------------------------------------------------


@dataclass
class Stmt:
    kind: str  # param | point | line | locus
    name: str
    body: object = None  # pexpr/lexpr tuple
    line_no: int = 0


@dataclass
class ConstructionProgram:
    steps: list
    params: list
    locus_name: str
    source: str = ""

    def point_steps(self):
        return [s for s in self.steps if s.kind == "point"]


class SemanticError(InputError):
    code = "semantic-error"


def _dsl_error(msg, line_no, col=None):
    loc = f"line {line_no}" + (f", col {col}" if col is not None else "")
    return ParseError(f"{msg} ({loc})", location=loc)


def _parse_curveref(p: _ExprParser, line_no):
    kind, name, off = p.next()
    if kind != "ident":
        raise _dsl_error("expected curve name", line_no, off)
    p.expect_op("(")
    bindings = {}
    while True:
        kind, pname, off = p.next()
        if kind != "ident":
            raise _dsl_error("expected parameter name in curve reference", line_no, off)
        p.expect_op("=")
        bindings[pname] = p.parse()
        kind, val, off = p.peek()
        if kind == "op" and val == ",":
            p.next()
            continue
        p.expect_op(")")
        return (name, bindings)


def _parse_pexpr(p: _ExprParser, line_no):
    kind, val, off = p.peek()
    if kind == "op" and val == "(":
        p.next()
        x = p.parse()
        p.expect_op(",")
        y = p.parse()
        p.expect_op(")")
        return ("coords", x, y)
    if kind == "ident" and val == "on_curve":
        p.next()
        p.expect_op("(")
        ref = _parse_curveref(p, line_no)
        p.expect_op(")")
        return ("on_curve", ref)
    if kind == "ident" and val == "intersect":
        p.next()
        p.expect_op("(")
        _, l1, o1 = p.next()
        p.expect_op(",")
        _, l2, o2 = p.next()
        p.expect_op(")")
        return ("intersect", l1, l2)
    raise _dsl_error(f"expected point expression, found {val!r}", line_no, off)


def _parse_lexpr(p: _ExprParser, line_no):
    kind, val, off = p.next()
    if kind != "ident":
        raise _dsl_error("expected line expression", line_no, off)
    if val == "vertical" or val == "horizontal":
        p.expect_op("(")
        kind2, axis, off2 = p.next()
        want = "x" if val == "vertical" else "y"
        if kind2 != "ident" or axis != want:
            raise _dsl_error(f"{val}(...) must bind {want}=", line_no, off2)
        p.expect_op("=")
        e = p.parse()
        p.expect_op(")")
        return (val, e)
    if val == "line_through":
        p.expect_op("(")
        _, p1, _ = p.next()
        p.expect_op(",")
        _, p2, _ = p.next()
        p.expect_op(")")
        return ("line_through", p1, p2)
    if val in ("vertical_through", "horizontal_through"):
        p.expect_op("(")
        _, pt, _ = p.next()
        p.expect_op(")")
        return (val, pt)
    raise _dsl_error(f"unknown line constructor '{val}'", line_no, off)


def parse_construction(text) -> ConstructionProgram:
    """Parse and validate a construction program."""
    steps = []
    params = []
    points = set()
    lines = set()
    locus_name = None
    defined = set()

    def check_fresh(name, line_no):
        if name in defined:
            raise SemanticError(f"duplicate definition of '{name}' (line {line_no})")
        defined.add(name)

    for line_no, raw in enumerate(text.splitlines(), start=1):
        src = raw.split("#", 1)[0].strip()
        if not src:
            continue
        if locus_name is not None:
            raise SemanticError(f"statement after locus (line {line_no})")
        toks = tokenize(src)
        p = _ExprParser(toks)
        kind, head, off = p.next()
        if kind != "ident":
            raise _dsl_error("expected statement keyword", line_no, off)
        if head == "param":
            kind, name, off = p.next()
            if kind != "ident":
                raise _dsl_error("expected parameter name", line_no, off)
            check_fresh(name, line_no)
            params.append(name)
            steps.append(Stmt("param", name, line_no=line_no))
        elif head == "point":
            kind, name, off = p.next()
            p.expect_op("=")
            body = _parse_pexpr(p, line_no)
            if body[0] == "intersect":
                for ln in (body[1], body[2]):
                    if ln not in lines:
                        raise SemanticError(f"'{ln}' is not a defined line (line {line_no})")
            if body[0] == "coords":
                for e in (body[1], body[2]):
                    for v in ast_variables(e):
                        if v not in defined:
                            raise SemanticError(f"undefined name '{v}' (line {line_no})")
            check_fresh(name, line_no)
            points.add(name)
            steps.append(Stmt("point", name, body, line_no))
        elif head == "line":
            kind, name, off = p.next()
            p.expect_op("=")
            body = _parse_lexpr(p, line_no)
            if body[0] in ("line_through",):
                for pt in (body[1], body[2]):
                    if pt not in points:
                        raise SemanticError(f"'{pt}' is not a defined point (line {line_no})")
            if body[0] in ("vertical_through", "horizontal_through") and body[1] not in points:
                raise SemanticError(f"'{body[1]}' is not a defined point (line {line_no})")
            if body[0] in ("vertical", "horizontal"):
                for v in ast_variables(body[1]):
                    if v not in defined:
                        raise SemanticError(f"undefined name '{v}' (line {line_no})")
            check_fresh(name, line_no)
            lines.add(name)
            steps.append(Stmt("line", name, body, line_no))
        elif head == "locus":
            kind, name, off = p.next()
            if kind != "ident":
                raise _dsl_error("expected point name after locus", line_no, off)
            if name not in points:
                raise SemanticError(f"locus target '{name}' is not a defined point (line {line_no})")
            locus_name = name
            steps.append(Stmt("locus", name, line_no=line_no))
        else:
            raise _dsl_error(f"unknown statement '{head}'", line_no, off)
        kind, val, off = p.peek()
        if kind != "end":
            raise _dsl_error(f"unexpected trailing {val!r}", line_no, off)

    if locus_name is None:
        raise SemanticError("program has no locus statement")
    movers = [s for s in steps if s.kind == "point" and s.body and s.body[0] == "on_curve"]
    if len(movers) > 1:
        raise SemanticError("program has more than one on_curve point")
    return ConstructionProgram(steps=steps, params=params, locus_name=locus_name, source=text)


# -- curve documents ----------------------------------------------------------


@dataclass
class ParamSpec:
    name: str
    default: Fraction
    min: Fraction
    max: Fraction

    def to_json(self):
        return {
            "name": self.name,
            "default": _num(self.default),
            "min": _num(self.min),
            "max": _num(self.max),
        }


def _num(q: Fraction):
    return int(q) if q.denominator == 1 else float(q)


@dataclass
class CurveDocument:
    name: str
    params: list
    implicit: str | None = None
    trig_param: dict | None = None
    rational_param: dict | None = None
    notes: list = field(default_factory=list)

    def __post_init__(self):
        if not (self.implicit or self.trig_param or self.rational_param):
            raise InputError(f"curve '{self.name}' has no representation")
        for p in self.params:
            if not (p.min <= p.default <= p.max):
                raise InputError(f"default for '{p.name}' outside its declared range")

    def to_json(self):
        doc = {"name": self.name, "params": [p.to_json() for p in self.params]}
        if self.implicit:
            doc["implicit"] = self.implicit
        if self.trig_param:
            doc["trig_param"] = self.trig_param
        if self.rational_param:
            doc["rational_param"] = self.rational_param
        if self.notes:
            doc["notes"] = self.notes
        return doc

    @classmethod
    def from_json(cls, doc):
        params = [
            ParamSpec(
                name=p["name"],
                default=Q(str(p["default"])),
                min=Q(str(p["min"])),
                max=Q(str(p["max"])),
            )
            for p in doc.get("params", [])
        ]
        return cls(
            name=doc["name"],
            params=params,
            implicit=doc.get("implicit"),
            trig_param=doc.get("trig_param"),
            rational_param=doc.get("rational_param"),
            notes=list(doc.get("notes", [])),
        )

    @classmethod
    def from_text(cls, text):
        return cls.from_json(json.loads(text))
