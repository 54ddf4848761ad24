"""Sparse multivariate polynomials over exact rationals.

A monomial is a tuple of (variable, exponent) pairs, sorted by variable name,
with all exponents positive.  A polynomial maps monomials to nonzero
`fractions.Fraction` coefficients.  All arithmetic is exact.

Term order (used for leading terms, exact division, and canonical printing) is
graded lexicographic with a fixed significance ranking of variable names:
``x`` first, then every other name alphabetically, then ``y``, ``t``, ``u``
last.  Inside a printed term the variables appear alphabetically.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import MissingVariableError

Q = Fraction

Mono = tuple  # tuple[tuple[str, int], ...]

_EMPTY: Mono = ()


def _sig_rank(name: str):
    # significance for term ordering; lower sorts as "more significant"
    if name == "x":
        return (0, "")
    if name == "y":
        return (2, "")
    if name == "t":
        return (3, "")
    if name == "u":
        return (4, "")
    return (1, name)


def sorted_vars(names):
    return sorted(names, key=_sig_rank)


def mono_mul(m1: Mono, m2: Mono) -> Mono:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def mono_div(m1: Mono, m2: Mono):
    """m1 / m2, or None if not divisible."""
    d = dict(m1)
    for v, e in m2:
        r = d.get(v, 0) - e
        if r < 0:
            return None
        if r == 0:
            del d[v]
        else:
            d[v] = r
    return tuple(sorted(d.items()))


def mono_degree(m: Mono) -> int:
    return sum(e for _, e in m)


def _ratgcd(a: Q, b: Q) -> Q:
    # gcd(p/q, r/s) = gcd(p, r) / lcm(q, s); always nonnegative
    num = math.gcd(a.numerator, b.numerator)
    den = a.denominator * b.denominator // math.gcd(a.denominator, b.denominator)
    return Q(num, den)


class MultiPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if not isinstance(c, Q):
                    c = Q(c)
                if c:
                    clean[m] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def const(cls, c):
        c = Q(c)
        return cls({_EMPTY: c}) if c else cls()

    @classmethod
    def var(cls, name, exp=1):
        if exp < 0:
            raise ValueError("monomial exponents must be nonnegative")
        if exp == 0:
            return cls({(): Q(1)})
        return cls({((name, exp),): Q(1)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and _EMPTY in self.terms)

    def constant_value(self) -> Q:
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self.terms.get(_EMPTY, Q(0))

    def variables(self) -> set:
        out = set()
        for m in self.terms:
            for v, _ in m:
                out.add(v)
        return out

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(mono_degree(m) for m in self.terms)

    def degree_in(self, var) -> int:
        d = 0
        for m in self.terms:
            for v, e in m:
                if v == var and e > d:
                    d = e
        return d

    def degree_in_set(self, varset) -> int:
        """Total degree counting only exponents of variables in varset."""
        if not self.terms:
            return 0
        return max(sum(e for v, e in m if v in varset) for m in self.terms)

    def term_count(self) -> int:
        return len(self.terms)

    # -- ordering ----------------------------------------------------------

    def _order_key(self, varlist):
        def key(m):
            d = dict(m)
            return (mono_degree(m), tuple(d.get(v, 0) for v in varlist))

        return key

    def sorted_terms(self):
        """Terms in canonical descending order as (mono, coeff) pairs."""
        varlist = sorted_vars(self.variables())
        key = self._order_key(varlist)
        return [(m, self.terms[m]) for m in sorted(self.terms, key=key, reverse=True)]

    def leading(self):
        """Leading (mono, coeff) under the canonical order."""
        if not self.terms:
            return _EMPTY, Q(0)
        varlist = sorted_vars(self.variables())
        m = max(self.terms, key=self._order_key(varlist))
        return m, self.terms[m]

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Q)):
            return MultiPoly.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, Q(0)) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        r = MultiPoly.__new__(MultiPoly)
        r.terms = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = MultiPoly.__new__(MultiPoly)
        r.terms = {m: -c for m, c in self.terms.items()}
        return r

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.terms or not other.terms:
            return MultiPoly()
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, Q(0)) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        r = MultiPoly.__new__(MultiPoly)
        r.terms = out
        return r

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- substitution and evaluation ----------------------------------------

    def evaluate(self, assignment) -> Q:
        """Evaluate with every variable bound to a rational.

        Raises MissingVariableError naming the first unbound variable.
        """
        total = Q(0)
        for m, c in self.terms.items():
            v_ = c
            for v, e in m:
                if v not in assignment:
                    raise MissingVariableError(v)
                v_ = v_ * Q(assignment[v]) ** e
            total += v_
        return total

    def substitute(self, mapping) -> "MultiPoly":
        """Substitute variables by rationals or polynomials; others stay."""
        out = MultiPoly()
        for m, c in self.terms.items():
            term = MultiPoly.const(c)
            for v, e in m:
                if v in mapping:
                    val = mapping[v]
                    rep = val if isinstance(val, MultiPoly) else MultiPoly.const(val)
                    term = term * rep**e
                else:
                    term = term * MultiPoly.var(v, e)
            out = out + term
        return out

    def substitute_ratio(self, var, num: "MultiPoly", den: "MultiPoly") -> "MultiPoly":
        """Substitute var -> num/den and clear denominators.

        Returns den^d * self(var -> num/den) where d = degree_in(var), which is
        again a polynomial.
        """
        d = self.degree_in(var)
        out = MultiPoly()
        for m, c in self.terms.items():
            rest = MultiPoly.const(c)
            e_var = 0
            for v, e in m:
                if v == var:
                    e_var = e
                else:
                    rest = rest * MultiPoly.var(v, e)
            out = out + rest * num**e_var * den ** (d - e_var)
        return out

    def derivative(self, var) -> "MultiPoly":
        out = {}
        for m, c in self.terms.items():
            d = dict(m)
            e = d.get(var, 0)
            if not e:
                continue
            if e == 1:
                del d[var]
            else:
                d[var] = e - 1
            key = tuple(sorted(d.items()))
            out[key] = out.get(key, Q(0)) + c * e
        return MultiPoly(out)

    # -- univariate views ----------------------------------------------------

    def coeffs_in(self, var) -> dict:
        """View as univariate in var: exponent -> coefficient polynomial."""
        out = {}
        for m, c in self.terms.items():
            e_var = 0
            rest = []
            for v, e in m:
                if v == var:
                    e_var = e
                else:
                    rest.append((v, e))
            key = tuple(rest)
            bucket = out.setdefault(e_var, {})
            bucket[key] = bucket.get(key, Q(0)) + c
        return {e: MultiPoly(d) for e, d in out.items() if any(d.values())}

    def coeff_in(self, var, exp) -> "MultiPoly":
        return self.coeffs_in(var).get(exp, MultiPoly())

    # -- content, primitive parts, division ----------------------------------

    def rat_content(self) -> Q:
        """Positive rational gcd of all coefficients (0 for the zero poly)."""
        c = Q(0)
        for v_ in self.terms.values():
            c = _ratgcd(c, v_)
        return c

    def normalized(self) -> "MultiPoly":
        """Primitive associate with positive leading coefficient."""
        if not self.terms:
            return self
        c = self.rat_content()
        _, lead = self.leading()
        if lead < 0:
            c = -c
        r = MultiPoly.__new__(MultiPoly)
        r.terms = {m: v / c for m, v in self.terms.items()}
        return r

    def try_divide(self, d: "MultiPoly"):
        """Exact quotient self / d, or None if division is not exact."""
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return MultiPoly()
        varlist = sorted_vars(self.variables() | d.variables())
        key = self._order_key(varlist)
        dm = max(d.terms, key=key)
        dc = d.terms[dm]
        rem = dict(self.terms)
        quo = {}
        while rem:
            m = max(rem, key=key)
            qm = mono_div(m, dm)
            if qm is None:
                return None
            qc = rem[m] / dc
            quo[qm] = qc
            for m2, c2 in d.terms.items():
                mm = mono_mul(qm, m2)
                s = rem.get(mm, Q(0)) - qc * c2
                if s:
                    rem[mm] = s
                else:
                    rem.pop(mm, None)
        return MultiPoly(quo)

    def exact_divide(self, d: "MultiPoly") -> "MultiPoly":
        q = self.try_divide(d)
        if q is None:
            raise ArithmeticError("division expected to be exact but was not")
        return q

    # -- rendering -----------------------------------------------------------

    def canonical_text(self) -> str:
        """Canonical text form.

        Denominators are cleared so every printed coefficient is an integer
        (the polynomial is scaled by the positive lcm of denominators).  Terms
        appear in graded-lex descending order, `^` marks powers, every product
        has an explicit `*`.  For integer-coefficient input this is a faithful
        rendering: parsing it back reproduces the polynomial exactly.
        """
        if not self.terms:
            return "0"
        den_lcm = 1
        for c in self.terms.values():
            den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
        parts = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            n = (c * den_lcm).numerator
            mag = abs(n)
            factors = []
            if mag != 1 or not m:
                factors.append(str(mag))
            for v, e in sorted(m):  # alphabetical inside a term
                factors.append(v if e == 1 else f"{v}^{e}")
            body = "*".join(factors)
            if i == 0:
                parts.append(body if n > 0 else "-" + body)
            else:
                parts.append((" + " if n > 0 else " - ") + body)
        return "".join(parts)

    def exact_text(self) -> str:
        """Value-preserving text: canonical_text plus an explicit /lcm suffix
        when denominators had to be cleared; used in provenance logs."""
        if not self.terms:
            return "0"
        den_lcm = 1
        for c in self.terms.values():
            den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
        text = self.canonical_text()
        if den_lcm > 1:
            text = f"({text})/{den_lcm}" if len(self.terms) > 1 else f"{text}/{den_lcm}"
        return text

    def __str__(self):
        return self.canonical_text()

    def __repr__(self):
        return f"MultiPoly({self.canonical_text()!r})"


ZERO = MultiPoly()
ONE = MultiPoly.const(1)


def poly_const(c) -> MultiPoly:
    return MultiPoly.const(c)


def poly_var(name) -> MultiPoly:
    return MultiPoly.var(name)


# -- gcd machinery -----------------------------------------------------------


def pseudo_rem(f: MultiPoly, g: MultiPoly, var) -> MultiPoly:
    """Pseudo-remainder of f by g in var: rem(lc(g)^(df-dg+1) * f, g)."""
    if g.is_zero():
        raise ZeroDivisionError("pseudo-remainder by zero")
    dg = g.degree_in(var)
    df = f.degree_in(var)
    if f.is_zero() or df < dg:
        return f
    lcg = g.coeff_in(var, dg)
    steps = 0
    r = f
    while not r.is_zero():
        dr = r.degree_in(var)
        if dr < dg:
            break
        lcr = r.coeff_in(var, dr)
        shift = MultiPoly.var(var, dr - dg) if dr > dg else ONE
        r = lcg * r - lcr * shift * g
        steps += 1
    return r * lcg ** (df - dg + 1 - steps)


def _content_in(p: MultiPoly, var) -> MultiPoly:
    """Polynomial content of p w.r.t. var (gcd of its var-coefficients)."""
    cs = list(p.coeffs_in(var).values())
    g = MultiPoly()
    for c in cs:
        g = poly_gcd(g, c)
        if g == ONE:
            break
    return g


def _subresultant_gcd(f: MultiPoly, g: MultiPoly, var) -> MultiPoly:
    """Gcd of two polynomials primitive in var, via the subresultant PRS.

    The beta/psi divisor bookkeeping keeps every division exact while bounding
    coefficient growth (Brown's algorithm); the last nonzero remainder's
    primitive part is the gcd.
    """
    if f.degree_in(var) < g.degree_in(var):
        f, g = g, f
    delta = f.degree_in(var) - g.degree_in(var)
    beta = MultiPoly.const(Q(-1) ** (delta + 1))
    psi = MultiPoly.const(-1)
    while True:
        r = pseudo_rem(f, g, var)
        if r.is_zero():
            pp = g.exact_divide(_content_in(g, var))
            return pp.normalized()
        if r.degree_in(var) == 0:
            return ONE
        r = r.exact_divide(beta)
        lcg = g.coeff_in(var, g.degree_in(var))
        if delta == 0:
            psi_new = psi
        elif delta == 1:
            psi_new = -lcg
        else:
            psi_new = ((-lcg) ** delta).exact_divide(psi ** (delta - 1))
        f, g = g, r
        delta = f.degree_in(var) - g.degree_in(var)
        psi = psi_new
        beta = -lcg * psi**delta if delta else -lcg


def poly_gcd(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Unit-normalized gcd: primitive with positive leading coefficient.

    gcd(p, 0) is the normalized p; the gcd of two nonzero constants is 1.
    """
    if p.is_zero():
        return q.normalized()
    if q.is_zero():
        return p.normalized()
    if p.is_constant() or q.is_constant():
        return ONE
    p = p.normalized()
    q = q.normalized()
    vs = sorted_vars(p.variables() | q.variables())
    if not vs:
        return ONE
    var = vs[0]
    dp, dq = p.degree_in(var), q.degree_in(var)
    if dp == 0:
        return poly_gcd(p, _content_in(q, var))
    if dq == 0:
        return poly_gcd(_content_in(p, var), q)
    cp = _content_in(p, var)
    cq = _content_in(q, var)
    cg = poly_gcd(cp, cq)
    pp = p.exact_divide(cp)
    qq = q.exact_divide(cq)
    g = _subresultant_gcd(pp, qq, var)
    return (cg * g).normalized()


def content_primitive(p: MultiPoly, main_vars) -> tuple:
    """Split p = content * primitive w.r.t. the given main variables.

    The content collects the rational gcd of all coefficients and the
    polynomial gcd of the coefficient polynomials in the remaining variables;
    it is normalized positive.  The primitive part carries the sign.
    """
    if p.is_zero():
        return ONE, p
    main = set(main_vars)
    buckets = {}
    for m, c in p.terms.items():
        mk = tuple((v, e) for v, e in m if v in main)
        rest = tuple((v, e) for v, e in m if v not in main)
        d = buckets.setdefault(mk, {})
        d[rest] = d.get(rest, Q(0)) + c
    coeff_polys = [MultiPoly(d) for d in buckets.values()]
    r = p.rat_content()
    gpoly = MultiPoly()
    for cp in coeff_polys:
        gpoly = poly_gcd(gpoly, cp)
        if gpoly == ONE:
            break
    content = MultiPoly.const(r) * gpoly
    primitive = p.exact_divide(content)
    return content, primitive


def square_free_part(p: MultiPoly) -> MultiPoly:
    """Product of the distinct irreducible factors of p, normalized."""
    if p.is_zero() or p.is_constant():
        return p.normalized() if p.terms else p
    g = p
    for v in sorted_vars(p.variables()):
        g = poly_gcd(g, p.derivative(v))
        if g == ONE:
            return p.normalized()
    return p.exact_divide(g).normalized()
