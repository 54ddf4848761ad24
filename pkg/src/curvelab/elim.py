"""Elimination engine: monomial orders, Buchberger, resultants, implicitize.

Polynomials cross into this module as MultiPoly and are worked on internally
as dense exponent tuples over a fixed variable ranking with Fraction
coefficients; bases are kept monic during reduction and re-normalized to
integer-primitive form on the way out.

implicitize() is the end-to-end pipeline: clear a parametric point to a
polynomial system, eliminate the parameter (Sylvester resultant fast path for
two-polynomial systems, block-order Groebner elimination as the general and
verification path), take the {x,y}-primitive square-free part, and verify the
result vanishes on the parametrization exactly.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ComputationError, DeadlineExceeded, TrivialResult
from .poly import MultiPoly, ONE, Q, content_primitive, sorted_vars, square_free_part
from .ratfunc import ParametricPoint, clear_to_system, verify_on_curve


class EliminationFailed(ComputationError):
    code = "elimination-failed"


class Deadline:
    """Cooperative deadline; check() raises DeadlineExceeded once expired."""

    def __init__(self, seconds=60.0):
        self.seconds = seconds
        self.t_end = None if seconds is None else time.monotonic() + seconds
        self._tick = 0

    def check(self):
        if self.t_end is not None and time.monotonic() > self.t_end:
            raise DeadlineExceeded(f"computation exceeded the {self.seconds:g}s deadline")

    def tick(self, every=256):
        self._tick += 1
        if self._tick % every == 0:
            self.check()


# -- monomial orders -----------------------------------------------------------


@dataclass(frozen=True)
class MonomialOrder:
    """Total order on monomials over an explicit variable ranking.

    kind: "lex" | "graded-lex" | "graded-revlex" | "block-elimination".
    ranking lists variables most-significant first; for block-elimination the
    first `elim_count` variables form the eliminated block (compared first,
    graded-revlex inside each block).
    """

    kind: str
    ranking: tuple
    elim_count: int = 0

    @classmethod
    def lex(cls, ranking):
        return cls("lex", tuple(ranking))

    @classmethod
    def grlex(cls, ranking):
        return cls("graded-lex", tuple(ranking))

    @classmethod
    def grevlex(cls, ranking):
        return cls("graded-revlex", tuple(ranking))

    @classmethod
    def block(cls, eliminate, keep):
        return cls("block-elimination", tuple(eliminate) + tuple(keep), len(tuple(eliminate)))

    def key(self, exps):
        k = self.kind
        if k == "lex":
            return exps
        if k == "graded-lex":
            return (sum(exps), exps)
        if k == "graded-revlex":
            return (sum(exps), tuple(-e for e in reversed(exps)))
        if k == "block-elimination":
            hi = exps[: self.elim_count]
            lo = exps[self.elim_count :]
            return (
                sum(hi),
                tuple(-e for e in reversed(hi)),
                sum(lo),
                tuple(-e for e in reversed(lo)),
            )
        raise ValueError(f"unknown order kind {self.kind!r}")


# -- dense exponent representation ---------------------------------------------


def _to_exps(p: MultiPoly, ranking) -> dict:
    idx = {v: i for i, v in enumerate(ranking)}
    n = len(ranking)
    out = {}
    for m, c in p.terms.items():
        e = [0] * n
        for v, k in m:
            e[idx[v]] = k
        out[tuple(e)] = c
    return out


def _from_exps(d: dict, ranking) -> MultiPoly:
    terms = {}
    for e, c in d.items():
        mono = tuple((v, k) for v, k in zip(ranking, e) if k)
        terms[tuple(sorted(mono))] = c
    return MultiPoly(terms)


def _div_exps(m, d):
    out = []
    for a, b in zip(m, d):
        if a < b:
            return None
        out.append(a - b)
    return tuple(out)


def _lcm_exps(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _mul_exps(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _monic(p: dict, okey) -> tuple:
    lead = max(p, key=okey)
    lc = p[lead]
    if lc != 1:
        p = {m: c / lc for m, c in p.items()}
    return lead, p


def _nf_dict(p: dict, basis: list, okey, deadline) -> dict:
    """Normal form of p modulo monic basis [(lead, poly), ...]."""
    work = dict(p)
    rem = {}
    while work:
        deadline.tick()
        m = max(work, key=okey)
        c = work.pop(m)
        for lead, g in basis:
            q = _div_exps(m, lead)
            if q is not None:
                for gm, gc in g.items():
                    if gm == lead:
                        continue
                    mm = _mul_exps(q, gm)
                    s = work.get(mm, _Q0) - c * gc
                    if s:
                        work[mm] = s
                    else:
                        work.pop(mm, None)
                break
        else:
            rem[m] = c
    return rem


_Q0 = Fraction(0)


def normal_form(p: MultiPoly, G, order: MonomialOrder, deadline=None) -> MultiPoly:
    """Remainder of p under multivariate division by G (G made monic)."""
    deadline = deadline or Deadline(None)
    okey = order.key
    basis = []
    for g in G:
        d = _to_exps(g, order.ranking)
        if d:
            basis.append(_monic(d, okey))
    rem = _nf_dict(_to_exps(p, order.ranking), basis, okey, deadline)
    return _from_exps(rem, order.ranking)


# -- Buchberger ------------------------------------------------------------------


def _spoly(gi, gj, li, lj, okey):
    lcm = _lcm_exps(li, lj)
    qi = _div_exps(lcm, li)
    qj = _div_exps(lcm, lj)
    out = {}
    for m, c in gi.items():
        out[_mul_exps(qi, m)] = c
    for m, c in gj.items():
        mm = _mul_exps(qj, m)
        s = out.get(mm, _Q0) - c
        if s:
            out[mm] = s
        else:
            out.pop(mm, None)
    return out


def buchberger(gens, order: MonomialOrder, deadline=None):
    """Reduced Groebner basis of the given generators under `order`.

    Pair selection uses the normal strategy (minimal lcm degree); both
    Buchberger criteria prune pairs.  Output is deterministic: elements are
    normalized to integer-primitive positive-leading form and sorted by
    descending leading monomial.
    """
    deadline = deadline or Deadline(None)
    okey = order.key
    G = []
    leads = []
    for g in gens:
        d = _to_exps(g, order.ranking) if isinstance(g, MultiPoly) else dict(g)
        if d:
            lead, d = _monic(d, okey)
            G.append(d)
            leads.append(lead)
    if not G:
        return []

    pairs = {(i, j) for i in range(len(G)) for j in range(i)}
    done = set()

    def select():
        best = None
        best_key = None
        for i, j in pairs:
            lcm = _lcm_exps(leads[i], leads[j])
            k = (sum(lcm), okey(lcm), j, i)
            if best_key is None or k < best_key:
                best_key = k
                best = (i, j)
        return best

    while pairs:
        deadline.check()
        i, j = select()
        pairs.discard((i, j))
        done.add((i, j))
        li, lj = leads[i], leads[j]
        lcm = _lcm_exps(li, lj)
        # criterion 1: coprime leading monomials
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        # criterion 2 (chain): some k with lead_k | lcm and both pairs handled
        skip = False
        for k in range(len(G)):
            if k in (i, j) or _div_exps(lcm, leads[k]) is None:
                continue
            pik = (max(i, k), min(i, k))
            pjk = (max(j, k), min(j, k))
            if pik in done and pjk in done and pik not in pairs and pjk not in pairs:
                skip = True
                break
        if skip:
            continue
        h = _nf_dict(_spoly(G[i], G[j], li, lj, okey), list(zip(leads, G)), okey, deadline)
        if not h:
            continue
        lead, h = _monic(h, okey)
        G.append(h)
        leads.append(lead)
        new = len(G) - 1
        for t in range(new):
            pairs.add((new, t))

    # minimalize: visit by increasing leading monomial; a lead divisible by an
    # already-kept (hence smaller) lead is redundant
    minimal = []
    for i in sorted(range(len(G)), key=lambda i: okey(leads[i])):
        if not any(_div_exps(leads[i], leads[j]) is not None for j in minimal):
            minimal.append(i)
    # fully reduce tails
    reduced = []
    for i in minimal:
        others = [(leads[j], G[j]) for j in minimal if j != i]
        h = _nf_dict(G[i], others, okey, deadline)
        if h:
            reduced.append(_monic(h, okey))
    reduced.sort(key=lambda t: okey(t[0]), reverse=True)
    return [_from_exps(dict(p), order.ranking).normalized() for _, p in reduced]


@dataclass
class Ideal:
    generators: list
    variables: list

    @classmethod
    def of(cls, gens):
        vs = set()
        for g in gens:
            vs |= g.variables()
        return cls([g for g in gens if not g.is_zero()], sorted_vars(vs))


def elimination_ideal(ideal: Ideal, keep, deadline=None) -> Ideal:
    """Generators of the ideal intersected with the ring over `keep`."""
    keep = list(keep)
    elim = [v for v in ideal.variables if v not in keep]
    ranking_keep = [v for v in sorted_vars(ideal.variables) if v in keep]
    order = MonomialOrder.block(elim, ranking_keep)
    basis = buchberger(ideal.generators, order, deadline)
    kept = [g for g in basis if not (g.variables() & set(elim))]
    return Ideal(kept, ranking_keep)


# -- Sylvester resultant ---------------------------------------------------------


def sylvester_resultant(p: MultiPoly, q: MultiPoly, var,
                        deadline: Deadline | None = None) -> MultiPoly:
    """Resultant of p, q w.r.t. var: determinant of the Sylvester matrix with
    polynomial entries, by fraction-free Bareiss elimination."""
    cp = p.coeffs_in(var)
    cq = q.coeffs_in(var)
    m = max(cp) if cp else 0
    n = max(cq) if cq else 0
    if m == 0 or n == 0:
        raise ComputationError("resultant requires positive degree in the eliminated variable")
    size = m + n
    Z = MultiPoly()
    M = [[Z] * size for _ in range(size)]
    for r in range(n):  # rows of p coefficients
        for k, c in cp.items():
            M[r][r + (m - k)] = c
    for r in range(m):  # rows of q coefficients
        for k, c in cq.items():
            M[n + r][r + (n - k)] = c
    return _bareiss_det(M, deadline)


def _bareiss_det(M, deadline: Deadline | None = None) -> MultiPoly:
    n = len(M)
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if M[k][k].is_zero():
            for i in range(k + 1, n):
                if not M[i][k].is_zero():
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return MultiPoly()
        pivot = M[k][k]
        for i in range(k + 1, n):
            if deadline is not None:
                deadline.check()
            row = M[i]
            if all(row[j].is_zero() for j in range(k, n)):
                continue
            for j in range(k + 1, n):
                num = row[j] * pivot - row[k] * M[k][j]
                row[j] = num.exact_divide(prev) if not num.is_zero() else num
            row[k] = MultiPoly()
        prev = pivot
    det = M[n - 1][n - 1]
    return -det if sign < 0 else det


# -- implicitization pipeline -----------------------------------------------------


@dataclass
class ImplicitCurve:
    defining: MultiPoly
    provenance: dict = field(default_factory=dict)

    @property
    def degree(self):
        return self.defining.total_degree()

    def text(self):
        return self.defining.canonical_text()


def _xy_normalize(p: MultiPoly):
    """{x,y}-primitive, square-free, positive-leading normalization.

    Returns (normalized, content, multiplicity_stripped)."""
    content, prim = content_primitive(p, {"x", "y"})
    sf = square_free_part(prim)
    stripped = sf.total_degree() != prim.total_degree()
    out = sf if stripped else prim.normalized()
    _, lead = out.leading()
    if lead < 0:
        out = -out
    return out, content, stripped


def implicitize(
    point: ParametricPoint,
    method: str = "auto",
    deadline: Deadline | None = None,
    construction: str | None = None,
) -> ImplicitCurve:
    """Implicit equation of the curve traced by `point`.

    method: "resultant" | "groebner" | "both" | "auto".  Auto prefers the
    resultant when the cleared system is two polynomials in one eliminated
    variable, falling back to Groebner elimination; "both" computes both and
    requires equal normalized results.
    """
    deadline = deadline or Deadline(60.0)
    t0 = time.monotonic()
    if point.parameter not in point.x.variables() | point.y.variables():
        raise TrivialResult("both coordinates are constant; the locus is a point, not a curve")
    p1, p2 = clear_to_system(point)
    u = point.parameter
    prov = {
        "construction": construction,
        "system": [p1.canonical_text(), p2.canonical_text()],
        "eliminated": u,
        "method": None,
        "content_removed": None,
        "notes": [],
    }
    if point.exclusions.describe():
        prov["excluded"] = point.exclusions.describe()

    res_possible = p1.degree_in(u) >= 1 and p2.degree_in(u) >= 1
    want_res = method in ("auto", "resultant", "both") and res_possible
    want_gb = method in ("groebner", "both") or not res_possible

    result = None
    res_norm = None
    if want_res:
        R = sylvester_resultant(p1, p2, u, deadline)
        if R.is_zero():
            prov["notes"].append("resultant vanished identically; fell back to elimination ideal")
            want_gb = True
        else:
            deadline.check()
            norm, content, stripped = _xy_normalize(R)
            if not content.is_constant() or content.constant_value() != 1:
                prov["content_removed"] = content.exact_text()
            if stripped:
                prov["notes"].append("multiple factors stripped (square-free part taken)")
            if norm.is_constant():
                raise TrivialResult("elimination produced a constant; the locus is not a curve")
            deadline.check()
            if verify_on_curve(norm, point):
                res_norm = norm
                result = norm
                prov["method"] = "resultant"
            else:
                kept = _factor_filter(norm, point)
                if kept is not None:
                    res_norm = kept
                    result = kept
                    prov["method"] = "resultant"
                    prov["notes"].append("extraneous resultant factor stripped after factoring")
                else:
                    prov["notes"].append("resultant result failed on-curve verification; fell back")
                    want_gb = True
    if method == "both":
        want_gb = True

    if result is None or want_gb:
        gens = [p1, p2]
        ideal = Ideal.of(gens)
        keep = [v for v in ideal.variables if v != u]
        elim = elimination_ideal(ideal, keep, deadline)
        if not elim.generators:
            raise TrivialResult("elimination ideal is zero; the parametrization is not algebraic over {x,y}")
        candidates = sorted(elim.generators, key=lambda g: (g.total_degree(), g.term_count()))
        chosen = None
        for g in candidates:
            deadline.check()
            norm, content, stripped = _xy_normalize(g)
            if norm.is_constant():
                continue
            if verify_on_curve(norm, point):
                chosen = (norm, content, stripped)
                break
        if chosen is None:
            raise EliminationFailed("no elimination-ideal generator passes on-curve verification")
        norm, content, stripped = chosen
        if len(candidates) > 1:
            prov["notes"].append(f"elimination ideal had {len(candidates)} generators; minimal verified one chosen")
        if result is None:
            result = norm
            prov["method"] = "groebner"
            if not content.is_constant() or content.constant_value() != 1:
                prov["content_removed"] = content.exact_text()
            if stripped:
                prov["notes"].append("multiple factors stripped (square-free part taken)")
        else:
            if norm == res_norm:
                prov["method"] = "both"
                prov["notes"].append("resultant and Groebner paths agree")
            else:
                raise EliminationFailed(
                    "resultant and Groebner paths disagree: "
                    f"{res_norm.canonical_text()} vs {norm.canonical_text()}"
                )

    # verification and normalization run between deadline checkpoints, so a
    # cooperative overshoot is possible; the final check keeps the promise
    # that a finished call observed its budget
    deadline.check()
    prov["elapsed_ms"] = round((time.monotonic() - t0) * 1000, 1)
    prov["degree"] = result.total_degree()
    return ImplicitCurve(defining=result, provenance=prov)


def _factor_filter(F: MultiPoly, point: ParametricPoint):
    """Last-resort extraneous stripping: factor a parameter-free F and keep
    the verified factors.  Returns None when not applicable or nothing holds."""
    if F.variables() - {"x", "y"}:
        return None
    from .analysis import factor_bivariate  # deferred: analysis builds on elim

    try:
        fr = factor_bivariate(F)
    except ComputationError:
        return None
    kept = ONE
    for fac, mult in fr.factors:
        if verify_on_curve(fac, point):
            kept = kept * fac
    if kept.is_constant():
        return None
    out, _, _ = _xy_normalize(kept)
    return out if verify_on_curve(out, point) else None
