"""Exact analysis of plane algebraic curves over the rationals.

Provides integer/rational factorization (univariate Zassenhaus, bivariate via
power-series Hensel lifting), irreducibility testing, singular-point search
with classification, symmetry detection, asymptotes, conic identification,
inflection candidates of rational parametrizations, and a JSON-able report.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .elim import sylvester_resultant
from .errors import ComputationError, InputError
from .poly import (
    MultiPoly,
    Q,
    content_primitive,
    poly_gcd,
    square_free_part,
)
from .ratfunc import ParametricPoint, RatFunc, verify_on_curve

# ---------------------------------------------------------------------------
# dense univariate integer polynomials: list of ints, index = exponent
# ---------------------------------------------------------------------------


def _ztrim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _zdeg(p):
    return len(p) - 1


def _zmul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _ztrim(out)


def _zadd(p, q):
    out = [0] * max(len(p), len(q))
    for i, a in enumerate(p):
        out[i] += a
    for i, b in enumerate(q):
        out[i] += b
    return _ztrim(out)


def _zscale(p, c):
    return _ztrim([a * c for a in p]) if c else []


def _zcontent(p):
    g = 0
    for a in p:
        g = math.gcd(g, abs(a))
    return g


def _zprimitive(p):
    g = _zcontent(p)
    if g == 0:
        return [], 0
    if p[-1] < 0:
        g = -g
    return [a // g for a in p], g


def _zdivexact(p, q):
    """Exact division of integer polynomials; None if not exact."""
    if not q:
        raise ZeroDivisionError
    if not p:
        return []
    r = list(p)
    out = [0] * (len(p) - len(q) + 1) if len(p) >= len(q) else None
    if out is None:
        return None
    lc = q[-1]
    for k in range(len(out) - 1, -1, -1):
        c = r[k + len(q) - 1]
        if c % lc:
            return None
        c //= lc
        out[k] = c
        if c:
            for j, b in enumerate(q):
                r[k + j] -= c * b
    return _ztrim(out) if not any(r) else None


def _zeval(p, v):
    acc = 0
    for a in reversed(p):
        acc = acc * v + a
    return acc


def _zderiv(p):
    return _ztrim([i * a for i, a in enumerate(p)][1:])


# -- modular arithmetic ------------------------------------------------------


def _pm_trim(p, m):
    p = [a % m for a in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def _pm_mul(p, q, m):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] = (out[i + j] + a * b) % m
    return _pm_trim(out, m)


def _pm_divmod(p, q, m):
    """Division in (Z/m)[x]; q's leading coefficient must be invertible."""
    q = _pm_trim(q, m)
    inv = pow(q[-1], -1, m)
    r = [a % m for a in p]
    if len(r) < len(q):
        return [], _pm_trim(r, m)
    quo = [0] * (len(r) - len(q) + 1)
    for k in range(len(quo) - 1, -1, -1):
        c = (r[k + len(q) - 1] * inv) % m
        quo[k] = c
        if c:
            for j, b in enumerate(q):
                r[k + j] = (r[k + j] - c * b) % m
    return _pm_trim(quo, m), _pm_trim(r, m)


def _pm_gcd(p, q, m):
    a, b = _pm_trim(p, m), _pm_trim(q, m)
    while b:
        _, r = _pm_divmod(a, b, m)
        a, b = b, r
    if a:
        inv = pow(a[-1], -1, m)
        a = _pm_trim([c * inv for c in a], m)
    return a


def _pm_monic(p, m):
    p = _pm_trim(p, m)
    if not p:
        return p
    inv = pow(p[-1], -1, m)
    return _pm_trim([c * inv for c in p], m)


def _pm_pow_mod(base, e, mod_poly, m):
    result = [1]
    b = _pm_divmod(base, mod_poly, m)[1]
    while e:
        if e & 1:
            result = _pm_divmod(_pm_mul(result, b, m), mod_poly, m)[1]
        b = _pm_divmod(_pm_mul(b, b, m), mod_poly, m)[1]
        e >>= 1
    return result


# -- Berlekamp factorization mod a small prime --------------------------------


def _berlekamp(f, p):
    """Monic squarefree f mod p -> list of monic irreducible factors mod p."""
    n = _zdeg(f)
    if n <= 1:
        return [f]
    # rows of M: x^(i*p) mod f
    xp = _pm_pow_mod([0, 1], p, f, p)
    rows = [[1] + [0] * (n - 1)]
    cur = [1]
    for _ in range(1, n):
        cur = _pm_divmod(_pm_mul(cur, xp, p), f, p)[1]
        rows.append(list(cur) + [0] * (n - len(cur)))
    # A = (M - I)^T ; nullspace basis over GF(p)
    A = [[(rows[j][i] - (1 if i == j else 0)) % p for j in range(n)] for i in range(n)]
    basis = _gfp_nullspace(A, p)
    k = len(basis)
    if k == 1:
        return [f]
    factors = [f]
    for v in basis:
        if _zdeg(_pm_trim(v, p)) < 1:
            continue
        if len(factors) == k:
            break
        new = []
        for g in factors:
            if _zdeg(g) <= 1:
                new.append(g)
                continue
            parts = []
            rest = g
            for s in range(p):
                if _zdeg(rest) < 1:
                    break
                d = _pm_gcd(rest, _pm_trim([v[0] - s] + v[1:], p), p)
                if 0 < _zdeg(d) <= _zdeg(rest):
                    parts.append(d)
                    rest = _pm_divmod(rest, d, p)[0]
            if _zdeg(rest) >= 1:
                parts.append(_pm_monic(rest, p))
            new.extend(parts if parts else [g])
        factors = new
    return factors


def _gfp_nullspace(A, p):
    """Nullspace basis of square matrix A over GF(p); vectors as int lists."""
    n = len(A)
    M = [row[:] for row in A]
    pivots = {}
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, n):
            if M[i][c] % p:
                piv = i
                break
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][c], -1, p)
        M[r] = [(v * inv) % p for v in M[r]]
        for i in range(n):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [(M[i][j] - f * M[r][j]) % p for j in range(n)]
        pivots[c] = r
        r += 1
    basis = []
    free = [c for c in range(n) if c not in pivots]
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for c, row in pivots.items():
            v[c] = (-M[row][fc]) % p
        basis.append(v)
    return basis


# -- Hensel lifting over Z/p^k -------------------------------------------------


def _hensel_step(f, g, h, s, t, m):
    """One quadratic Hensel step: f = g*h and s*g + t*h = 1 mod m lift to
    mod m^2.  All polys with integer coefficient lists; g monic."""
    m2 = m * m
    e = _pm_trim(_zadd(f, _zscale(_zmul(g, h), -1)), m2)
    q, r = _pm_divmod(_pm_mul(s, e, m2), h, m2)
    h2 = _pm_trim(_zadd(h, r), m2)
    g2 = _pm_trim(_zadd(g, _zadd(_pm_mul(t, e, m2), _pm_mul(q, g, m2))), m2)
    b = _pm_trim(_zadd(_zadd(_pm_mul(s, g2, m2), _pm_mul(t, h2, m2)), [-1]), m2)
    c, d = _pm_divmod(_pm_mul(s, b, m2), h2, m2)
    s2 = _pm_trim(_zadd(s, _zscale(d, -1)), m2)
    t2 = _pm_trim(_zadd(t, _zscale(_zadd(_pm_mul(t, b, m2), _pm_mul(c, g2, m2)), -1)), m2)
    return g2, h2, s2, t2


def _pm_ext_euclid(a, b, p):
    """s*a + t*b = 1 mod p for coprime a, b."""
    r0, r1 = _pm_trim(a, p), _pm_trim(b, p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _pm_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _pm_trim(_zadd(s0, _zscale(_pm_mul(q, s1, p), -1)), p)
        t0, t1 = t1, _pm_trim(_zadd(t0, _zscale(_pm_mul(q, t1, p), -1)), p)
    inv = pow(r0[0], -1, p)
    return _pm_trim([c * inv for c in s0], p), _pm_trim([c * inv for c in t0], p)


def _hensel_lift_tree(f, factors, p, target):
    """Lift monic factorization of monic f mod p to mod p^k >= target."""
    if len(factors) == 1:
        return [_pm_trim(f, target)]
    half = len(factors) // 2
    g = [1]
    for fac in factors[:half]:
        g = _pm_mul(g, fac, p)
    h = [1]
    for fac in factors[half:]:
        h = _pm_mul(h, fac, p)
    s, t = _pm_ext_euclid(h, g, p)  # s*h + t*g = 1
    # rename to match step signature: f = g*h with "g" monic first factor
    m = p
    G, H, S, T = g, h, t, s  # S*G + T*H = 1
    while m < target:
        G, H, S, T = _hensel_step(_pm_trim(f, m * m), G, H, S, T, m)
        m = m * m
    left = _hensel_lift_tree(G, factors[:half], p, target)
    right = _hensel_lift_tree(H, factors[half:], p, target)
    return left + right


def _symmetric(a, m):
    a %= m
    return a - m if a > m // 2 else a


_PRIMES = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73]


def factor_univariate_z(p) -> list:
    """Irreducible factors (with multiplicity) of an integer coefficient list.

    Returns list of (primitive_factor_list, multiplicity); does not include
    the content.  Uses Berlekamp + Hensel + subset recombination.
    """
    p, _ = _zprimitive(list(p))
    if _zdeg(p) < 1:
        return []
    out = []
    # squarefree split by repeated gcd with derivative
    work = p
    sf_parts = []  # (squarefree poly, multiplicity base)
    mult = 1
    while _zdeg(work) >= 1:
        d = _zgcd_int(work, _zderiv(work))
        sf = _zdivexact(work, d)
        sf_parts.append((sf, mult))
        work = d
        mult += 1
    # merge: factor each squarefree layer; multiplicity = how many layers contain it
    acc = {}
    for sf, _ in sf_parts:
        for fac in _factor_squarefree_z(sf):
            key = tuple(fac)
            acc[key] = acc.get(key, 0)
    for key in acc:
        fac = list(key)
        m = 0
        work = p
        while True:
            quo = _zdivexact(work, fac)
            if quo is None:
                break
            work = quo
            m += 1
        acc[key] = m
    for key, m in sorted(acc.items(), key=lambda kv: (len(kv[0]), kv[0])):
        out.append((list(key), m))
    return out


def _zgcd_int(p, q):
    """gcd of integer univariate polys (primitive, positive leading)."""
    a = [Fraction(c) for c in p]
    b = [Fraction(c) for c in q]

    def qdivmod(x, y):
        r = x[:]
        if len(r) < len(y):
            return r
        for k in range(len(r) - len(y), -1, -1):
            c = r[k + len(y) - 1] / y[-1]
            if c:
                for j, bb in enumerate(y):
                    r[k + j] -= c * bb
        while r and not r[-1]:
            r.pop()
        return r

    while b:
        a, b = b, qdivmod(a, b)
    if not a:
        return []
    den = 1
    for c in a:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in a]
    prim, _ = _zprimitive(ints)
    return prim


def _factor_squarefree_z(f) -> list:
    """Irreducible primitive factors of a squarefree primitive integer poly."""
    f = list(f)
    n = _zdeg(f)
    if n < 1:
        return []
    if n == 1:
        return [_zprimitive(f)[0]]
    # choose a prime keeping degree and squarefreeness
    for p in _PRIMES:
        if f[-1] % p == 0:
            continue
        fp = _pm_monic(f, p)
        if _zdeg(fp) != n:
            continue
        if _zdeg(_pm_gcd(fp, _pm_trim(_zderiv(fp), p), p)) == 0:
            prime = p
            break
    else:
        raise ComputationError("no suitable prime found for factorization")
    modular = _berlekamp(_pm_monic(f, prime), prime)
    if len(modular) == 1:
        return [_zprimitive(f)[0]]
    # lift to p^k beyond twice the Mignotte bound
    lc = abs(f[-1])
    norm = math.isqrt(sum(c * c for c in f)) + 1
    bound = 2 * (2**n) * norm * lc
    target = prime
    while target <= bound:
        target *= prime
    lifted = _hensel_lift_tree(_pm_monic(f, target), sorted(modular), prime, target)
    # subset recombination
    factors = []
    idx = list(range(len(lifted)))
    rem = f
    from itertools import combinations

    size = 1
    while 2 * size <= len(idx):
        found = True
        while found and 2 * size <= len(idx):
            found = False
            for combo in combinations(idx, size):
                cand = [rem[-1] % target]  # lc-scaled product
                for i in combo:
                    cand = _pm_mul(cand, lifted[i], target)
                cand = [_symmetric(c, target) for c in cand]
                cand, _ = _zprimitive(_ztrim(cand))
                if not cand:
                    continue
                quo = _zdivexact(rem, cand)
                if quo is not None:
                    factors.append(cand)
                    rem = quo
                    idx = [i for i in idx if i not in combo]
                    found = True
                    break
        size += 1
    if _zdeg(rem) >= 1:
        factors.append(_zprimitive(rem)[0])
    return factors


# ---------------------------------------------------------------------------
# Sturm sequences and real root isolation
# ---------------------------------------------------------------------------


def sturm_chain(p) -> list:
    """Sturm chain of an integer/rational coefficient list."""
    chain = [[Fraction(c) for c in p]]
    d = [Fraction(c) for c in _zderiv_f(chain[0])]
    if d:
        chain.append(d)
    while len(chain[-1]) > 1:
        r = _frem(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return chain


def _zderiv_f(p):
    return [i * a for i, a in enumerate(p)][1:]


def _frem(a, b):
    r = a[:]
    while len(r) >= len(b) and any(r):
        c = r[-1] / b[-1]
        k = len(r) - len(b)
        for j, bb in enumerate(b):
            r[k + j] -= c * bb
        while r and not r[-1]:
            r.pop()
    return r


def _feval(p, v):
    acc = Fraction(0)
    for a in reversed(p):
        acc = acc * v + a
    return acc


def _sign_changes(chain, v, at_inf=0):
    signs = []
    for p in chain:
        if at_inf:
            s = (1 if p[-1] > 0 else -1) if p else 0
            if at_inf < 0 and (len(p) - 1) % 2 == 1:
                s = -s
        else:
            val = _feval(p, v)
            s = 0 if val == 0 else (1 if val > 0 else -1)
        if s:
            signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p, lo=None, hi=None) -> int:
    """Number of distinct real roots of p in (lo, hi]; None means +-infinity."""
    chain = sturm_chain(p)
    a = _sign_changes(chain, None, at_inf=-1) if lo is None else _sign_changes(chain, Fraction(lo))
    b = _sign_changes(chain, None, at_inf=1) if hi is None else _sign_changes(chain, Fraction(hi))
    return a - b


def isolate_real_roots(p, width=Fraction(1, 2**20)) -> list:
    """Disjoint rational intervals (lo, hi], each holding one real root of p."""
    p = [Fraction(c) for c in p]
    while p and not p[-1]:
        p.pop()
    if len(p) <= 1:
        return []
    bound = Fraction(1) + max(abs(c) for c in p[:-1]) / abs(p[-1])
    chain = sturm_chain(p)

    def var(v):
        return _sign_changes(chain, v)

    out = []
    stack = [(-bound, bound, var(-bound), var(bound))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        n = vlo - vhi
        if n <= 0:
            continue
        if n == 1 and hi - lo < width:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if _feval(p, mid) == 0:
            # nudge so the root is interior to one half
            mid += (hi - lo) / (2**10 + 1)
        vm = var(mid)
        stack.append((lo, mid, vlo, vm))
        stack.append((mid, hi, vm, vhi))
    return sorted(out)


# ---------------------------------------------------------------------------
# bivariate factorization over Q
# ---------------------------------------------------------------------------


@dataclass
class FactorList:
    unit: Fraction
    factors: list  # [(MultiPoly primitive positive-leading, multiplicity)]

    def expand(self) -> MultiPoly:
        out = MultiPoly.const(self.unit)
        for f, m in self.factors:
            out = out * f**m
        return out


def _to_dense_y(F: MultiPoly, x, y, K):
    """F as list over y of truncated-series-in-x coefficient lists."""
    dy = F.degree_in(y)
    out = [[Fraction(0)] * K for _ in range(dy + 1)]
    for m, c in F.terms.items():
        ex = ey = 0
        for v, e in m:
            if v == x:
                ex = e
            elif v == y:
                ey = e
        if ex < K:
            out[ey][ex] += c
    return out


def _ser_mul(a, b, K):
    out = [Fraction(0)] * K
    for i, av in enumerate(a):
        if av and i < K:
            top = min(K - i, len(b))
            for j in range(top):
                if b[j]:
                    out[i + j] += av * b[j]
    return out


def _ser_add(a, b):
    return [x + y for x, y in zip(a, b)]


def _ser_scale(a, c):
    return [x * c for x in a]


def _ser_inv(a, K):
    if not a[0]:
        raise ZeroDivisionError("series has no inverse")
    out = [Fraction(0)] * K
    out[0] = 1 / a[0]
    for n in range(1, K):
        s = Fraction(0)
        for i in range(1, min(n, len(a) - 1) + 1):
            s += a[i] * out[n - i]
        out[n] = -s / a[0]
    return out


def _sp_mul(f, g, K):
    """Product of series-coefficient polys in y."""
    if not f or not g:
        return []
    out = [[Fraction(0)] * K for _ in range(len(f) + len(g) - 1)]
    for i, fc in enumerate(f):
        for j, gc in enumerate(g):
            out[i + j] = _ser_add(out[i + j], _ser_mul(fc, gc, K))
    return _sp_trim(out)


def _sp_trim(f):
    while f and all(c == 0 for c in f[-1]):
        f.pop()
    return f


def _sp_sub(f, g):
    if not f and not g:
        return []
    n = max(len(f), len(g))
    K = len(f[0]) if f else len(g[0])
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else [Fraction(0)] * K
        b = g[i] if i < len(g) else [Fraction(0)] * K
        out.append([x - y for x, y in zip(a, b)])
    return _sp_trim(out)


def _sp_divmod(f, g, K):
    """Division by g whose leading series coefficient is invertible."""
    g = _sp_trim([row[:] for row in g])
    inv = _ser_inv(g[-1], K)
    r = [row[:] for row in f]
    _sp_trim(r)
    if len(r) < len(g):
        return [], r
    quo = [[Fraction(0)] * K for _ in range(len(r) - len(g) + 1)]
    for k in range(len(quo) - 1, -1, -1):
        if len(r) < k + len(g):
            continue
        c = _ser_mul(r[k + len(g) - 1], inv, K)
        quo[k] = c
        if any(c):
            for j in range(len(g)):
                r[k + j] = [x - y for x, y in zip(r[k + j], _ser_mul(c, g[j], K))]
        r = _sp_trim(r[: k + len(g) - 1] + r[k + len(g) - 1 :])
    _sp_trim(r)
    return _sp_trim(quo), r


def _sp_from_univ(p, K):
    return [[Fraction(c)] + [Fraction(0)] * (K - 1) for c in p]


def _sp_hensel_pair(f, g, h, s, t, K):
    """Lift f = g*h (all series polys; g,h monic, s*g + t*h = 1 at order 1)
    from series order 1 to order K by doubling."""
    prec = 1

    def cut(sp, n):
        return [[c if i < n else Fraction(0) for i, c in enumerate(row)] for row in sp]

    while prec < K:
        prec2 = min(K, prec * 2)
        e = _sp_sub(cut(f, prec2), cut(_sp_mul(g, h, K), prec2))
        q, r = _sp_divmod(_sp_mul(s, e, K), h, K)
        h = _sp_trim(_sp_addp(h, r))
        g = _sp_trim(_sp_addp(g, _sp_addp(_sp_mul(t, e, K), _sp_mul(q, g, K))))
        g, h = cut(g, prec2), cut(h, prec2)
        b = _sp_sub(_sp_addp(_sp_mul(s, g, K), _sp_mul(t, h, K)), _sp_from_univ([1], K))
        b = cut(b, prec2)
        c, d = _sp_divmod(_sp_mul(s, b, K), h, K)
        s = cut(_sp_sub(s, d), prec2)
        t = cut(_sp_sub(t, _sp_addp(_sp_mul(t, b, K), _sp_mul(c, g, K))), prec2)
        prec = prec2
    return g, h


def _sp_addp(f, g):
    if not f:
        return [row[:] for row in g]
    if not g:
        return [row[:] for row in f]
    n = max(len(f), len(g))
    K = len(f[0])
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else [Fraction(0)] * K
        b = g[i] if i < len(g) else [Fraction(0)] * K
        out.append([x + y for x, y in zip(a, b)])
    return out


def _sp_lift_tree(f, factors, K):
    """Lift pairwise-coprime monic univariate factors of f(0,y) to series
    precision K; f monic as series poly."""
    if len(factors) == 1:
        return [f]
    half = len(factors) // 2
    g1 = [1]
    for fac in factors[:half]:
        g1 = _zmul_f(g1, fac)
    h1 = [1]
    for fac in factors[half:]:
        h1 = _zmul_f(h1, fac)
    s1, t1 = _fext_euclid(h1, g1)  # s1*h1 + t1*g1 = 1 over Q[y]
    G = _sp_from_univ(g1, K)
    H = _sp_from_univ(h1, K)
    S = _sp_from_univ(t1, K)  # the step wants S*G + T*H = 1
    T = _sp_from_univ(s1, K)
    G, H = _sp_hensel_pair(f, G, H, S, T, K)
    return _sp_lift_tree(G, factors[:half], K) + _sp_lift_tree(H, factors[half:], K)


def _zmul_f(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += Fraction(a) * Fraction(b)
    return out


def _fext_euclid(a, b):
    """s*a + t*b = 1 over Q[y] for coprime a, b."""
    r0 = [Fraction(c) for c in a]
    r1 = [Fraction(c) for c in b]
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]

    def fdivmod(x, y):
        r = x[:]
        quo = [Fraction(0)] * max(0, len(r) - len(y) + 1)
        for k in range(len(quo) - 1, -1, -1):
            if len(r) < k + len(y):
                continue
            c = r[k + len(y) - 1] / y[-1]
            quo[k] = c
            for j, bb in enumerate(y):
                r[k + j] -= c * bb
            while r and not r[-1]:
                r.pop()
        return quo, r

    def fmulsub(u, q, v):
        prod = [Fraction(0)] * (len(q) + len(v) - 1) if q and v else []
        for i, aa in enumerate(q):
            for j, bb in enumerate(v):
                prod[i + j] += aa * bb
        n = max(len(u), len(prod))
        out = [(u[i] if i < len(u) else 0) - (prod[i] if i < len(prod) else 0) for i in range(n)]
        while out and not out[-1]:
            out.pop()
        return out

    while r1:
        q, r = fdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, fmulsub(s0, q, s1)
        t0, t1 = t1, fmulsub(t0, q, t1)
    c = r0[-1] if r0 else Fraction(1)
    return [v / c for v in s0], [v / c for v in t0]


def _series_poly_to_multipoly(sp, x, y, x0) -> MultiPoly:
    """Series polys live in s = x - x0; substitute back to x."""
    out = MultiPoly()
    X = MultiPoly.var(x) - MultiPoly.const(x0) if x0 else MultiPoly.var(x)
    for ey, series in enumerate(sp):
        coeff = MultiPoly()
        for ex, c in enumerate(series):
            if c:
                coeff = coeff + MultiPoly.const(c) * X**ex
        if not coeff.is_zero():
            out = out + coeff * MultiPoly.var(y, ey)
    return out


def _univ_to_multipoly(p, var) -> MultiPoly:
    out = MultiPoly()
    for e, c in enumerate(p):
        if c:
            out = out + MultiPoly.const(Q(c)) * MultiPoly.var(var, e)
    return out


def _multipoly_to_univ(p: MultiPoly, var):
    """Integer coefficient list of a univariate MultiPoly (cleared)."""
    deg = p.degree_in(var)
    coeffs = [Fraction(0)] * (deg + 1)
    for m, c in p.terms.items():
        e = 0
        for v, k in m:
            if v == var:
                e = k
            elif k:
                raise ComputationError("polynomial is not univariate")
        coeffs[e] += c
    den = 1
    for c in coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return [int(c * den) for c in coeffs]


def factor_bivariate(F: MultiPoly) -> FactorList:
    """Factor a polynomial in at most the variables {x, y} into irreducible
    primitive factors over Q."""
    vs = F.variables()
    if not vs <= {"x", "y"}:
        raise ComputationError(
            "factorization needs a parameter-free curve; bind parameters first"
        )
    if F.is_zero():
        raise InputError("cannot factor the zero polynomial")
    if F.is_constant():
        return FactorList(F.constant_value(), [])

    # orient: y is the main (lifted) variable; swap if that lowers the degree
    swap = F.degree_in("y") > F.degree_in("x") and F.degree_in("x") > 0
    work = F.substitute({"x": MultiPoly.var("y"), "y": MultiPoly.var("x")}) if swap else F

    factors = _factor_xy(work)
    if swap:
        factors = [
            (f.substitute({"x": MultiPoly.var("y"), "y": MultiPoly.var("x")}).normalized(), m)
            for f, m in factors
        ]
    # recover exact unit so unit * prod(f^m) == F
    prod = MultiPoly.const(Q(1))
    for f, m in factors:
        prod = prod * f**m
    unit_poly = F.try_divide(prod)
    if unit_poly is None or not unit_poly.is_constant():
        raise ComputationError("internal factorization inconsistency")
    factors.sort(key=lambda fm: (fm[0].total_degree(), fm[0].canonical_text()))
    return FactorList(unit_poly.constant_value(), factors)


def _factor_xy(F: MultiPoly) -> list:
    """Inner engine: factors of F with multiplicity, main variable y."""
    if F.degree_in("y") == 0:
        return [
            (_univ_to_multipoly(f, "x").normalized(), m)
            for f, m in factor_univariate_z(_multipoly_to_univ(F, "x"))
        ]
    if F.degree_in("x") == 0:
        return [
            (_univ_to_multipoly(f, "y").normalized(), m)
            for f, m in factor_univariate_z(_multipoly_to_univ(F, "y"))
        ]
    out = []
    content, prim = content_primitive(F, {"y"})
    if not content.is_constant():
        out.extend(_factor_xy(content))
    sf = square_free_part(prim)
    for fac in _factor_squarefree_xy(sf):
        m = 0
        work = prim
        while True:
            quo = work.try_divide(fac)
            if quo is None:
                break
            work = quo
            m += 1
        out.append((fac, m))
    return out


def _factor_squarefree_xy(G: MultiPoly) -> list:
    """Irreducible factors of a squarefree primitive (w.r.t. y) bivariate."""
    dy = G.degree_in("y")
    dx = G.degree_in("x")
    lc = G.coeff_in("y", dy)  # in Q[x]
    K = dx + lc.total_degree() + 1

    # find an integer specialization x0 keeping lc nonzero and squarefreeness
    x0 = None
    for cand in [0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 6, -6, 7, -7]:
        if lc.evaluate({"x": Q(cand)}) == 0:
            continue
        g0 = _multipoly_to_univ(G.substitute({"x": MultiPoly.const(Q(cand))}), "y")
        if _zdeg(g0) != dy:
            continue
        if _zdeg(_zgcd_int(g0, _zderiv(g0))) == 0:
            x0 = cand
            break
    if x0 is None:
        raise ComputationError("no good specialization point found for factorization")

    shifted = G.substitute({"x": MultiPoly.var("x") + MultiPoly.const(Q(x0))}) if x0 else G
    g0 = _multipoly_to_univ(shifted.substitute({"x": MultiPoly.const(Q(0))}), "y")
    univ = [f for f, _ in factor_univariate_z(g0)]
    if len(univ) == 1:
        return [G.normalized()]

    # monicize the series poly and lift monic univariate factors
    sp = _to_dense_y(shifted, "x", "y", K)
    lc_series = sp[-1]
    inv = _ser_inv(lc_series, K)
    monic = [_ser_mul(row, inv, K) for row in sp]
    monic_factors = sorted(
        ([Fraction(c, f[-1]) for c in f] for f in univ), key=lambda f: (len(f), f)
    )
    lifted = _sp_lift_tree(monic, monic_factors, K)

    # recombine subsets; multiply back the true leading coefficient
    from itertools import combinations

    idx = list(range(len(lifted)))
    rem = G.normalized()
    found_factors = []
    size = 1
    while 2 * size <= len(idx):
        advanced = True
        while advanced and 2 * size <= len(idx):
            advanced = False
            lc_now = rem.coeff_in("y", rem.degree_in("y"))
            lc_sp = _to_dense_y(
                lc_now.substitute({"x": MultiPoly.var("x") + MultiPoly.const(Q(x0))}) if x0 else lc_now,
                "x",
                "y",
                K,
            )[0]
            for combo in combinations(idx, size):
                cand = [lc_sp]
                for i in combo:
                    cand = _sp_mul(cand, lifted[i], K)
                mp = _series_poly_to_multipoly(cand, "x", "y", Q(x0))
                _, mp = content_primitive(mp, {"y"})  # strip the Q[x] content
                if mp.is_constant():
                    continue
                quo = rem.try_divide(mp)
                if quo is not None:
                    found_factors.append(mp.normalized())
                    rem = quo.normalized()
                    idx = [i for i in idx if i not in combo]
                    advanced = True
                    break
        size += 1
    if rem.total_degree() > 0:
        found_factors.append(rem.normalized())
    return found_factors


# ---------------------------------------------------------------------------
# irreducibility over Q(params)
# ---------------------------------------------------------------------------


def irreducible_over_rationals(F: MultiPoly, seed=20260826, trials=3):
    """Exact for parameter-free input.  With free parameters: specialize them
    at random small rationals (degree-preserving, squarefree) and factor; one
    irreducible specialization proves irreducibility, consistent splitting
    across all trials reports reducible."""
    params = sorted(F.variables() - {"x", "y"})
    if not params:
        fl = factor_bivariate(F)
        nontrivial = sum(m for _, m in fl.factors)
        return nontrivial == 1

    rng = random.Random(seed)
    deg = F.degree_in_set({"x", "y"})
    done = 0
    attempts = 0
    while done < trials and attempts < 40 * trials:
        attempts += 1
        binding = {
            p: Q(rng.randint(1, 40), rng.randint(1, 7)) * rng.choice([1, -1]) for p in params
        }
        spec = F.substitute({k: MultiPoly.const(v) for k, v in binding.items()})
        if spec.degree_in_set({"x", "y"}) != deg:
            continue  # degree dropped: unlucky specialization
        if square_free_part(spec).total_degree() != spec.total_degree():
            continue
        fl = factor_bivariate(spec)
        if sum(m for _, m in fl.factors) == 1:
            return True
        done += 1
    return False


# ---------------------------------------------------------------------------
# singular points
# ---------------------------------------------------------------------------


@dataclass
class SingularPoint:
    x: Fraction
    y: Fraction
    kind: str  # node | cusp | isolated-point | higher-order

    def to_json(self):
        return {"x": _jnum(self.x), "y": _jnum(self.y), "kind": self.kind}


def _jnum(q):
    return int(q) if q.denominator == 1 else str(q)


class PositiveDimensionalSingularLocus(ComputationError):
    code = "positive-dimensional-singular-locus"


def singular_points(F: MultiPoly, with_counts=False):
    """Rational singular points of a parameter-free squarefree curve, with
    local classification by the quadratic part.

    with_counts=True additionally returns the Sturm count of real candidate
    x-coordinates that are not rational (their points are not enumerated)."""
    if F.variables() - {"x", "y"}:
        raise InputError("singular point search needs bound parameters")
    Fx = F.derivative("x")
    Fy = F.derivative("y")
    if Fx.is_zero() and Fy.is_zero():
        raise InputError("curve is constant")
    g = poly_gcd(F, poly_gcd(Fx, Fy))
    if not g.is_constant():
        raise PositiveDimensionalSingularLocus(
            "every point of the component " + g.canonical_text() + " = 0 is singular"
        )

    # candidate x-coordinates: common roots of the two elimination resultants
    def res_or_self(A, B, var):
        if A.degree_in(var) == 0:
            return A
        if B.degree_in(var) == 0:
            return B
        return sylvester_resultant(A, B, var)

    r1 = res_or_self(F, Fx, "y")
    r2 = res_or_self(F, Fy, "y")
    gx = poly_gcd(r1, r2)
    candidates_x = set()
    nonrational_note = 0
    if gx.is_zero():
        raise PositiveDimensionalSingularLocus("singular locus is not zero-dimensional")
    if not gx.is_constant():
        ints = _multipoly_to_univ(gx, "x")
        roots = _rational_roots_int(ints)
        candidates_x |= set(roots)
        residual = ints
        for r in roots:
            while True:
                quo = _divide_root(residual, r)
                if quo is None:
                    break
                residual = quo
        if _zdeg(residual) >= 1:
            nonrational_note += count_real_roots(residual)

    out = []
    for x0 in sorted(candidates_x):
        fy = F.substitute({"x": MultiPoly.const(x0)})
        fxy = Fx.substitute({"x": MultiPoly.const(x0)})
        fyy = Fy.substitute({"x": MultiPoly.const(x0)})
        gy = poly_gcd(fy, poly_gcd(fxy, fyy))
        if gy.is_constant():
            continue
        if gy.degree_in("y") == 0:
            continue
        for y0 in _rational_roots_int(_multipoly_to_univ(gy, "y")):
            if (
                F.evaluate({"x": x0, "y": y0}) == 0
                and Fx.evaluate({"x": x0, "y": y0}) == 0
                and Fy.evaluate({"x": x0, "y": y0}) == 0
            ):
                out.append(SingularPoint(x0, y0, _classify_singularity(F, x0, y0)))
    out.sort(key=lambda s: (s.x, s.y))
    if with_counts:
        return out, nonrational_note
    return out


def _divide_root(p, r: Fraction):
    """Divide integer poly by (x - r) for rational r = a/b via (b*x - a)."""
    b, a = r.denominator, r.numerator
    div = [-a, b]
    res = _zdivexact(p, div)
    return res


def _rational_roots_int(p) -> list:
    p = _ztrim(list(p))
    if not p:
        return []
    roots = []
    k = 0
    while p and p[0] == 0:
        p = p[1:]
        k += 1
    if k:
        roots.append(Fraction(0))
    if _zdeg(p) >= 1:
        a0, an = abs(p[0]), abs(p[-1])
        for num in _divisors(a0):
            for den in _divisors(an):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if cand not in roots and _feval([Fraction(c) for c in p], cand) == 0:
                        roots.append(cand)
    return sorted(roots)


def _divisors(n):
    n = abs(n)
    if n == 0:
        return []
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _classify_singularity(F: MultiPoly, x0, y0) -> str:
    local = F.substitute(
        {"x": MultiPoly.var("x") + MultiPoly.const(x0), "y": MultiPoly.var("y") + MultiPoly.const(y0)}
    )
    qa = qb = qc = Q(0)
    lowest = min(sum(e for _, e in m) for m in local.terms)
    if lowest >= 3:
        return "higher-order"
    for m, c in local.terms.items():
        if sum(e for _, e in m) == 2:
            d = dict(m)
            if d.get("x") == 2:
                qa = c
            elif d.get("y") == 2:
                qc = c
            else:
                qb = c
    disc = qb * qb - 4 * qa * qc
    if disc > 0:
        return "node"
    if disc < 0:
        return "isolated-point"
    return "cusp"

# ---------------------------------------------------------------------------
# symmetry, asymptotes, conics
# ---------------------------------------------------------------------------


def _associate_equal(A: MultiPoly, B: MultiPoly) -> bool:
    return A.normalized() == B.normalized()


def symmetry_flags(F: MultiPoly) -> dict:
    """Mirror/point symmetries of the zero set detected exactly on the
    defining polynomial."""
    mx = F.substitute({"x": -MultiPoly.var("x")})
    my = F.substitute({"y": -MultiPoly.var("y")})
    mboth = mx.substitute({"y": -MultiPoly.var("y")})
    about_y_axis = _associate_equal(F, mx)
    about_x_axis = _associate_equal(F, my)
    about_origin = _associate_equal(F, mboth)
    swap = F.substitute({"x": MultiPoly.var("y"), "y": MultiPoly.var("x")})
    return {
        "about_x_axis": about_x_axis,
        "about_y_axis": about_y_axis,
        "about_origin": about_origin,
        "about_diagonal": _associate_equal(F, swap),
    }


def vertical_asymptotes(F: MultiPoly) -> dict:
    """Vertical asymptotes x = c from the leading y-coefficient.

    Rational roots come with multiplicities; a non-constant square-free
    residual is reported for roots that are not rational."""
    dy = F.degree_in("y")
    if dy == 0:
        return {"lines": [], "residual": None}
    lc = F.coeff_in("y", dy)
    if lc.variables() - {"x"}:
        raise InputError("asymptote search needs bound parameters")
    if lc.is_constant():
        return {"lines": [], "residual": None}
    ints = _multipoly_to_univ(lc, "x")
    lines = []
    residual = ints
    for r in _rational_roots_int(ints):
        mult = 0
        while True:
            quo = _divide_root(residual, r)
            if quo is None:
                break
            residual = quo
            mult += 1
        lines.append({"x": r, "multiplicity": mult})
    res_poly = None
    if _zdeg(residual) >= 1:
        res_poly = square_free_part(_univ_to_multipoly(_zprimitive(residual)[0], "x"))
    return {"lines": lines, "residual": res_poly}


def horizontal_asymptotes(F: MultiPoly) -> dict:
    swapped = F.substitute({"x": MultiPoly.var("y"), "y": MultiPoly.var("x")})
    got = vertical_asymptotes(swapped)
    lines = [{"y": entry["x"], "multiplicity": entry["multiplicity"]} for entry in got["lines"]]
    residual = got["residual"]
    if residual is not None:
        residual = residual.substitute({"x": MultiPoly.var("y")})
    return {"lines": lines, "residual": residual}


def identify_conic(F: MultiPoly) -> dict:
    """Classification of a degree-2 curve: kind, center, squared semi-axes
    (exact, for axis-aligned central conics)."""
    if F.variables() - {"x", "y"}:
        raise InputError("conic identification needs bound parameters")
    if F.total_degree() != 2:
        raise InputError("not a conic: total degree is not 2")
    coef = {}
    for m, c in F.terms.items():
        d = dict(m)
        coef[(d.get("x", 0), d.get("y", 0))] = c
    A = coef.get((2, 0), Q(0))
    B = coef.get((1, 1), Q(0))
    C = coef.get((0, 2), Q(0))
    D = coef.get((1, 0), Q(0))
    E = coef.get((0, 1), Q(0))
    G = coef.get((0, 0), Q(0))
    disc = B * B - 4 * A * C
    # full 3x3 determinant decides degeneracy
    det3 = (
        A * (C * G - E * E / 4)
        - (B / 2) * (B * G / 2 - E * D / 4)
        + (D / 2) * (B * E / 4 - C * D / 2)
    )
    out = {"discriminant": disc, "degenerate": det3 == 0}
    if disc < 0:
        kind = "ellipse" if not out["degenerate"] else "point"
        if A == C and B == 0 and kind == "ellipse":
            kind = "circle"
    elif disc > 0:
        kind = "hyperbola" if not out["degenerate"] else "intersecting-lines"
    else:
        kind = "parabola" if not out["degenerate"] else "parallel-lines"
    out["kind"] = kind
    if disc != 0:
        # center solves the gradient system 2Ax + By + D = 0, Bx + 2Cy + E = 0
        cx = (B * E - 2 * C * D) / (4 * A * C - B * B)
        cy = (B * D - 2 * A * E) / (4 * A * C - B * B)
        out["center"] = (cx, cy)
        if B == 0 and not out["degenerate"] and A != 0 and C != 0:
            k = -F.evaluate({"x": cx, "y": cy})
            out["semi_axes_sq"] = tuple(sorted((k / A, k / C), key=lambda v: -v))
    return out


def conic_through_points(points) -> MultiPoly:
    """Unique conic through 5 points in general position (exact nullspace)."""
    pts = [(Q(x), Q(y)) for x, y in points]
    if len(pts) != 5:
        raise InputError("exactly five points are required")
    rows = [[x * x, x * y, y * y, x, y, Q(1)] for x, y in pts]
    ns = _q_nullspace(rows, 6)
    if len(ns) != 1:
        raise InputError("points do not determine a unique conic")
    v = ns[0]
    mono = [
        MultiPoly.var("x", 2),
        MultiPoly.var("x") * MultiPoly.var("y"),
        MultiPoly.var("y", 2),
        MultiPoly.var("x"),
        MultiPoly.var("y"),
        MultiPoly.const(Q(1)),
    ]
    out = MultiPoly()
    for c, m in zip(v, mono):
        if c:
            out = out + MultiPoly.const(c) * m
    return out.normalized()


def _q_nullspace(rows, width):
    M = [row[:] for row in rows]
    pivots = {}
    r = 0
    for c in range(width):
        piv = None
        for i in range(r, len(M)):
            if M[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = M[r][c]
        M[r] = [v / inv for v in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [M[i][j] - f * M[r][j] for j in range(width)]
        pivots[c] = r
        r += 1
    basis = []
    for fc in [c for c in range(width) if c not in pivots]:
        v = [Q(0)] * width
        v[fc] = Q(1)
        for c, row in pivots.items():
            v[c] = -M[row][fc]
        basis.append(v)
    return basis


# ---------------------------------------------------------------------------
# inflection candidates of a rational parametrization
# ---------------------------------------------------------------------------


def inflection_candidates(point: ParametricPoint) -> dict:
    """Parameter values where the curvature numerator x'y'' - y'x'' vanishes.

    Factors that only vanish at excluded parameter values (poles reached in
    the limit) are divided out; the cleaned polynomial's rational roots and,
    when it is parameter-free, isolated real roots are reported."""
    if not point.is_rational():
        raise InputError("inflection analysis needs a rational parametrization")
    u = point.parameter
    x = point.x.e
    y = point.y.e
    x1 = x.derivative(u)
    y1 = y.derivative(u)
    x2 = x1.derivative(u)
    y2 = y1.derivative(u)
    curv = x1 * y2 - y1 * x2
    num = curv.num
    if num.is_zero():
        return {"numerator": MultiPoly(), "candidates": MultiPoly(), "rational_roots": [],
                "intervals": [], "note": "curvature numerator is identically zero (a line)"}
    _, num = content_primitive(num, {u})
    cleaned = num
    for v in point.exclusions.values:
        while True:
            quo = cleaned.try_divide(
                MultiPoly.var(u) * MultiPoly.const(v.denominator) - MultiPoly.const(v.numerator)
            )
            if quo is None:
                break
            cleaned = quo
    for p in point.exclusions.polys:
        while True:
            quo = cleaned.try_divide(p)
            if quo is None:
                break
            cleaned = quo
    _, cleaned = content_primitive(cleaned, {u})
    cleaned = cleaned.normalized()
    out = {"numerator": num.normalized(), "candidates": cleaned}
    if cleaned.variables() <= {u}:
        ints = _multipoly_to_univ(cleaned, u)
        out["rational_roots"] = _rational_roots_int(ints)
        out["intervals"] = [(lo, hi) for lo, hi in isolate_real_roots(ints)]
        out["real_root_count"] = count_real_roots(ints)
    else:
        out["rational_roots"] = []
        out["intervals"] = []
    return out


# ---------------------------------------------------------------------------
# extraneous factor stripping and the combined report
# ---------------------------------------------------------------------------


class NoFactorMatches(ComputationError):
    code = "no-factor-matches"


def strip_extraneous(F: MultiPoly, point: ParametricPoint) -> tuple:
    """Split the factors of F into those vanishing on the parametrized locus
    and the extraneous rest.  Returns (kept_product, dropped_factors)."""
    fl = factor_bivariate(F) if not F.variables() - {"x", "y"} else None
    if fl is None:
        # with live parameters only the content split is available
        content, prim = content_primitive(F, {"x", "y"})
        kept = prim if verify_on_curve(prim, point) else None
        if kept is None:
            raise NoFactorMatches("no factor of the input vanishes on the locus")
        return kept.normalized(), [] if content.is_constant() else [content.normalized()]
    kept = MultiPoly.const(Q(1))
    dropped = []
    for fac, mult in fl.factors:
        if verify_on_curve(fac, point):
            kept = kept * fac
        else:
            dropped.append(fac)
    if kept.is_constant():
        raise NoFactorMatches("no factor of the input vanishes on the locus")
    return kept.normalized(), dropped


def analyze_curve(F: MultiPoly, point: ParametricPoint | None = None,
                  seed: int = 20260826) -> dict:
    """Full report on an implicit curve: factors (with extraneous-candidate
    flags), irreducibility, singular points, symmetry, asymptotes, and conic
    classification where applicable.

    The seed fixes the random specializations behind parametric
    irreducibility verdicts, so identical requests give identical reports."""
    F = F.normalized()
    report = {
        "curve": F.canonical_text(),
        "degree": F.degree_in_set({"x", "y"}),
        "notes": [],
    }
    params = sorted(F.variables() - {"x", "y"})
    if params:
        report["parameters"] = params

    # factors
    factors_json = []
    if not params:
        fl = factor_bivariate(F)
        for fac, mult in fl.factors:
            entry = {
                "poly": fac.canonical_text(),
                "multiplicity": mult,
                "degree": fac.degree_in_set({"x", "y"}),
            }
            if point is not None:
                entry["extraneous_candidate"] = not verify_on_curve(fac, point)
            else:
                entry["extraneous_candidate"] = (
                    len(fl.factors) > 1
                    and (fac.degree_in("y") == 0 or fac.degree_in("x") == 0)
                )
            if entry["degree"] == 2:
                conic = identify_conic(fac)
                entry["conic"] = _conic_json(conic)
            factors_json.append(entry)
        report["irreducible"] = sum(m for _, m in fl.factors) == 1
    else:
        content, prim = content_primitive(F, {"x", "y"})
        if not content.is_constant():
            factors_json.append(
                {"poly": content.canonical_text(), "multiplicity": 1,
                 "degree": 0, "extraneous_candidate": True,
                 "note": "parameter-only content"}
            )
        factors_json.append(
            {"poly": prim.canonical_text(), "multiplicity": 1,
             "degree": prim.degree_in_set({"x", "y"}),
             "extraneous_candidate": False}
        )
        report["irreducible"] = irreducible_over_rationals(prim, seed=seed)
        report["notes"].append(
            "irreducibility over the parameters decided by seeded specialization"
        )
    report["factors"] = factors_json

    report["symmetry"] = symmetry_flags(F)

    if not params:
        try:
            sp, nonrational = singular_points(square_free_part(F), with_counts=True)
            report["singular_points"] = [s.to_json() for s in sp]
            if nonrational:
                report["notes"].append(
                    f"{nonrational} further real singular candidate abscissas are not rational"
                )
        except PositiveDimensionalSingularLocus as e:
            report["singular_points"] = []
            report["notes"].append(str(e))
        report["asymptotes"] = {
            "vertical": _asym_json(vertical_asymptotes(F), "x"),
            "horizontal": _asym_json(horizontal_asymptotes(F), "y"),
        }
        if report["degree"] == 2:
            report["conic"] = _conic_json(identify_conic(F))
    return report


def _asym_json(d, axis):
    out = [
        {axis: _jnum(entry[axis]), "multiplicity": entry["multiplicity"]}
        for entry in d["lines"]
    ]
    if d["residual"] is not None:
        out.append({"irrational_roots_of": d["residual"].canonical_text()})
    return out


def _conic_json(c):
    out = {"kind": c["kind"], "degenerate": c["degenerate"]}
    if "center" in c:
        out["center"] = [_jnum(c["center"][0]), _jnum(c["center"][1])]
    if "semi_axes_sq" in c:
        out["semi_axes_sq"] = [_jnum(v) for v in c["semi_axes_sq"]]
    return out
