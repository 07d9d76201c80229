"""Exact real-rootedness and interlacing certificates.

Everything here runs over Z and Q only.  Real-rootedness of p is decided
on the squarefree part sf = p / gcd(p, p'): p has all roots real exactly
when the Sturm chain of sf counts deg(sf) distinct real roots between
-inf and +inf.  Root isolation refines Cauchy-bound intervals by rational
bisection, landing exactly on rational roots when a midpoint happens to
hit one.

Interlacing p <= q (every root of q weakly separated by a root of p,
largest root of q outermost) is decided without ever comparing two
algebraic numbers from different polynomials: the distinct roots of p*q
are isolated once, the multiplicity of each in p and in q is read off
through gcd chains, and the weak alternation is checked block by block
in descending order.  Conventions: the zero polynomial interlaces and is
interlaced by every real-rooted polynomial, and nonzero constants
interlace every real-rooted polynomial of degree at most one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import DomainError, NotRealRootedError
from .polynomials import (
    Poly,
    _poly_rem,
    poly_gcd,
    primitive_part,
    squarefree_decomposition,
    squarefree_part,
)

NEG_INF = object()
POS_INF = object()


def _sign_at(p: Poly, x) -> int:
    """Sign of p at a rational point or at +-infinity, by exact arithmetic.

    For x = u/v the value v^deg * p(u/v) is an integer whose sign is
    computed without constructing any Fraction.
    """
    cs = p.coeffs
    if not cs:
        return 0
    if x is POS_INF:
        lc = cs[-1]
        return 1 if lc > 0 else -1
    if x is NEG_INF:
        lc = cs[-1]
        sign = 1 if lc > 0 else -1
        return sign if (len(cs) - 1) % 2 == 0 else -sign
    if isinstance(x, int):
        u, v = x, 1
    else:
        u, v = x.numerator, x.denominator
    # Horner on the integer v^d * p(u/v): acc = acc * u + c_i * v^(d-i).
    d = len(cs) - 1
    vp = [1] * (d + 1)
    for i in range(1, d + 1):
        vp[i] = vp[i - 1] * v
    acc = 0
    for i in range(d, -1, -1):
        acc = acc * u + cs[i] * vp[d - i]
    if acc > 0:
        return 1
    if acc < 0:
        return -1
    return 0


@lru_cache(maxsize=None)
def sturm_chain(p: Poly) -> tuple:
    """Sturm chain of p with each member reduced to a primitive integer
    polynomial (positive rescaling only, so all signs are preserved)."""
    chain = [primitive_part(p)]
    if chain[0].degree >= 1:
        chain.append(primitive_part(chain[0].derivative()))
        while not chain[-1].is_zero:
            rem = _poly_rem(chain[-2], chain[-1])
            if rem.is_zero:
                break
            chain.append(primitive_part(-rem))
    return tuple(chain)


def _variations(chain: tuple, x) -> int:
    count = 0
    prev = 0
    for member in chain:
        s = _sign_at(member, x)
        if s == 0:
            continue
        if prev != 0 and s != prev:
            count += 1
        prev = s
    return count


def count_roots_halfopen(sf: Poly, a, b) -> int:
    """Distinct real roots of squarefree sf in (a, b]; a, b rational or
    the infinity sentinels."""
    chain = sturm_chain(sf)
    return _variations(chain, a) - _variations(chain, b)


def count_distinct_real_roots(sf: Poly) -> int:
    return count_roots_halfopen(sf, NEG_INF, POS_INF)


def cauchy_bound(p: Poly) -> Fraction:
    """All complex roots of p lie strictly inside |z| < bound."""
    cs = p.coeffs
    if len(cs) <= 1:
        return Fraction(1)
    lead = abs(Fraction(cs[-1]))
    biggest = max(abs(Fraction(c)) for c in cs[:-1])
    return 1 + biggest / lead


def _isolate_squarefree(u: Poly) -> list:
    """Disjoint isolating intervals for the real roots of squarefree u.

    Returns ascending [(lo, hi)] with lo == hi for an exact rational root
    and otherwise u(lo) != 0 != u(hi) with exactly one root in (lo, hi).
    """
    if u.degree < 1:
        return []
    bound = cauchy_bound(u)
    lo, hi = -bound, bound
    out = []
    total = count_roots_halfopen(u, lo, hi)
    stack = [(lo, hi, total)]
    while stack:
        a, b, k = stack.pop()
        if k == 0:
            continue
        if k == 1:
            out.append((a, b))
            continue
        m = (a + b) / 2
        if _sign_at(u, m) == 0:
            out.append((m, m))
            eps = (b - a) / 4
            while (
                _sign_at(u, m - eps) == 0
                or _sign_at(u, m + eps) == 0
                or count_roots_halfopen(u, m - eps, m + eps) > 1
            ):
                eps /= 2
            left = count_roots_halfopen(u, a, m - eps)
            right = count_roots_halfopen(u, m + eps, b)
            if left:
                stack.append((a, m - eps, left))
            if right:
                stack.append((m + eps, b, right))
        else:
            left = count_roots_halfopen(u, a, m)
            if left:
                stack.append((a, m, left))
            if k - left:
                stack.append((m, b, k - left))
    out.sort(key=lambda iv: iv[0])
    return out


def _refine(u: Poly, interval):
    """Halve an isolating interval of squarefree u, keeping its root."""
    a, b = interval
    if a == b:
        return interval
    m = (a + b) / 2
    if _sign_at(u, m) == 0:
        return (m, m)
    if count_roots_halfopen(u, a, m) == 1:
        return (a, m)
    return (m, b)


def _overlap(i, j) -> bool:
    return not (i[1] < j[0] or j[1] < i[0])


@dataclass(frozen=True)
class RealRootedness:
    """Certificate for the real-rootedness decision on one polynomial."""

    holds: bool
    degree: int
    squarefree_degree: int
    distinct_real_roots: int
    variations_neg_inf: int
    variations_pos_inf: int


@lru_cache(maxsize=None)
def real_rootedness(p: Poly) -> RealRootedness:
    """Decide real-rootedness exactly and return the Sturm certificate.

    The zero polynomial and nonzero constants count as real-rooted.
    """
    if p.is_zero:
        return RealRootedness(True, -1, 0, 0, 0, 0)
    sf = squarefree_part(p)
    if sf.degree == 0:
        return RealRootedness(True, p.degree, 0, 0, 0, 0)
    chain = sturm_chain(sf)
    vneg = _variations(chain, NEG_INF)
    vpos = _variations(chain, POS_INF)
    roots = vneg - vpos
    return RealRootedness(roots == sf.degree, p.degree, sf.degree, roots, vneg, vpos)


def is_real_rooted(p: Poly) -> bool:
    return real_rootedness(p).holds


@dataclass(frozen=True)
class RootIsolation:
    """Real roots of a polynomial as disjoint rational intervals.

    intervals: ascending (lo, hi, multiplicity) with lo == hi exactly when
    the root is rational.  real_root_count counts multiplicity, so
    real_root_count + nonreal_count == degree.
    """

    intervals: tuple
    degree: int
    real_root_count: int
    nonreal_count: int


@lru_cache(maxsize=None)
def isolate_real_roots(p: Poly) -> RootIsolation:
    """Isolate all real roots of nonzero p with multiplicities."""
    if p.is_zero:
        raise DomainError("cannot isolate roots of the zero polynomial")
    factors = squarefree_decomposition(p)
    tagged = []
    for f, mult in factors:
        for iv in _isolate_squarefree(f):
            tagged.append([iv, f, mult])
    # Roots of distinct Yun factors are distinct, so refinement separates.
    changed = True
    while changed:
        changed = False
        for i in range(len(tagged)):
            for j in range(i + 1, len(tagged)):
                if tagged[i][1] is tagged[j][1]:
                    continue
                while _overlap(tagged[i][0], tagged[j][0]):
                    tagged[i][0] = _refine(tagged[i][1], tagged[i][0])
                    tagged[j][0] = _refine(tagged[j][1], tagged[j][0])
                    changed = True
    tagged.sort(key=lambda t: t[0][0])
    intervals = tuple((iv[0], iv[1], mult) for iv, _, mult in tagged)
    real = sum(m for _, _, m in intervals)
    return RootIsolation(intervals, p.degree, real, p.degree - real)


def _multiplicity_in(p: Poly, w: Poly, interval) -> int:
    """Multiplicity in p of the unique root of squarefree w inside interval."""

    def vanishes(g: Poly) -> bool:
        if g.degree < 1:
            return False
        common = poly_gcd(g, w)
        if common.degree < 1:
            return False
        a, b = interval
        if a == b:
            return _sign_at(common, a) == 0
        return count_roots_halfopen(common, a, b) == 1

    mult = 0
    current = primitive_part(p)
    while vanishes(current):
        mult += 1
        current = poly_gcd(current, current.derivative())
    return mult


def _root_blocks(p: Poly, q: Poly) -> list:
    """Descending distinct roots of p*q with multiplicities in each factor."""
    w = squarefree_part(p * q)
    blocks = []
    for iv in _isolate_squarefree(w):
        mp = _multiplicity_in(p, w, iv)
        mq = _multiplicity_in(q, w, iv)
        blocks.append((iv, mp, mq))
    blocks.reverse()
    return [(mp, mq) for _, mp, mq in blocks]


@lru_cache(maxsize=None)
def interlaces(p: Poly, q: Poly) -> bool:
    """Exact decision of the weak root alternation p <= q.

    Reading roots downward the pattern must be
    beta_1 >= alpha_1 >= beta_2 >= alpha_2 >= ... with alphas the roots
    of p and betas the roots of q.  Raises NotRealRootedError unless both
    arguments are real-rooted.
    """
    if not is_real_rooted(p):
        raise NotRealRootedError("first argument is not real-rooted")
    if not is_real_rooted(q):
        raise NotRealRootedError("second argument is not real-rooted")
    if p.is_zero or q.is_zero:
        return True
    s, t = p.degree, q.degree
    if not s <= t <= s + 1:
        return False
    if s == 0:
        return True
    need_beta = True
    for ma, mb in _root_blocks(p, q):
        if abs(ma - mb) > 1:
            return False
        if ma == mb:
            continue  # block starts with whichever symbol is expected
        if ma > mb:
            if need_beta:
                return False
            need_beta = True
        else:
            if not need_beta:
                return False
            need_beta = False
    return True


def is_interlacing_sequence(ps: Sequence[Poly]) -> bool:
    """True when interlaces(ps[i], ps[j]) for every i < j."""
    ps = list(ps)
    for p in ps:
        if not is_real_rooted(p):
            raise NotRealRootedError("sequence member is not real-rooted")
    for i in range(len(ps)):
        for j in range(i + 1, len(ps)):
            if not interlaces(ps[i], ps[j]):
                return False
    return True


def wronskian_semidefinite(p: Poly, q: Poly) -> bool:
    """Whether p'q - pq' never changes sign on the real line.

    Decided exactly: the Wronskian is semidefinite iff each of its real
    roots has even multiplicity (or it vanishes identically).
    """
    w = p.derivative() * q - p * q.derivative()
    if w.is_zero:
        return True
    return all(m % 2 == 0 for _, _, m in isolate_real_roots(w).intervals)
