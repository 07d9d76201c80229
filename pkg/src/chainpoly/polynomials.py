"""Dense univariate polynomials with exact integer or rational coefficients.

The whole package funnels through this representation: a polynomial is an
immutable tuple of coefficients in ascending order with no trailing zeros,
each coefficient a Python ``int`` or a ``fractions.Fraction`` in lowest
terms.  The zero polynomial is the empty tuple and reports degree -1.
No floating point enters any computation here.

Besides ring arithmetic the module provides the coefficient-level
operations used by the combinatorial layers: reversal x^n p(1/x), the
r-th Veronese section (every r-th coefficient), monomial substitution
p(x^k), gcd / exact division / squarefree machinery over Q, and the shape
predicates (symmetry, unimodality, log-concavity, mode) that the
certification reports quote.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Optional, Union

from .errors import DomainError, InvalidDegreeError

Scalar = Union[int, Fraction]


def _as_scalar(value) -> Scalar:
    """Coerce to int or Fraction, collapsing integral fractions to int."""
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else value
    raise TypeError("coefficients must be int or Fraction, got %r" % (value,))


class Poly:
    """Immutable dense polynomial over Z or Q.

    >>> p = Poly([1, 4, 1])
    >>> p.degree
    2
    >>> p(Fraction(1, 2))
    Fraction(13, 4)
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_as_scalar(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial, -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._coeffs)

    @property
    def leading_coefficient(self) -> Scalar:
        if not self._coeffs:
            return 0
        return self._coeffs[-1]

    def coefficient(self, i: int) -> Scalar:
        """Coefficient of x^i, zero beyond the degree."""
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return 0

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return "Poly(%r)" % (list(self._coeffs),)

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self):
        return Poly([-c for c in self._coeffs])

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise DomainError("exponent must be a nonnegative integer")
        result = Poly([1])
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x: Scalar) -> Scalar:
        acc = Fraction(0) if isinstance(x, Fraction) else 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return _as_scalar(acc) if isinstance(acc, Fraction) else acc

    def scale(self, c: Scalar) -> "Poly":
        return Poly([ci * c for ci in self._coeffs])

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self._coeffs)][1:])

    def inflate(self, k: int) -> "Poly":
        """Substitute x^k for x."""
        if not isinstance(k, int) or k < 1:
            raise DomainError("monomial exponent must be a positive integer")
        if not self._coeffs:
            return Poly()
        out = [0] * ((len(self._coeffs) - 1) * k + 1)
        for i, c in enumerate(self._coeffs):
            out[i * k] = c
        return Poly(out)

    def reverse(self, n: int) -> "Poly":
        """x^n * p(1/x) for n >= deg(p); reverses the coefficient list."""
        if n < self.degree:
            raise InvalidDegreeError(
                "reversal degree %d is below the polynomial degree %d" % (n, self.degree)
            )
        out = [0] * (n + 1)
        for i, c in enumerate(self._coeffs):
            out[n - i] = c
        return Poly(out)


ZERO = Poly()
ONE = Poly([1])
X = Poly([0, 1])


def parse_poly(text: str) -> Poly:
    """Parse the ascending comma-separated coefficient format.

    Integers or rationals written p/q are accepted: "1,28,21" or "1/3,2".
    """
    if not isinstance(text, str) or not text.strip():
        raise DomainError("empty polynomial text")
    coeffs = []
    for field in text.split(","):
        field = field.strip()
        if not field:
            raise DomainError("empty coefficient in %r" % text)
        try:
            coeffs.append(int(field) if "/" not in field else Fraction(field))
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError("bad coefficient %r: %s" % (field, exc)) from None
    return Poly(coeffs)


def format_poly(p: Poly) -> str:
    """Inverse of parse_poly; the zero polynomial prints as "0"."""
    if p.is_zero:
        return "0"
    return ",".join(str(c) for c in p.coeffs)


def veronese(p: Poly, r: int) -> Poly:
    """Section operator keeping coefficients of x^0, x^r, x^(2r), ..."""
    if not isinstance(r, int) or r < 1:
        raise DomainError("Veronese order must be a positive integer")
    return Poly(p.coeffs[::r])


def content_and_primitive(p: Poly) -> tuple:
    """Split p = content * primitive with positive rational content.

    The primitive part has coprime integer coefficients and the sign of p.
    The zero polynomial returns (Fraction(0), ZERO).
    """
    if p.is_zero:
        return Fraction(0), ZERO
    denom = 1
    for c in p.coeffs:
        if isinstance(c, Fraction):
            denom = denom * c.denominator // math.gcd(denom, c.denominator)
    ints = [int(c * denom) for c in p.coeffs]
    g = 0
    for c in ints:
        g = math.gcd(g, abs(c))
    return Fraction(g, denom), Poly([c // g for c in ints])


def primitive_part(p: Poly) -> Poly:
    return content_and_primitive(p)[1]


def _poly_rem(a: Poly, b: Poly) -> Poly:
    """Remainder of a by b over Q; b must be nonzero."""
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    bc = b.coeffs
    db = len(bc) - 1
    inv_lead = Fraction(1, 1) / Fraction(bc[-1])
    for i in range(len(rem) - 1, db - 1, -1):
        if rem[i] == 0:
            continue
        factor = rem[i] * inv_lead
        rem[i] = 0
        for j in range(db):
            rem[i - db + j] -= factor * bc[j]
    return Poly(rem)


def exact_div(a: Poly, b: Poly) -> Poly:
    """Quotient a / b, raising DomainError unless the division is exact."""
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    if a.is_zero:
        return ZERO
    rem = list(a.coeffs)
    bc = b.coeffs
    db = len(bc) - 1
    da = len(rem) - 1
    if da < db:
        raise DomainError("inexact polynomial division")
    inv_lead = Fraction(1, 1) / Fraction(bc[-1])
    quot = [0] * (da - db + 1)
    for i in range(da, db - 1, -1):
        if rem[i] == 0:
            continue
        factor = rem[i] * inv_lead
        quot[i - db] = factor
        rem[i] = 0
        for j in range(db):
            rem[i - db + j] -= factor * bc[j]
    if any(c != 0 for c in rem):
        raise DomainError("inexact polynomial division")
    return Poly(quot)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic-free gcd: primitive integer representative with positive lead.

    Constant nonzero gcds normalize to 1, so coprime inputs return ONE.
    """
    a = primitive_part(a)
    b = primitive_part(b)
    while not b.is_zero:
        a, b = b, primitive_part(_poly_rem(a, b))
    if a.is_zero:
        return ZERO
    if a.leading_coefficient < 0:
        a = -a
    if a.degree == 0:
        return ONE
    return a


def squarefree_part(p: Poly) -> Poly:
    """Primitive squarefree polynomial with the same distinct roots as p."""
    if p.is_zero:
        raise DomainError("the zero polynomial has no squarefree part")
    prim = primitive_part(p)
    if prim.degree == 0:
        return ONE
    g = poly_gcd(prim, prim.derivative())
    sf = primitive_part(exact_div(prim, g))
    if sf.leading_coefficient < 0:
        sf = -sf
    return sf


def squarefree_decomposition(p: Poly) -> list:
    """Yun decomposition: [(f_1, 1), (f_2, 2), ...] with pairwise coprime
    squarefree f_i, nonconstant factors only, product of f_i^i = p up to a
    rational constant."""
    if p.is_zero:
        raise DomainError("the zero polynomial has no squarefree decomposition")
    prim = primitive_part(p)
    if prim.degree == 0:
        return []
    g = poly_gcd(prim, prim.derivative())
    if g.degree == 0:
        return [(squarefree_part(prim), 1)]
    out = []
    c = exact_div(prim, g)
    d = exact_div(prim.derivative(), g) - c.derivative()
    k = 1
    while c.degree > 0:
        f = poly_gcd(c, d)
        if f.degree > 0:
            out.append((f, k))
        c = exact_div(c, f)
        d = exact_div(d, f) - c.derivative()
        k += 1
    return out


def h_from_f(f: Poly, n: int) -> Poly:
    """h(x) = sum over i of f_i x^i (1-x)^(n-i), for n >= deg(f)."""
    if n < f.degree:
        raise InvalidDegreeError("transform degree below polynomial degree")
    one_minus_x = Poly([1, -1])
    powers = [ONE]
    for _ in range(n):
        powers.append(powers[-1] * one_minus_x)
    out = Poly()
    for i, c in enumerate(f.coeffs):
        if c:
            out = out + (X ** i) * powers[n - i].scale(c)
    return out


def f_from_h(h: Poly, n: int) -> Poly:
    """Inverse of h_from_f: f(x) = sum over i of h_i x^i (1+x)^(n-i)."""
    if n < h.degree:
        raise InvalidDegreeError("transform degree below polynomial degree")
    one_plus_x = Poly([1, 1])
    powers = [ONE]
    for _ in range(n):
        powers.append(powers[-1] * one_plus_x)
    out = Poly()
    for i, c in enumerate(h.coeffs):
        if c:
            out = out + (X ** i) * powers[n - i].scale(c)
    return out


def has_nonneg_coeffs(p: Poly) -> bool:
    return all(c >= 0 for c in p.coeffs)


def is_symmetric(p: Poly, n: int) -> bool:
    """True when coefficient i equals coefficient n-i for all i.

    The center of symmetry n/2 must be supplied: a polynomial can be
    symmetric with respect to several centers (the zero polynomial is
    symmetric with respect to all of them).
    """
    if not isinstance(n, int) or n < -1:
        raise DomainError("symmetry degree must be an integer >= -1")
    if p.is_zero:
        return True
    if p.degree > n:
        return False
    return all(p.coefficient(i) == p.coefficient(n - i) for i in range(n + 1))


def unimodal_peaks(p: Poly) -> tuple:
    """Indices k with coeffs ascending up to k and descending after.

    Empty tuple means not unimodal (or the zero polynomial).
    """
    cs = p.coeffs
    if not cs:
        return ()
    m = len(cs)
    prefix = [True] * m
    for i in range(1, m):
        prefix[i] = prefix[i - 1] and cs[i - 1] <= cs[i]
    suffix = [True] * m
    for i in range(m - 2, -1, -1):
        suffix[i] = suffix[i + 1] and cs[i] >= cs[i + 1]
    return tuple(k for k in range(m) if prefix[k] and suffix[k])


def is_unimodal(p: Poly) -> bool:
    return p.is_zero or bool(unimodal_peaks(p))


def is_log_concave(p: Poly) -> bool:
    """c_i^2 >= c_(i-1) c_(i+1) for all interior indices."""
    cs = p.coeffs
    return all(cs[i] * cs[i] >= cs[i - 1] * cs[i + 1] for i in range(1, len(cs) - 1))


def mode(p: Poly) -> Optional[Scalar]:
    """Mode of a nonnegative coefficient sequence, if one exists.

    A unique maximum at index i gives mode i; a tie between adjacent
    indices i, i+1 gives the half-integer i + 1/2; any other tie pattern
    has no mode and returns None.  Degree-0 polynomials have mode 0.
    """
    cs = p.coeffs
    if not cs:
        raise DomainError("the zero polynomial has no mode")
    if any(c < 0 for c in cs):
        raise DomainError("mode requires nonnegative coefficients")
    top = max(cs)
    where = [i for i, c in enumerate(cs) if c == top]
    if len(where) == 1:
        return where[0]
    if len(where) == 2 and where[1] == where[0] + 1:
        return Fraction(2 * where[0] + 1, 2)
    return None
