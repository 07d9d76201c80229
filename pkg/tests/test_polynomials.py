from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chainpoly import (
    ONE,
    X,
    ZERO,
    DomainError,
    Poly,
    exact_div,
    f_from_h,
    format_poly,
    h_from_f,
    is_log_concave,
    is_symmetric,
    is_unimodal,
    mode,
    parse_poly,
    poly_gcd,
    squarefree_decomposition,
    squarefree_part,
    unimodal_peaks,
    veronese,
)

small_polys = st.lists(st.integers(-20, 20), min_size=0, max_size=7).map(Poly)


def test_normalization_drops_trailing_zeros():
    assert Poly([1, 2, 0, 0]) == Poly([1, 2])
    assert Poly([0, 0]) == ZERO
    assert ZERO.degree == -1
    assert ONE.degree == 0


def test_basic_arithmetic():
    p = Poly([1, 2, 1])
    q = Poly([0, 1])
    assert p + q == Poly([1, 3, 1])
    assert p - p == ZERO
    assert p * q == Poly([0, 1, 2, 1])
    assert (X + ONE) ** 2 == Poly([1, 2, 1])
    assert -p == Poly([-1, -2, -1])
    assert p.scale(3) == Poly([3, 6, 3])


def test_fraction_coefficients_survive():
    p = Poly([Fraction(1, 2), 1])
    assert (p * Poly([2])).coeffs == (1, 2)
    assert p(Fraction(1, 2)) == 1


def test_evaluation():
    p = Poly([1, -3, 2])
    assert p(0) == 1
    assert p(1) == 0
    assert p(Fraction(1, 2)) == 0


def test_derivative():
    assert Poly([5, 3, 0, 2]).derivative() == Poly([3, 0, 6])
    assert ONE.derivative() == ZERO
    assert ZERO.derivative() == ZERO


def test_reverse():
    p = Poly([1, 4, 1])
    assert p.reverse(2) == p
    assert Poly([1, 3]).reverse(2) == Poly([0, 3, 1])
    with pytest.raises(DomainError):
        Poly([1, 3]).reverse(0)


def test_inflate():
    assert Poly([1, 2]).inflate(3) == Poly([1, 0, 0, 2])


def test_parse_format_roundtrip():
    assert parse_poly("1,4,1") == Poly([1, 4, 1])
    assert parse_poly(" 1, -2 , 3 ") == Poly([1, -2, 3])
    assert format_poly(Poly([1, 0, 5])) == "1,0,5"
    assert format_poly(ZERO) == "0"
    assert parse_poly(format_poly(Poly([7]))) == Poly([7])
    with pytest.raises(DomainError):
        parse_poly("1,,2")
    with pytest.raises(DomainError):
        parse_poly("")
    with pytest.raises(DomainError):
        parse_poly("1,x")


@given(small_polys)
def test_parse_format_inverse(p):
    assert parse_poly(format_poly(p)) == p


def test_veronese():
    p = Poly([1, 2, 3, 4, 5, 6])
    assert veronese(p, 2) == Poly([1, 3, 5])
    assert veronese(p, 3) == Poly([1, 4])
    assert veronese(p, 1) == p


def test_h_from_f_boolean_cube():
    # chains of the 2-element antichain: {}, {a}, {b}, {a,b} minus incomparables
    f = Poly([1, 2])
    assert h_from_f(f, 1) == Poly([1, 1])
    assert f_from_h(Poly([1, 1]), 1) == f


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=6), st.integers(0, 3))
def test_h_f_transform_roundtrip(coeffs, extra):
    p = Poly(coeffs)
    n = max(p.degree, 0) + extra
    assert f_from_h(h_from_f(p, n), n) == p
    assert h_from_f(f_from_h(p, n), n) == p


def test_exact_div():
    p = Poly([0, 1, 2, 1])
    assert exact_div(p, X) == Poly([1, 2, 1])
    with pytest.raises(DomainError):
        exact_div(Poly([1, 1]), X)
    with pytest.raises(ZeroDivisionError):
        exact_div(p, ZERO)


def test_poly_gcd():
    p = Poly([-1, 0, 1])  # (x-1)(x+1)
    q = Poly([1, 2, 1])   # (x+1)^2
    g = poly_gcd(p, q)
    assert g == Poly([1, 1])
    assert poly_gcd(p, ZERO) == Poly([-1, 0, 1]).scale(1)
    assert poly_gcd(ZERO, ZERO) == ZERO


def test_squarefree():
    p = Poly([1, 1]) ** 3 * Poly([-2, 1])
    assert squarefree_part(p) == Poly([1, 1]) * Poly([-2, 1])
    decomp = squarefree_decomposition(p)
    rebuilt = ONE
    for factor, m in decomp:
        rebuilt = rebuilt * factor ** m
    assert rebuilt == p
    mults = sorted(m for _, m in decomp)
    assert mults == [1, 3]


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=4),
       st.lists(st.integers(-5, 5), min_size=1, max_size=3),
       st.integers(1, 3))
@settings(max_examples=60)
def test_squarefree_ignores_multiplicity(a, b, m):
    p = Poly(a)
    q = Poly(b)
    if p == ZERO or q == ZERO:
        return
    assert squarefree_part(p * q ** m) == squarefree_part(p * q)


def test_symmetry():
    assert is_symmetric(Poly([1, 4, 1]), 2)
    assert is_symmetric(Poly([0, 1, 1]), 3)
    assert not is_symmetric(Poly([1, 2]), 2)
    assert is_symmetric(ZERO, 5)


def test_unimodal_peaks():
    assert unimodal_peaks(Poly([1, 4, 1])) == (1,)
    assert unimodal_peaks(Poly([1, 3, 3, 1])) == (1, 2)
    assert unimodal_peaks(Poly([2, 1, 2])) == ()
    assert is_unimodal(Poly([1, 2, 2, 1]))
    assert not is_unimodal(Poly([2, 1, 2]))


def test_log_concavity():
    assert is_log_concave(Poly([1, 3, 3, 1]))
    assert not is_log_concave(Poly([1, 1, 2]))
    # internal zero breaks log-concavity when flanked by positives
    assert not is_log_concave(Poly([1, 0, 1]))


def test_mode_values():
    assert mode(Poly([1, 4, 1])) == 1
    assert mode(Poly([1, 3, 3, 1])) == Fraction(3, 2)
    assert mode(Poly([5])) == 0
    assert mode(Poly([2, 1, 2])) is None
    assert mode(Poly([1, 2, 2, 2])) is None
    with pytest.raises(DomainError):
        mode(ZERO)
    with pytest.raises(DomainError):
        mode(Poly([1, -1, 1]))


@given(small_polys, small_polys, small_polys)
@settings(max_examples=80)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)


@given(small_polys, small_polys)
@settings(max_examples=60)
def test_degree_of_product(p, q):
    if p == ZERO or q == ZERO:
        assert p * q == ZERO
    else:
        assert (p * q).degree == p.degree + q.degree
