"""Exact field arithmetic and Gaussian combinatorics."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdouble.errors import DivisionByZero, InvalidArgument, ParseError
from qdouble.scalars import (
    V_RS,
    V_SR,
    GaussMonomial,
    LaurentPoly,
    RatFunc,
    format_scalar,
    gauss_binomial,
    gauss_factorial,
    gauss_int,
    parse_scalar,
    poly_gcd,
)


def mono(c, a, b, m=1):
    return RatFunc.monomial(c, a, b, m)


R = mono(1, 1, 0)
S = mono(1, 0, 1)
ONE = RatFunc.one()
ZERO = RatFunc.zero()


# -- spec examples for the field operations ------------------------------


def test_inverse_of_s_minus_r():
    x = S - R
    assert x * x.inv() == ONE


def test_reduction_to_r_plus_s():
    # (r^2 s^-1 - s)/(r s^-1 - 1): oracle = multiply the quotient back
    num = mono(1, 2, -1) - S
    den = mono(1, 1, -1) - ONE
    q = num / den
    assert q * den == num
    assert q == R + S


def test_zero_is_neutral():
    x = (R + S) / (R - S)
    assert ZERO + x == x
    assert x - x == ZERO


def test_division_by_zero_raises():
    with pytest.raises(DivisionByZero):
        ONE / ZERO
    with pytest.raises(DivisionByZero):
        ZERO.inv()


def test_canonical_denominator_is_monic_ordinary():
    x = ONE / (S - R)  # denominator normalizes to r - s with numerator -1
    assert x.den.terms == {(1, 0): Fraction(1), (0, 1): Fraction(-1)}
    assert x.num.terms == {(0, 0): Fraction(-1)}


def test_numerator_carries_the_monomial_part():
    x = mono(1, -2, 3) / (R + S)
    assert x.den.min_exponents() == (0, 0)
    assert x * (R + S) == mono(1, -2, 3)


# -- Gaussian integers, factorials, binomials ----------------------------


def test_gauss_int_examples():
    assert gauss_int(3, V_RS) == (ONE + mono(1, 1, -1) + mono(1, 2, -2)).num
    assert gauss_int(0, V_RS).is_zero
    assert gauss_int(1, V_RS).is_one


def test_gauss_factorial_examples():
    v = V_RS
    assert gauss_factorial(2, v) == gauss_int(2, v)
    assert gauss_factorial(0, v).is_one
    # n = 3: expand the defining product
    expected = gauss_int(1, v) * gauss_int(2, v) * gauss_int(3, v)
    assert gauss_factorial(3, v) == expected


def test_gauss_binomial_examples():
    v = V_RS
    assert gauss_binomial(2, 1, v) == gauss_int(2, v)
    for n in range(7):
        assert gauss_binomial(n, n, v).is_one
        assert gauss_binomial(n, 0, v).is_one
    # (4 choose 2)_v = (1 + v^2)(1 + v + v^2), frozen from expanding factorials
    vp = lambda k: v.power(k, 1)
    expected = (vp(0) + vp(2)) * (vp(0) + vp(1) + vp(2))
    assert gauss_binomial(4, 2, v) == expected


def test_gauss_binomial_range_check():
    with pytest.raises(InvalidArgument):
        gauss_binomial(2, 3, V_RS)


def test_pascal_identity_up_to_10():
    v = V_RS
    for mm in range(0, 10):
        for n in range(0, mm + 1):
            lhs = gauss_binomial(mm + 1, n, v)
            rhs = gauss_binomial(mm, n, v)
            if n >= 1:
                rhs = rhs + v.power(mm + 1 - n, 1) * gauss_binomial(mm, n - 1, v)
            assert lhs == rhs, (mm, n)


def test_alternating_sum_vanishes_up_to_10():
    v = V_RS
    for mm in range(1, 11):
        total = LaurentPoly.zero()
        for k in range(mm + 1):
            term = gauss_binomial(mm, k, v) * v.power(k * (k - 1) // 2, 1)
            total = total + (term if k % 2 == 0 else -term)
        assert total.is_zero, mm


def test_gauss_monomial_fractional_base():
    v = GaussMonomial(Fraction(1, 2), Fraction(-1, 2))
    p = gauss_int(2, v, m=2)
    assert p.terms == {(0, 0): Fraction(1), (1, -1): Fraction(1)}
    with pytest.raises(InvalidArgument):
        gauss_int(2, v, m=1)


# -- gcd machinery --------------------------------------------------------


def poly(pairs, m=1):
    return LaurentPoly({k: Fraction(v) for k, v in pairs.items()}, m)


def test_poly_gcd_common_factor():
    f = poly({(1, 0): 1, (0, 1): 1})            # r + s
    g = poly({(1, 0): 1, (0, 1): -1})           # r - s
    h = poly({(2, 0): 1, (0, 0): 3})            # r^2 + 3
    a = f * h
    b = g * h
    gg = poly_gcd(a, b)
    assert a.divexact(gg) * gg == a
    assert b.divexact(gg) * gg == b
    assert gg == h or gg == h.scale(-1)


def test_poly_gcd_coprime():
    f = poly({(1, 0): 1, (0, 1): 1})
    g = poly({(1, 0): 1, (0, 1): -1})
    assert poly_gcd(f, g).is_constant()


def test_divexact_detects_inexact():
    f = poly({(1, 0): 1, (0, 1): 1})
    g = poly({(1, 0): 1, (0, 0): 1})
    with pytest.raises(InvalidArgument):
        f.divexact(g)


# -- field laws on random values ------------------------------------------


@st.composite
def laurent_polys(draw, max_terms=3, zero_ok=True):
    n = draw(st.integers(0 if zero_ok else 1, max_terms))
    terms = {}
    for k in range(n):
        a = draw(st.integers(-2, 2))
        b = draw(st.integers(-2, 2))
        if k == 0 and not zero_ok:
            c = draw(st.sampled_from([-3, -2, -1, 1, 2, 3]))
        else:
            c = draw(st.integers(-3, 3))
        if c:
            terms[(a, b)] = Fraction(c)
    return LaurentPoly(terms)


@st.composite
def ratfuncs(draw):
    num = draw(laurent_polys())
    den = draw(laurent_polys(max_terms=2, zero_ok=False))
    return RatFunc(num, den)


@given(ratfuncs(), ratfuncs(), ratfuncs())
@settings(max_examples=60, deadline=None)
def test_field_laws(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    assert x * y == y * x
    if not x.is_zero:
        assert x * x.inv() == ONE


@given(ratfuncs())
@settings(max_examples=60, deadline=None)
def test_scalar_text_round_trip(x):
    assert parse_scalar(format_scalar(x), x.m) == x


def test_round_trip_fractional_exponents():
    x = RatFunc.mono_frac(Fraction(3, 2), Fraction(1, 2), Fraction(-3, 2), 2)
    assert parse_scalar(format_scalar(x), 2) == x
    y = parse_scalar("(r^(1/2) - s)/(r - 1)", 2)
    assert y * parse_scalar("r - 1", 2) == parse_scalar("r^(1/2) - s", 2)


def test_parse_scalar_examples():
    assert parse_scalar("r^-1*s") == mono(1, -1, 1)
    assert parse_scalar("1 + 2/3*r s^2") == ONE + mono(Fraction(2, 3), 1, 2)
    assert parse_scalar("(1)/(r - s)") == ONE / (R - S)
    with pytest.raises(ParseError):
        parse_scalar("r +")
    with pytest.raises(ParseError):
        parse_scalar("q^2")


def test_swap_rs():
    x = (R - S) / (R * S + ONE)
    y = x.swap_rs()
    assert y == (S - R) / (R * S + ONE)
    assert y.swap_rs() == x


def test_evaluate_sanity():
    x = (R + S) / (R - S)
    assert x.evaluate(2, 3) == Fraction(5, -1)


def test_powers():
    x = (R + S) / (R - S)
    assert x ** 3 == x * x * x
    assert x ** -2 == (x * x).inv()
    assert x ** 0 == ONE
