"""Cartan data, Euler form values, torus eigenvalues."""

from __future__ import annotations

from fractions import Fraction

import pytest

from qdouble.errors import DimensionMismatch, InvalidArgument
from qdouble.rootdata import (
    RootDatum,
    Weight,
    datum_from_config,
    format_weight,
    parse_weight,
    root_datum,
)


def test_builtin_data_validate():
    for name, m in [("A1", 2), ("A2", 3), ("A3", 4), ("B2", 2), ("C2", 2), ("B3", 2)]:
        d = root_datum(name)
        assert d.m == m, name
        # <i,j> + <j,i> = d_i a_ij for every pair
        for i in range(d.rank):
            for j in range(d.rank):
                assert d.euler[i][j] + d.euler[j][i] == d.sym[i] * d.cartan[i][j]
            assert d.euler[i][i] == d.sym[i]


def test_euler_form_examples():
    a1 = root_datum("A1")
    alpha = a1.root(0)
    assert a1.euler_form(alpha, alpha) == 1

    a2 = root_datum("A2")
    a, b = a2.root(0), a2.root(1)
    assert a2.euler_form(a, b) == -1
    assert a2.euler_form(b, a) == 0

    b2 = root_datum("B2")
    a, b = b2.root(0), b2.root(1)
    assert b2.euler_form(a, b) == -2
    assert b2.euler_form(b, a) == 0


def test_euler_form_bilinear():
    d = root_datum("B3")
    lam = Weight([Fraction(1, 2), Fraction(-1), Fraction(3, 2)])
    lam2 = Weight([Fraction(2), Fraction(1, 2), Fraction(0)])
    mu = Weight([1, 2, -1])
    assert d.euler_form(lam + lam2, mu) == d.euler_form(lam, mu) + d.euler_form(lam2, mu)
    assert d.euler_form(mu, lam + lam2) == d.euler_form(mu, lam) + d.euler_form(mu, lam2)


def test_serre_coefficient_examples():
    a2 = root_datum("A2")
    assert a2.serre_coefficient(0, 1, 0).is_one
    assert a2.serre_coefficient(1, 0, 0).is_one
    # k = 1 cases, frozen by substituting the Euler values <2,1>=0, <1,2>=-1
    assert a2.serre_coefficient(0, 1, 1) == a2.mono(0, 1)     # s
    assert a2.serre_coefficient(1, 0, 1) == a2.mono(-1, 0)    # r^-1
    with pytest.raises(InvalidArgument):
        a2.serre_coefficient(0, 0, 0)
    with pytest.raises(InvalidArgument):
        a2.serre_coefficient(0, 1, 3)


def test_torus_eigenvalue_examples():
    a1 = root_datum("A1")
    alpha = a1.root(0)
    assert a1.torus_eigenvalue("omega", alpha, alpha) == a1.mono(1, -1)
    assert a1.torus_eigenvalue("omega_prime", alpha, alpha) == a1.mono(-1, 1)
    zero = a1.zero_weight()
    assert a1.torus_eigenvalue("omega", alpha, zero).is_one
    assert a1.torus_eigenvalue("omega_prime", alpha, zero).is_one
    # fractional weights stay on the 1/m lattice
    lam = Weight([Fraction(1, 2)])
    val = a1.torus_eigenvalue("omega", alpha, lam)
    assert val == a1.mono(Fraction(1, 2), Fraction(-1, 2))
    with pytest.raises(InvalidArgument):
        a1.torus_eigenvalue("omega", lam, alpha)


def test_invalid_cartan_matrices():
    with pytest.raises(InvalidArgument):
        RootDatum([[2, -1], [0, 2]], [1, 1])          # broken zero symmetry
    with pytest.raises(InvalidArgument):
        RootDatum([[2, 1], [1, 2]], [1, 1])           # positive off-diagonal
    with pytest.raises(InvalidArgument):
        RootDatum([[2, -2], [-2, 2]], [1, 1])         # affine, not finite type
    with pytest.raises(InvalidArgument):
        RootDatum([[2, -1], [-2, 2]], [1, 1])         # bad symmetrizers
    with pytest.raises(InvalidArgument):
        RootDatum([[1]], [1])                         # diagonal not 2


def test_config_escape_hatch():
    d = datum_from_config({"cartan": [[2, -1], [-2, 2]], "sym": [2, 1]})
    assert d.euler == root_datum("B2").euler
    d2 = datum_from_config({"cartan": [[2, -1], [-2, 2]]})
    assert d2.sym == (2, 1)
    d3 = datum_from_config({"type": "a2"})
    assert d3.name == "A2"
    with pytest.raises(InvalidArgument):
        datum_from_config({})


def test_weight_parsing_round_trip():
    d = root_datum("A3")
    w = parse_weight("1/2 a1 + a2 - 3/4 a3", d)
    assert w.coords == (Fraction(1, 2), Fraction(1), Fraction(-3, 4))
    assert parse_weight(format_weight(w), d) == w
    assert parse_weight("0", d).is_zero
    with pytest.raises(DimensionMismatch):
        parse_weight("a5", d)
    with pytest.raises(InvalidArgument):
        parse_weight("1/3 a1", d)  # not on the 1/4 lattice
