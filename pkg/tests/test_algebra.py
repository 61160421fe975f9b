"""Rewriting, Hopf structure maps, braided coproduct/antipode."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from qdouble.algebra import (
    AlgElement,
    TensorElement,
    antipode,
    antipode_inverse,
    braided_antipode_bminus,
    braided_coproduct_bminus,
    coproduct,
    counit,
    double,
    heis_lower,
    heis_upper,
    heisenberg,
    letter,
    lower,
    projected_coproduct_bminus,
    upper,
    word_degree,
)
from qdouble.errors import NoHopfData, NotInBminus, StepBudgetExceeded
from qdouble.rootdata import root_datum
from qdouble.scalars import RatFunc, gauss_binomial, GaussMonomial

A1 = root_datum("A1")
A2 = root_datum("A2")
B2 = root_datum("B2")


def mono(datum, a, b, c=1):
    return datum.mono(a, b, c)


# -- normal forms ----------------------------------------------------------


def test_double_cross_relation_sl2():
    D = double(A1)
    got = (D.E(0) * D.F(0)).nf()
    expected = D.F(0) * D.E(0) + (D.K(0) - D.Kp(0)).scale(
        (mono(A1, 1, 0) - mono(A1, 0, 1)).inv())
    assert got == expected


def test_heisenberg_cross_relation_sl2():
    H = heisenberg(A1)
    got = (H.e(0) * H.f(0)).nf()
    assert got == (H.f(0) * H.e(0)).scale(mono(A1, -1, 1)) + H.one()


def test_torus_conjugation_sl2():
    H = heisenberg(A1)
    got = (H.w(0) * H.e(0) * H.w(0, -1)).nf()
    assert got == H.e(0).scale(mono(A1, 1, -1))


def brute_normal_order(datum, n_e, n_f):
    """Oracle: exhaustively apply e'f -> r^-1 s f e' + 1 to symbol strings.

    Independent of the engine: strings over {'e','f'}, first-occurrence
    strategy, scalars tracked directly.
    """
    vbar = mono(datum, -1, 1)
    terms = {("e" * n_e + "f" * n_f): RatFunc.one(datum.m)}
    while True:
        busy = None
        for w in terms:
            if "ef" in w:
                busy = w
                break
        if busy is None:
            return terms
        c = terms.pop(busy)
        i = busy.index("ef")
        swapped = busy[:i] + "fe" + busy[i + 2:]
        dropped = busy[:i] + busy[i + 2:]
        for w2, c2 in ((swapped, c * vbar), (dropped, c)):
            cur = terms.get(w2)
            total = c2 if cur is None else cur + c2
            if total.is_zero:
                terms.pop(w2, None)
            else:
                terms[w2] = total


def test_normal_order_e2f2_against_oracle():
    H = heisenberg(A1)
    got = (H.e(0) ** 2 * H.f(0) ** 2).nf()
    oracle = brute_normal_order(A1, 2, 2)
    expected = H.zero()
    for w, c in oracle.items():
        word = tuple(letter("f", 0) for ch in w if ch == "f") + \
            tuple(letter("e", 0) for ch in w if ch == "e")
        assert "".join(sorted(w)) == "".join(sorted(w))  # oracle words normal
        expected = expected + AlgElement(H, {word: c})
    assert got == expected
    # frozen degree-0 coefficient from the oracle run
    assert got.terms[()] == RatFunc.one(A1.m) + mono(A1, -1, 1)


def test_normal_form_idempotent_linear_degree_preserving():
    rng = random.Random(7)
    H = heisenberg(A2)
    fams = [("e", 0), ("e", 1), ("f", 0), ("f", 1), ("w", 0), ("w'", 1)]
    for _ in range(25):
        word = tuple(letter(f, i) for f, i in
                     (rng.choice(fams) for _ in range(rng.randint(0, 4))))
        x = H.from_word(word)
        nf1 = x.nf()
        assert nf1 == nf1.nf()
        deg = word_degree(word, A2.rank)
        assert all(word_degree(w, A2.rank) == deg for w in nf1.terms)
    x = H.from_word((letter("e", 0), letter("f", 0)))
    y = H.from_word((letter("f", 1), letter("e", 1)))
    assert (x + y.scale(3)).nf() == x.nf() + y.nf().scale(3)


def test_sl2_normal_form_is_multiplicative():
    rng = random.Random(3)
    D = double(A1)
    fams = ["E", "F", "K", "K'"]
    for _ in range(15):
        w1 = tuple(letter(rng.choice(fams), 0) for _ in range(rng.randint(0, 3)))
        w2 = tuple(letter(rng.choice(fams), 0) for _ in range(rng.randint(0, 3)))
        x, y = D.from_word(w1), D.from_word(w2)
        assert (x * y).nf() == (x.nf() * y.nf()).nf()


def test_serre_relation_normal_forms_to_zero():
    for datum in (A2, B2):
        U = upper(datum)
        L = lower(datum)
        H = heisenberg(datum)
        for i, j in ((0, 1), (1, 0)):
            assert U.serre_relation("E", i, j).nf().is_zero
            assert L.serre_relation("F", i, j).nf().is_zero
            assert H.serre_relation("e", i, j).nf().is_zero
            assert H.serre_relation("f", i, j).nf().is_zero


def test_step_budget_detects_serre_cycle():
    U = upper(A2)
    word = (letter("E", 0), letter("E", 0), letter("E", 1), letter("E", 1))
    with pytest.raises(StepBudgetExceeded):
        U.from_word(word).nf(budget=500)
    U._nf_memo.clear()


# -- Hopf structure ---------------------------------------------------------


def test_coproduct_generators():
    U = upper(A1)
    L = lower(A1)
    one = RatFunc.one(A1.m)
    dE = coproduct(U.E(0))
    assert dE.terms == {
        ((letter("E", 0),), (letter("K'", 0),)): one,
        ((), (letter("E", 0),)): one,
    }
    dF = coproduct(L.F(0))
    assert dF.terms == {
        ((letter("F", 0),), ()): one,
        ((letter("K", 0),), (letter("F", 0),)): one,
    }
    assert coproduct(U.one()).terms == {((), ()): one}


def test_coproduct_f_squared_against_tensor_square_oracle():
    # oracle: multiply (F(x)1 + K(x)F)^2 in the tensor algebra by hand
    L = lower(A1)
    dF = coproduct(L.F(0))
    square = (dF * dF).nf()
    engine = coproduct(L.F(0) * L.F(0))
    assert engine == square
    # frozen: F^2 (x) 1 + (1 + r^-1 s) FK (x) F + K^2 (x) F^2
    lF, lK = letter("F", 0), letter("K", 0)
    one = RatFunc.one(A1.m)
    assert square.terms == {
        ((lF, lF), ()): one,
        ((lF, lK), (lF,)): one + mono(A1, -1, 1),
        ((letter("K", 0, 2),), (lF, lF)): one,
    }


def test_counit_and_antipode_examples():
    D = double(A1)
    assert antipode(D.Kp(0)) == D.Kp(0, -1)
    assert counit(D.K(0)).is_one
    assert counit(D.E(0)).is_zero
    got = antipode(D.E(0) * D.F(0))
    expected = (D.K(0, -1) * D.F(0) * D.E(0) * D.Kp(0, -1)).nf()
    assert got == expected


def test_no_hopf_data_on_heisenberg():
    H = heisenberg(A1)
    with pytest.raises(NoHopfData):
        coproduct(H.e(0))


def _random_words(pres, fams, n, maxlen, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(n):
        length = rng.randint(1, maxlen)
        out.append(tuple(letter(f, rng.choice(idx)) for f, idx in
                         (rng.choice(fams) for _ in range(length))))
    return out


def _coassoc_check(pres, word):
    left = pres.coproduct3_word(word)  # (Delta x id) Delta
    right = {}
    for (w1, w2), c in pres.coproduct_word(word).items():
        for (u1, u2), c2 in pres.coproduct_word(w2).items():
            key = (w1, u1, u2)
            cur = right.get(key)
            total = c * c2 if cur is None else cur + c * c2
            if total.is_zero:
                right.pop(key, None)
            else:
                right[key] = total
    assert left == right, word


def test_coassociativity():
    for datum in (A1, A2):
        idx = list(range(datum.rank))
        U, L = upper(datum), lower(datum)
        for word in _random_words(U, [("E", idx), ("K'", idx)], 12, 4, seed=1):
            _coassoc_check(U, word)
        for word in _random_words(L, [("F", idx), ("K", idx)], 12, 4, seed=2):
            _coassoc_check(L, word)
        HU, HL = heis_upper(datum), heis_lower(datum)
        for word in _random_words(HU, [("e", idx), ("w'", idx)], 8, 3, seed=3):
            _coassoc_check(HU, word)
        for word in _random_words(HL, [("f", idx), ("w", idx)], 8, 3, seed=4):
            _coassoc_check(HL, word)


def _antipode_axiom_check(pres, word):
    x = pres.from_word(word)
    eps = pres.counit(x)
    left = pres.zero()
    right = pres.zero()
    for (w1, w2), c in pres.coproduct_word(word).items():
        s1 = AlgElement(pres, pres.antipode_word(w1))
        s2 = AlgElement(pres, pres.antipode_word(w2))
        left = left + (s1 * pres.from_word(w2)).scale(c)
        right = right + (pres.from_word(w1) * s2).scale(c)
    target = pres.scalar_elem(eps)
    assert left.nf() == target, word
    assert right.nf() == target, word


def test_antipode_axiom():
    # rank 1: words up to length 4; rank 2 scoped to length 3 (see notes on
    # the non-confluent Serre orientation at length >= 4)
    U, L = upper(A1), lower(A1)
    for word in _random_words(U, [("E", [0]), ("K'", [0])], 10, 4, seed=5):
        _antipode_axiom_check(U, word)
    for word in _random_words(L, [("F", [0]), ("K", [0])], 10, 4, seed=6):
        _antipode_axiom_check(L, word)
    idx = [0, 1]
    for word in _random_words(upper(A2), [("E", idx), ("K'", idx)], 8, 3, seed=7):
        _antipode_axiom_check(upper(A2), word)
    for word in _random_words(lower(A2), [("F", idx), ("K", idx)], 8, 3, seed=8):
        _antipode_axiom_check(lower(A2), word)


def test_antipode_inverse_round_trip():
    for pres, gens in ((double(A1), ["E", "F", "K", "K'"]),
                       (heis_upper(A2), ["e", "w'"]),
                       (heis_lower(A2), ["f", "w"])):
        idx = range(pres.datum.rank)
        for fam in gens:
            for i in idx:
                x = pres.gen(fam, i)
                assert antipode(antipode_inverse(x)) == x.nf(), (fam, i)
                assert antipode_inverse(antipode(x)) == x.nf(), (fam, i)
    # length-3 words in the rank-1 double
    D = double(A1)
    for word in _random_words(D, [("E", [0]), ("F", [0]), ("K", [0])], 8, 3,
                              seed=9):
        x = D.from_word(word)
        assert antipode(antipode_inverse(x)) == x.nf(), word


# -- braided structure of B- -------------------------------------------------


def closed_delta0(pres, n):
    """Frozen closed form for Delta0(f^n) over sl2."""
    datum = pres.datum
    v = GaussMonomial(Fraction(1), Fraction(-1))
    out = {}
    lf = letter("f", 0)
    for p in range(n + 1):
        c = RatFunc.of_poly(gauss_binomial(n, p, v, datum.m)) * \
            datum.mono(p * (p - n), -p * (p - n))
        out[((lf,) * p, (lf,) * (n - p))] = c
    return TensorElement((pres, pres), out)


def test_braided_coproduct_closed_form():
    HL = heis_lower(A1)
    for n in range(1, 9):
        x = HL.f(0) ** n
        got = braided_coproduct_bminus(x)  # internally checked vs (pi x id)Delta
        assert got == closed_delta0(HL, n), n


def test_braided_coproduct_example_n2():
    HL = heis_lower(A1)
    lf = letter("f", 0)
    got = braided_coproduct_bminus(HL.f(0) ** 2)
    one = RatFunc.one(A1.m)
    assert got.terms == {
        ((lf, lf), ()): one,
        ((lf,), (lf,)): one + mono(A1, -1, 1),
        ((), (lf, lf)): one,
    }


def test_braided_antipode_closed_form():
    HL = heis_lower(A1)
    for n in range(1, 9):
        got = braided_antipode_bminus(HL.f(0) ** n)
        sign = -1 if n % 2 else 1
        c = mono(A1, Fraction(-n * (n - 1), 2), Fraction(n * (n - 1), 2), sign)
        assert got == (HL.f(0) ** n).scale(c), n


def test_braided_antipode_is_convolution_inverse():
    # m o (S x id) o Delta0 = eta o eps on sample elements, both ranks
    for datum, words in ((A1, [(0,), (0, 0), (0, 0, 0)]),
                         (A2, [(0,), (1,), (0, 1), (1, 0), (0, 1, 1), (0, 0, 1)])):
        HL = heis_lower(datum)
        for idxs in words:
            word = tuple(letter("f", i) for i in idxs)
            total = HL.zero()
            cop = braided_coproduct_bminus(HL.from_word(word))
            for (w1, w2), c in cop.terms.items():
                s1 = braided_antipode_bminus(HL.from_word(w1))
                total = total + (s1 * HL.from_word(w2)).scale(c)
            assert total.is_zero, idxs
            totr = HL.zero()
            for (w1, w2), c in cop.terms.items():
                s2 = braided_antipode_bminus(HL.from_word(w2))
                totr = totr + (HL.from_word(w1) * s2).scale(c)
            assert totr.is_zero, idxs


def test_braided_coproduct_agrees_with_projection_route():
    HL = heis_lower(A2)
    x = HL.f(0) * HL.f(1) * HL.f(0)
    assert braided_coproduct_bminus(x) == projected_coproduct_bminus(x)


def test_not_in_bminus():
    H = heisenberg(A1)
    with pytest.raises(NotInBminus):
        braided_coproduct_bminus(H.e(0))


# -- parameter-swap consistency ----------------------------------------------


def _relabel_to_swapped(x, target):
    """Relabel a B_{r,s} element into the parameter-swapped algebra.

    Generators keep their roles (the published omega <-> omega' exchange
    belongs to the opposite torus-naming convention of the companion
    construction; composed with ours it is not a homomorphism), scalars
    swap r <-> s.
    """
    terms = {}
    for word, c in x.terms.items():
        terms[word] = c.swap_rs()
    return AlgElement(target, terms)


def defining_relations(H):
    """All defining relations of the Kashiwara-algebra presentation, as elements."""
    datum = H.datum
    rel = []
    ee = datum.euler
    for i in range(datum.rank):
        for j in range(datum.rank):
            # e'_i f_j - r^-<i,j> s^<j,i> f_j e'_i - delta_ij
            x = H.e(i) * H.f(j) - (H.f(j) * H.e(i)).scale(
                H.mono(-ee[i][j], ee[j][i]))
            if i == j:
                x = x - H.one()
            rel.append(x)
            # torus conjugations
            rel.append(H.w(j) * H.e(i) * H.w(j, -1)
                       - H.e(i).scale(H.mono(ee[i][j], -ee[j][i])))
            rel.append(H.wp(j) * H.e(i) * H.wp(j, -1)
                       - H.e(i).scale(H.mono(-ee[j][i], ee[i][j])))
            rel.append(H.w(j) * H.f(i) * H.w(j, -1)
                       - H.f(i).scale(H.mono(-ee[i][j], ee[j][i])))
            rel.append(H.wp(j) * H.f(i) * H.wp(j, -1)
                       - H.f(i).scale(H.mono(ee[j][i], -ee[i][j])))
            if i != j:
                rel.append(H.serre_relation("e", i, j))
                rel.append(H.serre_relation("f", i, j))
        rel.append(H.w(i) * H.w(i, -1) - H.one())
        rel.append(H.wp(i) * H.wp(i, -1) - H.one())
    return rel


def test_defining_relations_vanish():
    for datum in (A1, A2, B2):
        H = heisenberg(datum)
        for rel in defining_relations(H):
            assert rel.nf().is_zero


def test_parameter_swap_consistency():
    for datum in (A1, A2, B2):
        H = heisenberg(datum)
        Hs = heisenberg(datum, swapped=True)
        for rel in defining_relations(H):
            assert _relabel_to_swapped(rel, Hs).nf().is_zero
