"""Quantum double, Heisenberg double, Schrödinger and diagonal actions.

Elements of the doubles are kept in split form: a TensorElement whose slots
are the two one-sided Hopf algebras (A-side raising half, B-side lowering
half).  Multiplication is computed from the pairing-twisted formulas, so the
derived cross-relations come out of the machinery instead of being
postulated; converting a split element to a word element and normal-forming
it lets the rewriting route be compared against the formula route.

The Heisenberg double is the Kashiwara algebra: its split form is written in
the (lowering ♯ raising) order and its normal words are pure tensors.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import (
    AlgElement,
    TensorElement,
    _CLASS,
    double,
    heis_lower,
    heis_upper,
    heisenberg,
    letter,
    lower,
    upper,
)
from .errors import InvalidArgument, InvalidRange, WrongSide
from .pairing import pairing_engine
from .scalars import RatFunc, gauss_int

_B_SIDE_DOUBLE = ("F", "K")
_A_SIDE_DOUBLE = ("E", "K'")
_B_SIDE_HEIS = ("f", "w")
_A_SIDE_HEIS = ("e", "w'")


def _accum(target, key, coeff):
    cur = target.get(key)
    if cur is None:
        target[key] = coeff
    else:
        cur = cur + coeff
        if cur.is_zero:
            del target[key]
        else:
            target[key] = cur


# -- split representations ---------------------------------------------------


def split_double_unit(datum, swapped=False):
    U, L = upper(datum, swapped), lower(datum, swapped)
    return TensorElement((U, L), {((), ()): RatFunc.one(datum.m)}, _clean=True)


def split_heis_unit(datum, swapped=False):
    HL, HU = heis_lower(datum, swapped), heis_upper(datum, swapped)
    return TensorElement((HL, HU), {((), ()): RatFunc.one(datum.m)}, _clean=True)


def double_multiply(x, y):
    """Product in the quantum double of two split elements.

    (a (x) b)(a' (x) b') = sum phi(S^-1(a'_(1)), b_(1)) phi(a'_(3), b_(3))
                             a a'_(2) (x) b_(2) b'.
    """
    U, L = x.ambients
    datum = U.datum
    eng = pairing_engine(datum, U.swapped)
    out = {}
    for (aw, bw), c1 in x.terms.items():
        db = L.coproduct3_word(bw)
        for (aw2, bw2), c2 in y.terms.items():
            c12 = c1 * c2
            for (a1, a2, a3), ca in U.coproduct3_word(aw2).items():
                sinv = U.antipode_word(a1, inverse=True)
                for (b1, b2, b3), cb in db.items():
                    p1 = RatFunc.zero(datum.m)
                    for w, c in sinv.items():
                        v = eng.pair_words(w, b1)
                        if not v.is_zero:
                            p1 = p1 + c * v
                    if p1.is_zero:
                        continue
                    p2 = eng.pair_words(a3, b3)
                    if p2.is_zero:
                        continue
                    scale = c12 * ca * cb * p1 * p2
                    for wa, cA in U.normal_form_word(aw + a2).items():
                        for wb, cB in L.normal_form_word(b2 + bw2).items():
                            _accum(out, (wa, wb), scale * cA * cB)
    return TensorElement((U, L), out, _clean=True)


def heisenberg_multiply(x, y):
    """(b ♯ a)(b' ♯ a') = sum phi(a_(1), b'_(1)) b b'_(2) ♯ a_(2) a'."""
    HL, HU = x.ambients
    datum = HL.datum
    eng = pairing_engine(datum, HL.swapped)
    out = {}
    for (bw, aw), c1 in x.terms.items():
        da = HU.coproduct_word(aw)
        for (bw2, aw2), c2 in y.terms.items():
            c12 = c1 * c2
            db = HL.coproduct_word(bw2)
            for (a1, a2), ca in da.items():
                for (b1, b2), cb in db.items():
                    p = eng.pair_words(a1, b1)
                    if p.is_zero:
                        continue
                    scale = c12 * ca * cb * p
                    for wb, cB in HL.normal_form_word(bw + b2).items():
                        for wa, cA in HU.normal_form_word(a2 + aw2).items():
                            _accum(out, (wb, wa), scale * cA * cB)
    return TensorElement((HL, HU), out, _clean=True)


def to_split_double(x):
    """Expand a word element of the double into the A (x) B basis."""
    datum = x.ambient.datum
    swapped = x.ambient.swapped
    U, L = upper(datum, swapped), lower(datum, swapped)
    total = TensorElement((U, L), {}, _clean=True)
    for word, c in x.terms.items():
        cur = split_double_unit(datum, swapped).scale(c)
        for lt in word:
            if lt[0] in _B_SIDE_DOUBLE:
                out = {}
                for (aw, bw), cc in cur.terms.items():
                    for wb, cB in L.normal_form_word(bw + (lt,)).items():
                        _accum(out, (aw, wb), cc * cB)
                cur = TensorElement((U, L), out, _clean=True)
            else:
                rhs = TensorElement((U, L),
                                    {((lt,), ()): RatFunc.one(datum.m)},
                                    _clean=True)
                cur = double_multiply(cur, rhs)
        total = total + cur
    return total


def from_split_double(t):
    """Concatenate the two legs and normal-form in the double presentation."""
    U, L = t.ambients
    D = double(U.datum, U.swapped)
    out = D.zero()
    for (aw, bw), c in t.terms.items():
        out = out + AlgElement(D, {aw + bw: c})
    return out.nf()


def to_split_heis(x):
    datum = x.ambient.datum
    swapped = x.ambient.swapped
    HL, HU = heis_lower(datum, swapped), heis_upper(datum, swapped)
    total = TensorElement((HL, HU), {}, _clean=True)
    for word, c in x.terms.items():
        cur = split_heis_unit(datum, swapped).scale(c)
        for lt in word:
            if lt[0] in _A_SIDE_HEIS:
                out = {}
                for (bw, aw), cc in cur.terms.items():
                    for wa, cA in HU.normal_form_word(aw + (lt,)).items():
                        _accum(out, (bw, wa), cc * cA)
                cur = TensorElement((HL, HU), out, _clean=True)
            else:
                rhs = TensorElement((HL, HU),
                                    {((lt,), ()): RatFunc.one(datum.m)},
                                    _clean=True)
                cur = heisenberg_multiply(cur, rhs)
        total = total + cur
    return total


def from_split_heis(t):
    """Pure tensors b ♯ a are exactly the normal words b a of the Kashiwara algebra."""
    HL, HU = t.ambients
    H = heisenberg(HL.datum, HL.swapped)
    out = H.zero()
    for (bw, aw), c in t.terms.items():
        out = out + AlgElement(H, {bw + aw: c})
    return out.nf()


# -- renaming embeddings between the double and the Kashiwara copies ----------


def embed_upper_to_heis(word, pres_hu):
    """E_i -> (s_i - r_i)^-1 w'_i e'_i,  K'_i -> w'_i (actor into the A-copy)."""
    datum = pres_hu.datum
    out = pres_hu.one()
    for fam, i, pw in word:
        if fam == "K'":
            out = out * pres_hu.gen("w'", i, pw)
        elif fam == "E":
            d = datum.sym[i]
            c = (pres_hu.mono(0, d) - pres_hu.mono(d, 0)).inv()
            out = out * (pres_hu.gen("w'", i) * pres_hu.gen("e", i)).scale(c)
        else:
            raise WrongSide(f"letter {fam} is not in the raising half")
    return out


def embed_lower_to_heis(word, pres_hl):
    """F_i -> f_i, K_i -> w_i (plain renaming)."""
    rename = {"F": "f", "K": "w"}
    try:
        w2 = tuple((rename[f], i, p) for f, i, p in word)
    except KeyError as exc:
        raise WrongSide(f"letter {exc} is not in the lowering half") from exc
    return AlgElement(pres_hl, {w2: RatFunc.one(pres_hl.datum.m)}, _clean=True)


def embed_heis_to_double_upper(word, pres_d):
    """e'_i -> (s_i - r_i) K'_i^-1 E_i,  w'_i -> K'_i."""
    datum = pres_d.datum
    out = pres_d.one()
    for fam, i, pw in word:
        if fam == "w'":
            out = out * pres_d.gen("K'", i, pw)
        elif fam == "e":
            d = datum.sym[i]
            c = pres_d.mono(0, d) - pres_d.mono(d, 0)
            out = out * (pres_d.gen("K'", i, -1) * pres_d.gen("E", i)).scale(c)
        else:
            raise WrongSide(f"letter {fam} is not in the raising copy")
    return out


def embed_heis_to_double_lower(word, pres_d):
    rename = {"f": "F", "w": "K"}
    try:
        w2 = tuple((rename[f], i, p) for f, i, p in word)
    except KeyError as exc:
        raise WrongSide(f"letter {exc} is not in the lowering copy") from exc
    return AlgElement(pres_d, {w2: RatFunc.one(pres_d.datum.m)}, _clean=True)


# -- Schrödinger representations ----------------------------------------------


def _act_aside_on_A(aw, target):
    """(a (x) 1) . x = sum a_(1) x S(a_(2)) on the raising copy."""
    pres = target.ambient
    U = upper(pres.datum, pres.swapped)
    out = pres.zero()
    for (a1, a2), c in U.coproduct_word(aw).items():
        left = embed_upper_to_heis(a1, pres)
        right = pres.zero()
        for w, c2 in U.antipode_word(a2).items():
            right = right + embed_upper_to_heis(w, pres).scale(c2)
        out = out + (left * target * right).scale(c)
    return out.nf()


def _act_bside_on_A(bw, target):
    """(1 (x) b) . x = sum phi(x_(1), S(b)) x_(2)."""
    pres = target.ambient
    datum = pres.datum
    L = lower(datum, pres.swapped)
    eng = pairing_engine(datum, pres.swapped)
    sb = L.antipode_word(bw)
    out = pres.zero()
    for word, c in target.terms.items():
        for (x1, x2), c2 in pres.coproduct_word(word).items():
            p = RatFunc.zero(datum.m)
            for w, c3 in sb.items():
                v = eng.pair_words(x1, w)
                if not v.is_zero:
                    p = p + c3 * v
            if not p.is_zero:
                out = out + AlgElement(pres, {x2: c * c2 * p})
    return out.nf()


def _act_aside_on_B(aw, target):
    """(a (x) 1) . y = sum phi(a, y_(1)) y_(2)."""
    pres = target.ambient
    datum = pres.datum
    eng = pairing_engine(datum, pres.swapped)
    out = pres.zero()
    for word, c in target.terms.items():
        for (y1, y2), c2 in pres.coproduct_word(word).items():
            p = eng.pair_words(aw, y1)
            if not p.is_zero:
                out = out + AlgElement(pres, {y2: c * c2 * p})
    return out.nf()


def _act_bside_on_B(bw, target):
    """(1 (x) b) . y = sum b_(1) y S(b_(2))."""
    pres = target.ambient
    L = lower(pres.datum, pres.swapped)
    out = pres.zero()
    for (b1, b2), c in L.coproduct_word(bw).items():
        left = embed_lower_to_heis(b1, pres)
        right = pres.zero()
        for w, c2 in L.antipode_word(b2).items():
            right = right + embed_lower_to_heis(w, pres).scale(c2)
        out = out + (left * target * right).scale(c)
    return out.nf()


def schrodinger_act(actor, target, side):
    """Schrödinger representation of the double on one of its halves.

    `actor` is a split double element (or a word element of the double);
    `target` lives in the raising copy (side "on_A": words in e', w') or the
    lowering copy (side "on_B": words in f, w).
    """
    if isinstance(actor, AlgElement):
        actor = to_split_double(actor)
    pres = target.ambient
    if side == "on_A":
        if any(fam not in _A_SIDE_HEIS for w in target.terms for fam, _, _ in w):
            raise WrongSide("on_A targets live in the raising copy (e', w')")
    elif side == "on_B":
        if any(fam not in _B_SIDE_HEIS for w in target.terms for fam, _, _ in w):
            raise WrongSide("on_B targets live in the lowering copy (f, w)")
    else:
        raise InvalidArgument("side must be 'on_A' or 'on_B'")
    out = pres.zero()
    for (aw, bw), c in actor.terms.items():
        if side == "on_A":
            val = _act_aside_on_A(aw, _act_bside_on_A(bw, target))
        else:
            val = _act_aside_on_B(aw, _act_bside_on_B(bw, target))
        out = out + val.scale(c)
    return out.nf()


def double_act_on_heisenberg(actor, h):
    """Diagonal action (a (x) b).(b' ♯ a') through the Schrödinger halves."""
    if isinstance(actor, AlgElement):
        actor = to_split_double(actor)
    if isinstance(h, AlgElement):
        h = to_split_heis(h)
    HL, HU = h.ambients
    datum = HL.datum
    U, L = upper(datum, HL.swapped), lower(datum, HL.swapped)
    out = {}
    for (aw, bw), c0 in actor.terms.items():
        for (a1, a2), ca in U.coproduct_word(aw).items():
            for (b1, b2), cb in L.coproduct_word(bw).items():
                for (bw2, aw2), ch in h.terms.items():
                    tgt_b = AlgElement(HL, {bw2: RatFunc.one(datum.m)},
                                       _clean=True)
                    res_b = _act_aside_on_B(a1, _act_bside_on_B(b1, tgt_b))
                    if res_b.is_zero:
                        continue
                    tgt_a = AlgElement(HU, {aw2: RatFunc.one(datum.m)},
                                       _clean=True)
                    res_a = _act_aside_on_A(a2, _act_bside_on_A(b2, tgt_a))
                    if res_a.is_zero:
                        continue
                    scale = c0 * ca * cb * ch
                    for wb, cB in res_b.terms.items():
                        for wa, cA in res_a.terms.items():
                            _accum(out, (wb, wa), scale * cA * cB)
    return TensorElement((HL, HU), out, _clean=True)


# -- comodule structure maps ---------------------------------------------------


def comodule_map(x):
    """Coaction with values in (double) (x) (original ambient).

    Raising-copy and lowering-copy elements coact through their renamed
    coproducts; a Kashiwara-algebra element b ♯ a coacts by
    sum (1 (x) b_(1))(a_(1) (x) 1) (x) b_(2) ♯ a_(2).
    """
    pres = x.ambient
    datum = pres.datum
    D = double(datum, pres.swapped)
    fams = {fam for w in x.terms for fam, _, _ in w}
    if fams <= set(_A_SIDE_HEIS):
        hu = heis_upper(datum, pres.swapped)
        xa = AlgElement(hu, dict(x.terms))
        out = {}
        for word, c in xa.terms.items():
            for (w1, w2), c2 in hu.coproduct_word(word).items():
                img = embed_heis_to_double_upper(w1, D).nf()
                for wd, c3 in img.terms.items():
                    _accum(out, (wd, w2), c * c2 * c3)
        return TensorElement((D, hu), out, _clean=True)
    if fams <= set(_B_SIDE_HEIS):
        hl = heis_lower(datum, pres.swapped)
        xb = AlgElement(hl, dict(x.terms))
        out = {}
        for word, c in xb.terms.items():
            for (w1, w2), c2 in hl.coproduct_word(word).items():
                img = embed_heis_to_double_lower(w1, D)
                for wd, c3 in img.terms.items():
                    _accum(out, (wd, w2), c * c2 * c3)
        return TensorElement((D, hl), out, _clean=True)
    # general Kashiwara element: split first
    H = heisenberg(datum, pres.swapped)
    split = to_split_heis(AlgElement(H, dict(x.terms)))
    HL, HU = split.ambients
    U, L = upper(datum, pres.swapped), lower(datum, pres.swapped)
    out = {}
    for (bw, aw), c in split.terms.items():
        for (b1, b2), cb in HL.coproduct_word(bw).items():
            left = TensorElement((U, L), {((), tuple(
                ("F" if f == "f" else "K", i, p) for f, i, p in b1)):
                RatFunc.one(datum.m)}, _clean=True)
            for (a1, a2), ca in HU.coproduct_word(aw).items():
                img = embed_heis_to_double_upper(a1, D).nf()
                for wd, c3 in img.terms.items():
                    right = to_split_double(AlgElement(D, {wd: RatFunc.one(datum.m)},
                                                       _clean=True))
                    prod = double_multiply(left, right)
                    dword = from_split_double(prod)
                    for wD, c4 in dword.terms.items():
                        _accum(out, (wD, b2 + a2), c * cb * ca * c3 * c4)
    return TensorElement((D, heisenberg(datum, pres.swapped)), out, _clean=True)


# -- closed-form sl2 actions ----------------------------------------------------


def closed_form_action_sl2(which, m, n, datum):
    """Closed-form coefficient and resulting power for the four sl2 families.

    Families: "E_on_e", "E_on_f", "F_on_e", "F_on_f" acting by the m-th power
    on the n-th power.  Returns (coefficient, result power).
    """
    if datum.rank != 1:
        raise InvalidArgument("closed forms are the rank-1 special case")
    if m < 0 or n < 0:
        raise InvalidRange("powers must be non-negative")
    mm = datum.m
    one = RatFunc.one(mm)
    if m == 0:
        return one, n
    from .scalars import GaussMonomial
    v = GaussMonomial(Fraction(1), Fraction(-1))  # r s^-1

    def vpow(k):
        return datum.mono(k, -k)

    if which == "E_on_e":
        if n == 0:
            raise InvalidRange("E^m . e'^0 has no closed form for m >= 1")
        coeff = one
        for k in range(n, n + m):
            coeff = coeff * RatFunc.of_poly(gauss_int(k, v, mm))
        coeff = coeff * vpow(-n * m - m * (m - 1) // 2) * datum.mono(-m, 0)
        return coeff, n + m
    if which == "E_on_f":
        if m > n:
            raise InvalidRange("E_on_f requires m <= n")
        coeff = (datum.mono(0, 1) - datum.mono(1, 0)).inv() ** m
        for k in range(n - m + 1, n + 1):
            coeff = coeff * RatFunc.of_poly(gauss_int(k, v, mm))
        return coeff, n - m
    if which == "F_on_e":
        if m > n:
            raise InvalidRange("F_on_e requires m <= n")
        coeff = one if m % 2 == 0 else -one
        for k in range(n - m + 1, n + 1):
            coeff = coeff * RatFunc.of_poly(gauss_int(k, v, mm))
        coeff = coeff * vpow(m)
        return coeff, n - m
    if which == "F_on_f":
        coeff = one
        for i in range(m):
            coeff = coeff * (one - vpow(-(n + i)))
        return coeff, n + m
    raise InvalidArgument(f"unknown action family {which!r}")


def iterated_action_sl2(which, m, n, datum):
    """The same action computed by m-fold application of the diagonal action."""
    if datum.rank != 1:
        raise InvalidArgument("the iteration helper is rank-1 only")
    H = heisenberg(datum)
    D = double(datum)
    actor = D.E(0) if which.startswith("E") else D.F(0)
    target = to_split_heis(H.e(0) ** n if which.endswith("_on_e")
                           else H.f(0) ** n)
    for _ in range(m):
        target = double_act_on_heisenberg(actor, target)
    return from_split_heis(target)


# -- the braiding that reconstructs the quantized Weyl algebra -------------------


def weyl_braiding(datum, swapped=False):
    """sigma(v (x) w) = sum v_(-1).w (x) v_(0) on (raising copy) (x) (lowering copy)."""
    hu = heis_upper(datum, swapped)
    hl = heis_lower(datum, swapped)

    def sigma(vw, ww):
        target = AlgElement(hl, {ww: RatFunc.one(datum.m)}, _clean=True)
        out = {}
        coact = comodule_map(AlgElement(hu, {vw: RatFunc.one(datum.m)},
                                        _clean=True))
        for (dword, v0), c in coact.terms.items():
            acted = schrodinger_act(
                to_split_double(AlgElement(double(datum, swapped),
                                           {dword: RatFunc.one(datum.m)},
                                           _clean=True)),
                target, "on_B")
            for w2, c2 in acted.terms.items():
                _accum(out, (w2, v0), c * c2)
        return out

    return sigma
