"""Exact arithmetic in the field Q(r^(1/m), s^(1/m)).

Scalars are rational functions in two commuting variables r, s with
arbitrary-precision rational coefficients.  Fractional exponents are handled
by fixing one global denominator m and storing integer exponents of the
formal variables r^(1/m), s^(1/m); the root datum chooses m once and all
scalars of a computation share it (mixed denominators unify through lcm).

`LaurentPoly` is a sparse Laurent polynomial, `RatFunc` a reduced fraction of
two of them with a canonical normal form, so equality of values is equality
of the stored data.  Gaussian (q-analogue) integers, factorials and binomial
coefficients with an arbitrary invertible monomial base live here as well.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero, InvalidArgument, ParseError

Key = tuple


def _deglex(key):
    # total degree first, then r-exponent; a strict total order on monomials
    a, b = key
    return (a + b, a)


class LaurentPoly:
    """Sparse Laurent polynomial: maps exponent pairs (a, b) -> Fraction.

    Exponents are integers in units of 1/m, i.e. the key (a, b) stands for
    r^(a/m) * s^(b/m).  No stored coefficient is zero.
    """

    __slots__ = ("terms", "m")

    def __init__(self, terms=None, m=1, _clean=False):
        if terms is None:
            terms = {}
        if not _clean:
            cleaned = {}
            for k, v in terms.items():
                v = v if isinstance(v, Fraction) else Fraction(v)
                if v:
                    cleaned[(int(k[0]), int(k[1]))] = v
            terms = cleaned
        self.terms = terms
        self.m = m

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(m=1):
        return LaurentPoly({}, m, _clean=True)

    @staticmethod
    def one(m=1):
        return LaurentPoly({(0, 0): Fraction(1)}, m, _clean=True)

    @staticmethod
    def const(c, m=1):
        c = Fraction(c)
        return LaurentPoly({(0, 0): c} if c else {}, m, _clean=True)

    @staticmethod
    def monomial(coeff, a, b, m=1):
        """Monomial coeff * r^(a/m) s^(b/m); a, b are internal integers."""
        coeff = Fraction(coeff)
        return LaurentPoly({(a, b): coeff} if coeff else {}, m, _clean=True)

    @staticmethod
    def mono_frac(coeff, ar, br, m):
        """Monomial with rational exponents ar, br (denominators must divide m)."""
        ar, br = Fraction(ar), Fraction(br)
        a, b = ar * m, br * m
        if a.denominator != 1 or b.denominator != 1:
            raise InvalidArgument(
                f"exponents ({ar}, {br}) not in the 1/{m} lattice")
        return LaurentPoly.monomial(coeff, int(a), int(b), m)

    # -- basic queries ------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    @property
    def is_one(self):
        return self.terms == {(0, 0): Fraction(1)}

    def is_constant(self):
        return not self.terms or set(self.terms) == {(0, 0)}

    def constant(self):
        return self.terms.get((0, 0), Fraction(0))

    def is_monomial(self):
        return len(self.terms) == 1

    def leading_key(self):
        return max(self.terms, key=_deglex)

    def leading_coeff(self):
        return self.terms[self.leading_key()]

    def min_exponents(self):
        mina = min(a for a, _ in self.terms)
        minb = min(b for _, b in self.terms)
        return mina, minb

    # -- denominator unification --------------------------------------

    def with_denominator(self, m):
        if m == self.m:
            return self
        if m % self.m:
            raise InvalidArgument(f"cannot refine lattice 1/{self.m} to 1/{m}")
        f = m // self.m
        return LaurentPoly({(a * f, b * f): c for (a, b), c in self.terms.items()},
                           m, _clean=True)

    @staticmethod
    def _unify(p, q):
        if p.m == q.m:
            return p, q
        m = p.m * q.m // math.gcd(p.m, q.m)
        return p.with_denominator(m), q.with_denominator(m)

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other, self.m)
        p, q = LaurentPoly._unify(self, other)
        terms = dict(p.terms)
        for k, v in q.terms.items():
            w = terms.get(k)
            if w is None:
                terms[k] = v
            else:
                w = w + v
                if w:
                    terms[k] = w
                else:
                    del terms[k]
        return LaurentPoly(terms, p.m, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -v for k, v in self.terms.items()}, self.m,
                           _clean=True)

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other, self.m)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other, self.m)
        p, q = LaurentPoly._unify(self, other)
        if not p.terms or not q.terms:
            return LaurentPoly.zero(p.m)
        if len(p.terms) == 1:
            ((a, b), c), = p.terms.items()
            return LaurentPoly({(a + a2, b + b2): c * c2
                                for (a2, b2), c2 in q.terms.items()},
                               p.m, _clean=True)
        terms = {}
        for (a1, b1), c1 in p.terms.items():
            for (a2, b2), c2 in q.terms.items():
                k = (a1 + a2, b1 + b2)
                w = terms.get(k)
                if w is None:
                    terms[k] = c1 * c2
                else:
                    w = w + c1 * c2
                    if w:
                        terms[k] = w
                    else:
                        del terms[k]
        return LaurentPoly(terms, p.m, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise InvalidArgument("negative power of a LaurentPoly; use RatFunc")
        out = LaurentPoly.one(self.m)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return LaurentPoly.zero(self.m)
        return LaurentPoly({k: v * c for k, v in self.terms.items()}, self.m,
                           _clean=True)

    def shifted(self, da, db):
        return LaurentPoly({(a + da, b + db): c for (a, b), c in self.terms.items()},
                           self.m, _clean=True)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            if isinstance(other, (int, Fraction)):
                other = LaurentPoly.const(other, self.m)
            else:
                return NotImplemented
        p, q = LaurentPoly._unify(self, other)
        return p.terms == q.terms

    def __hash__(self):
        if not self.terms:
            return hash(0)
        g = math.gcd(self.m, *(math.gcd(abs(a), abs(b)) for a, b in self.terms))
        return hash((self.m // g, frozenset(
            ((a // g, b // g), c) for (a, b), c in self.terms.items())))

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r})"

    def evaluate(self, rval, sval):
        """Numeric sanity-check evaluation at r^(1/m)=rval, s^(1/m)=sval."""
        total = Fraction(0)
        for (a, b), c in self.terms.items():
            total += c * Fraction(rval) ** a * Fraction(sval) ** b
        return total

    # -- exact division ------------------------------------------------

    def divexact(self, other):
        """Exact division; raises InvalidArgument when the division is not exact."""
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other, self.m)
        p, q = LaurentPoly._unify(self, other)
        if q.is_zero:
            raise DivisionByZero("division by zero polynomial")
        if p.is_zero:
            return LaurentPoly.zero(p.m)
        if len(q.terms) == 1:
            ((a, b), c), = q.terms.items()
            return LaurentPoly({(a1 - a, b1 - b): c1 / c
                                for (a1, b1), c1 in p.terms.items()},
                               p.m, _clean=True)
        # work with ordinary polynomials so deg-lex descent is well-founded
        pa, pb = p.min_exponents()
        qa, qb = q.min_exponents()
        rem = {(a - pa, b - pb): c for (a, b), c in p.terms.items()}
        qterms = {(a - qa, b - qb): c for (a, b), c in q.terms.items()}
        qlk = max(qterms, key=_deglex)
        qlc = qterms[qlk]
        out = {}
        while rem:
            rlk = max(rem, key=_deglex)
            da, db = rlk[0] - qlk[0], rlk[1] - qlk[1]
            if da < 0 or db < 0:
                raise InvalidArgument("inexact polynomial division")
            c = rem[rlk] / qlc
            out[(da, db)] = c
            for (a, b), v in qterms.items():
                k = (a + da, b + db)
                w = rem.get(k, Fraction(0)) - v * c
                if w:
                    rem[k] = w
                else:
                    rem.pop(k, None)
        off_a, off_b = pa - qa, pb - qb
        return LaurentPoly({(a + off_a, b + off_b): c
                            for (a, b), c in out.items()}, p.m, _clean=True)


# -- bivariate gcd over Q (via primitive PRS over Z[s][r]) -------------


def _clear_denominators(terms):
    den = 1
    for c in terms.values():
        den = den * (c.denominator // math.gcd(den, c.denominator))
    rec = {}
    for (a, b), c in terms.items():
        rec.setdefault(a, {})[b] = int(c * den)
    return rec


def _s_mul(u, v):
    out = {}
    for b1, c1 in u.items():
        for b2, c2 in v.items():
            k = b1 + b2
            w = out.get(k, 0) + c1 * c2
            if w:
                out[k] = w
            else:
                out.pop(k, None)
    return out


def _s_sub(u, v):
    out = dict(u)
    for b, c in v.items():
        w = out.get(b, 0) - c
        if w:
            out[b] = w
        else:
            out.pop(b, None)
    return out


def _s_scale(u, c):
    return {b: v * c for b, v in u.items()} if c else {}

def _s_content(u):
    g = 0
    for v in u.values():
        g = math.gcd(g, abs(v))
    return g


def _s_primitive(u):
    g = _s_content(u)
    if g > 1:
        u = {b: v // g for b, v in u.items()}
    if u and u[max(u)] < 0:
        u = {b: -v for b, v in u.items()}
    return u


def _s_divexact(u, v):
    if not v:
        raise DivisionByZero
    out = {}
    rem = dict(u)
    dv = max(v)
    lv = v[dv]
    while rem:
        du = max(rem)
        if du < dv or rem[du] % lv:
            raise InvalidArgument("inexact univariate division")
        c = rem[du] // lv
        out[du - dv] = c
        for b, w in v.items():
            k = b + du - dv
            x = rem.get(k, 0) - w * c
            if x:
                rem[k] = x
            else:
                rem.pop(k, None)
    return out


def _s_sign_norm(u):
    if u and u[max(u)] < 0:
        return {b: -v for b, v in u.items()}
    return u


def _s_gcd(u, v):
    # primitive PRS over Z
    if not u:
        return _s_sign_norm(v) if v else {}
    if not v:
        return _s_sign_norm(u)
    cu, cv = _s_content(u), _s_content(v)
    f, g = _s_primitive(u), _s_primitive(v)
    if max(f) < max(g):
        f, g = g, f
    while g:
        # pseudo remainder of f by g
        lg = g[max(g)]
        r = f
        while r and max(r) >= max(g):
            d = max(r) - max(g)
            lr = r[max(r)]
            r = _s_sub(_s_scale(r, lg), {b + d: c * lr for b, c in g.items()})
        f, g = g, _s_primitive(r)
    c = math.gcd(cu, cv)
    return _s_scale(f, c) if c != 1 else f


def _rec_degree(P):
    return max(P)


def _rec_content(P):
    cont = {}
    for u in P.values():
        cont = _s_gcd(cont, u)
        if cont == {0: 1}:
            break
    return cont


def _rec_primitive(P):
    cont = _rec_content(P)
    if cont == {0: 1}:
        return cont, P
    return cont, {a: _s_divexact(u, cont) for a, u in P.items()}


def _rec_prem(F, G):
    dG = _rec_degree(G)
    lG = G[dG]
    R = F
    while R and _rec_degree(R) >= dG:
        dR = _rec_degree(R)
        lR = R[dR]
        new = {}
        for a, u in R.items():
            new[a] = _s_mul(u, lG)
        for a, u in G.items():
            k = a + dR - dG
            w = _s_sub(new.get(k, {}), _s_mul(u, lR))
            if w:
                new[k] = w
            else:
                new.pop(k, None)
        R = new
    return R


def poly_gcd(p, q):
    """Gcd of two ordinary (non-negative exponent) polynomials over Q.

    Returns a LaurentPoly with integer coprime coefficients and positive
    deg-lex leading coefficient; LaurentPoly.one for coprime inputs.
    """
    p, q = LaurentPoly._unify(p, q)
    m = p.m
    if p.is_zero or q.is_zero:
        raise InvalidArgument("gcd of zero polynomial")
    if p.is_monomial() or q.is_monomial():
        return LaurentPoly.one(m)
    F = _clear_denominators(p.terms)
    G = _clear_denominators(q.terms)
    contF, Fp = _rec_primitive(F)
    contG, Gp = _rec_primitive(G)
    cont = _s_gcd(contF, contG)
    if _rec_degree(Fp) < _rec_degree(Gp):
        Fp, Gp = Gp, Fp
    while Gp:
        R = _rec_prem(Fp, Gp)
        Fp = Gp
        Gp = _rec_primitive(R)[1] if R else {}
    g = {a: _s_mul(u, cont) for a, u in _rec_primitive(Fp)[1].items()} \
        if cont != {0: 1} else _rec_primitive(Fp)[1]
    terms = {}
    for a, u in g.items():
        for b, c in u.items():
            terms[(a, b)] = Fraction(c)
    out = LaurentPoly(terms, m, _clean=True)
    if out.leading_coeff() < 0:
        out = -out
    return out


class RatFunc:
    """Reduced fraction of Laurent polynomials with a canonical normal form.

    Invariants: the denominator is an ordinary polynomial (minimal exponent 0
    in each variable) that is monic for the deg-lex leading term; numerator
    and denominator share no polynomial factor; zero is stored as (0, 1).
    The numerator absorbs the monomial part and may carry negative exponents.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _canonical=False):
        if _canonical:
            self.num = num
            self.den = den
            return
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly.const(num)
        if den is None:
            den = LaurentPoly.one(num.m)
        elif not isinstance(den, LaurentPoly):
            den = LaurentPoly.const(den, num.m)
        num, den = LaurentPoly._unify(num, den)
        self.num, self.den = _normalize(num, den)

    # -- constructors --------------------------------------------------

    @staticmethod
    def zero(m=1):
        return RatFunc(LaurentPoly.zero(m), LaurentPoly.one(m), _canonical=True)

    @staticmethod
    def one(m=1):
        return RatFunc(LaurentPoly.one(m), LaurentPoly.one(m), _canonical=True)

    @staticmethod
    def const(c, m=1):
        return RatFunc(LaurentPoly.const(c, m), LaurentPoly.one(m),
                       _canonical=True)

    @staticmethod
    def monomial(coeff, a, b, m=1):
        """coeff * r^(a/m) s^(b/m) with internal integer exponents a, b."""
        return RatFunc(LaurentPoly.monomial(coeff, a, b, m),
                       LaurentPoly.one(m), _canonical=True)

    @staticmethod
    def mono_frac(coeff, ar, br, m):
        return RatFunc(LaurentPoly.mono_frac(coeff, ar, br, m),
                       LaurentPoly.one(m), _canonical=True)

    @staticmethod
    def of_poly(p):
        return RatFunc(p, LaurentPoly.one(p.m))

    # -- queries ---------------------------------------------------------

    @property
    def is_zero(self):
        return self.num.is_zero

    @property
    def is_one(self):
        return self.num.is_one and self.den.is_one

    def is_polynomial(self):
        return self.den.is_one

    def is_monomial(self):
        return self.den.is_one and self.num.is_monomial()

    def as_monomial(self):
        """Return (coeff, (a, b), m) if the value is a single monomial."""
        if not self.is_monomial():
            return None
        (k, c), = self.num.terms.items()
        return c, k, self.num.m

    @property
    def m(self):
        return self.num.m

    # -- field operations -------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(other, self.m)
        if isinstance(other, LaurentPoly):
            return RatFunc.of_poly(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero:
            return o
        if o.is_zero:
            return self
        if self.den.is_one and o.den.is_one:
            return RatFunc(self.num + o.num, LaurentPoly.one(self.m))
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return RatFunc.zero(self.m)
        if o.is_monomial():
            # scaling the numerator by a monomial keeps the form canonical
            num, mono = LaurentPoly._unify(self.num, o.num)
            ((a, b), c), = mono.terms.items()
            return RatFunc(num.shifted(a, b).scale(c),
                           self.den.with_denominator(num.m), _canonical=True)
        if self.is_monomial():
            return o * self
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inv(self):
        if self.is_zero:
            raise DivisionByZero("inverse of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, n):
        if n == 0:
            return RatFunc.one(self.m)
        base = self if n > 0 else self.inv()
        n = abs(n)
        out = RatFunc.one(self.m)
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    __hash__ = None

    def __repr__(self):
        return f"RatFunc({format_scalar(self)!r})"

    def evaluate(self, rval, sval):
        num = self.num.evaluate(rval, sval)
        den = self.den.evaluate(rval, sval)
        if den == 0:
            raise DivisionByZero("denominator vanishes at the sample point")
        return num / den

    def swap_rs(self):
        """The image under the parameter exchange r <-> s."""
        num = LaurentPoly({(b, a): c for (a, b), c in self.num.terms.items()},
                          self.num.m, _clean=True)
        den = LaurentPoly({(b, a): c for (a, b), c in self.den.terms.items()},
                          self.den.m, _clean=True)
        return RatFunc(num, den)


def _normalize(num, den):
    if den.is_zero:
        raise DivisionByZero("zero denominator")
    m = num.m
    if num.is_zero:
        return LaurentPoly.zero(m), LaurentPoly.one(m)
    if den.is_one:
        return num, den
    da, db = den.min_exponents()
    na, nb = num.min_exponents()
    off = (na - da, nb - db)
    D = den.shifted(-da, -db)
    N = num.shifted(-na, -nb)
    if len(D.terms) == 1:
        c = D.constant()
        return N.scale(1 / c).shifted(*off), LaurentPoly.one(m)
    if len(N.terms) > 1:
        g = poly_gcd(N, D)
        if not g.is_constant():
            N = N.divexact(g)
            D = D.divexact(g)
            if D.is_constant():
                return N.scale(1 / D.constant()).shifted(*off), LaurentPoly.one(m)
    lc = D.leading_coeff()
    if lc != 1:
        D = D.scale(1 / lc)
        N = N.scale(1 / lc)
    return N.shifted(*off), D


# -- Gaussian combinatorics --------------------------------------------


@dataclass(frozen=True)
class GaussMonomial:
    """Invertible monomial base v = r^a s^b for Gaussian integers (n)_v."""

    a: Fraction
    b: Fraction

    def power(self, k, m):
        return LaurentPoly.mono_frac(1, self.a * k, self.b * k, m)


V_RS = GaussMonomial(Fraction(1), Fraction(-1))       # r s^-1
V_SR = GaussMonomial(Fraction(-1), Fraction(1))       # r^-1 s


def gauss_int(n, v, m=1):
    """(n)_v = 1 + v + ... + v^(n-1); (0)_v = 0."""
    if n < 0:
        raise InvalidArgument("gauss_int needs n >= 0")
    out = LaurentPoly.zero(m)
    for k in range(n):
        out = out + v.power(k, m)
    return out


def gauss_factorial(n, v, m=1):
    """(n)_v! = (1)_v (2)_v ... (n)_v; empty product is 1."""
    if n < 0:
        raise InvalidArgument("gauss_factorial needs n >= 0")
    out = LaurentPoly.one(m)
    for k in range(1, n + 1):
        out = out * gauss_int(k, v, m)
    return out


def gauss_binomial(n, k, v, m=1):
    """Gaussian binomial (n choose k)_v; exact Laurent polynomial."""
    if k < 0 or n < 0 or k > n:
        raise InvalidArgument(f"gauss_binomial out of range: n={n}, k={k}")
    num = gauss_factorial(n, v, m)
    den = gauss_factorial(k, v, m) * gauss_factorial(n - k, v, m)
    return num.divexact(den)


# -- text syntax --------------------------------------------------------
#
# scalar  := '(' sum ')' '/' '(' sum ')' | sum
# sum     := term (('+'|'-') term)*
# term    := factor (['*'] factor)*
# factor  := 'r' ['^' exp] | 's' ['^' exp] | int ['/' int]
# exp     := ['-'] int ['/' int] | '(' ['-'] int '/' int ')'
#
# Whitespace-insensitive.  Exponents must live on the 1/m lattice.

_SCALAR_TOKEN = re.compile(r"\s*(\d+|[rs]|\^|\(|\)|/|\*|\+|-)")


def _tokenize_scalar(text):
    pos, out = 0, []
    while pos < len(text):
        mobj = _SCALAR_TOKEN.match(text, pos)
        if not mobj:
            raise ParseError(f"bad scalar syntax at {text[pos:pos+10]!r}")
        out.append(mobj.group(1))
        pos = mobj.end()
    return out


class _ScalarParser:
    def __init__(self, tokens, m):
        self.toks = tokens
        self.i = 0
        self.m = m

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expect=None):
        tok = self.peek()
        if tok is None or (expect is not None and tok != expect):
            raise ParseError(f"expected {expect!r}, got {tok!r}")
        self.i += 1
        return tok

    def parse_exponent(self):
        paren = False
        if self.peek() == "(":
            self.take()
            paren = True
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        p = int(self.take())
        q = 1
        if self.peek() == "/":
            self.take()
            q = int(self.take())
        if paren:
            self.take(")")
        return Fraction(sign * p, q)

    def parse_factor(self):
        tok = self.take()
        if tok in ("r", "s"):
            exp = Fraction(1)
            if self.peek() == "^":
                self.take()
                exp = self.parse_exponent()
            if tok == "r":
                return RatFunc.mono_frac(1, exp, 0, self.m)
            return RatFunc.mono_frac(1, 0, exp, self.m)
        if tok.isdigit():
            p = int(tok)
            if self.peek() == "/":
                self.take()
                q = int(self.take())
                return RatFunc.const(Fraction(p, q), self.m)
            return RatFunc.const(p, self.m)
        raise ParseError(f"unexpected token {tok!r} in scalar")

    def parse_term(self):
        out = self.parse_factor()
        while True:
            tok = self.peek()
            if tok == "*":
                self.take()
                out = out * self.parse_factor()
            elif tok is not None and (tok.isdigit() or tok in ("r", "s")):
                out = out * self.parse_factor()
            else:
                return out

    def parse_sum(self):
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        out = self.parse_term()
        if sign < 0:
            out = -out
        while self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
            t = self.parse_term()
            out = out + (t if sign > 0 else -t)
        return out


def parse_scalar(text, m=1):
    toks = _tokenize_scalar(text)
    parser = _ScalarParser(toks, m)
    # top-level "(num)/(den)" form
    if toks and toks[0] == "(":
        depth, j = 0, 0
        for j, tok in enumerate(toks):
            depth += tok == "(";  depth -= tok == ")"
            if depth == 0:
                break
        if j + 1 < len(toks) and toks[j + 1] == "/" and toks[j + 2] == "(":
            parser.take("(")
            num = parser.parse_sum()
            parser.take(")")
            parser.take("/")
            parser.take("(")
            den = parser.parse_sum()
            parser.take(")")
            if parser.peek() is not None:
                raise ParseError("trailing input after (num)/(den)")
            return num / den
    out = parser.parse_sum()
    if parser.peek() is not None:
        raise ParseError(f"trailing input {parser.peek()!r} in scalar")
    return out


def _format_exp(a, m):
    e = Fraction(a, m)
    if e.denominator == 1:
        return str(e.numerator)
    return f"({e.numerator}/{e.denominator})"


def format_poly(p):
    if p.is_zero:
        return "0"
    keys = sorted(p.terms, key=_deglex, reverse=True)
    parts = []
    for key in keys:
        a, b = key
        c = p.terms[key]
        factors = []
        if a:
            factors.append("r" if (a == p.m) else f"r^{_format_exp(a, p.m)}")
        if b:
            factors.append("s" if (b == p.m) else f"s^{_format_exp(b, p.m)}")
        mag = abs(c)
        if not factors or mag != 1:
            factors.insert(0, str(mag))
        body = "*".join(factors)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def format_scalar(x):
    if x.den.is_one:
        return format_poly(x.num)
    return f"({format_poly(x.num)})/({format_poly(x.den)})"
