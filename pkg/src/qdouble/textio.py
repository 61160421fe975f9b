"""Text grammar for algebra elements and tensors.

Generators are written E1, F2, K1, K1', w1, w1', e1', f1; torus inverses and
powers as K1^-1, w1'^2; repeated E/F/e'/f letters may be abbreviated E1^3.
Juxtaposition is the product, scalar prefixes follow the coeff grammar, and
tensors are written "(x) ox (y)".  Elements whose coefficients share a
denominator print as "(sum)/(den)"; parsing accepts the same shape, so
round-trips are bit-exact.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebra import AlgElement, TensorElement, letter, _CLASS
from .errors import ParseError
from .scalars import RatFunc, format_poly, format_scalar, poly_gcd

_TOKEN = re.compile(
    r"\s*(ox|[EFK]\d+'?|[wef]\d+'?|\d+|[rs]|\^|\(|\)|/|\*|\+|-)")

_GEN = re.compile(r"^([EFKwef])(\d+)('?)$")


def _tokenize(text):
    pos, out = 0, []
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        mobj = _TOKEN.match(text, pos)
        if not mobj:
            raise ParseError(f"bad element syntax at {text[pos:pos + 12]!r}")
        out.append(mobj.group(1))
        pos = mobj.end()
    return out


def _gen_letter(token, rank):
    mobj = _GEN.match(token)
    fam, idx, prime = mobj.group(1), int(mobj.group(2)) - 1, mobj.group(3)
    if not 0 <= idx < rank:
        raise ParseError(f"generator index out of range in {token!r}")
    if fam in ("E", "F") and prime:
        raise ParseError(f"{token!r}: E/F generators carry no prime")
    if fam == "e" and not prime:
        raise ParseError(f"{token!r}: the raising generator is written e<i>'")
    if fam == "f" and prime:
        raise ParseError(f"{token!r}: the lowering generator is written f<i>")
    if fam == "K" and prime:
        fam = "K'"
    elif fam == "w" and prime:
        fam = "w'"
    return fam, idx


class _ElementParser:
    def __init__(self, tokens, ambient):
        self.toks = tokens
        self.i = 0
        self.ambient = ambient
        self.m = ambient.datum.m

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expect=None):
        tok = self.peek()
        if tok is None or (expect is not None and tok != expect):
            raise ParseError(f"expected {expect!r}, got {tok!r}")
        self.i += 1
        return tok

    def parse_power(self):
        self.take("^")
        paren = self.peek() == "("
        if paren:
            self.take()
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
        tok = self.peek()
        if tok == "(":
            self.take()
            inner = self.parse_sum()
            self.take(")")
            return inner
        tok = self.take()
        if tok in ("r", "s"):
            exp = Fraction(1)
            if self.peek() == "^":
                exp = self.parse_power()
            if tok == "r":
                return self.ambient.scalar_elem(RatFunc.mono_frac(1, exp, 0, self.m))
            return self.ambient.scalar_elem(RatFunc.mono_frac(1, 0, exp, self.m))
        if tok.isdigit():
            val = Fraction(int(tok))
            if self.peek() == "/" and self.i + 1 < len(self.toks) \
                    and self.toks[self.i + 1].isdigit():
                self.take()
                val = Fraction(val, int(self.take()))
            return self.ambient.scalar_elem(RatFunc.const(val, self.m))
        if _GEN.match(tok):
            fam, idx = _gen_letter(tok, self.ambient.datum.rank)
            pw = 1
            if self.peek() == "^":
                frac = self.parse_power()
                if frac.denominator != 1:
                    raise ParseError("generator powers must be integers")
                pw = int(frac)
            if _CLASS[fam] == 1:
                if pw == 0:
                    return self.ambient.one()
                return self.ambient.gen(fam, idx, pw)
            if pw < 0:
                raise ParseError(f"negative power of non-torus generator {tok!r}")
            return self.ambient.gen(fam, idx) ** pw
        raise ParseError(f"unexpected token {tok!r}")

    def parse_product(self):
        out = self.parse_factor()
        while True:
            tok = self.peek()
            if tok == "*":
                self.take()
                out = out * self.parse_factor()
            elif tok is not None and tok not in (")", "+", "-", "/", "ox"):
                out = out * self.parse_factor()
            else:
                return out

    def parse_sum(self):
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        out = self.parse_product()
        if sign < 0:
            out = -out
        while self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
            t = self.parse_product()
            out = out + (t if sign > 0 else -t)
        return out


def parse_element(text, ambient):
    """Parse the element grammar over the given presentation."""
    toks = _tokenize(text)
    if not toks:
        raise ParseError("empty element")
    parser = _ElementParser(toks, ambient)
    out = parser.parse_sum()
    # optional "/(scalar)" tail: common-denominator display form
    if parser.peek() == "/":
        parser.take()
        parser.take("(")
        den = parser.parse_sum()
        parser.take(")")
        if den.terms and set(den.terms) != {()}:
            raise ParseError("element denominators must be scalars")
        out = out.scale(den.terms[()].inv())
    if parser.peek() is not None:
        raise ParseError(f"trailing input {parser.peek()!r}")
    return out


def _split_top_level_sum(toks):
    """Split a token list into (sign, chunk) pairs at depth-0 +/-."""
    chunks = []
    depth, start, sign = 0, 0, 1
    i = 0
    while i < len(toks):
        tok = toks[i]
        depth += tok == "("
        depth -= tok == ")"
        if depth == 0 and tok in ("+", "-") and i > start:
            chunks.append((sign, toks[start:i]))
            sign = 1 if tok == "+" else -1
            start = i + 1
        elif depth == 0 and tok in ("+", "-") and i == start:
            sign = sign * (1 if tok == "+" else -1)
            start = i + 1
        i += 1
    chunks.append((sign, toks[start:]))
    return chunks


def _parse_tensor_term(toks, ambients):
    """One term: [scalar prefix] (x) ox (y) [ox (z)]."""
    m = ambients[0].datum.m
    ox_positions = []
    depth = 0
    for i, tok in enumerate(toks):
        depth += tok == "("
        depth -= tok == ")"
        if tok == "ox" and depth == 0:
            ox_positions.append(i)
    if len(ox_positions) != len(ambients) - 1:
        raise ParseError(f"expected {len(ambients)} tensor factors")
    # the slot group before the first "ox" ends right there; scan back
    end = ox_positions[0] - 1
    if end < 0 or toks[end] != ")":
        raise ParseError("tensor factors must be parenthesized")
    depth = 0
    slot_start = None
    for i in range(end, -1, -1):
        depth += toks[i] == ")"
        depth -= toks[i] == "("
        if depth == 0:
            slot_start = i
            break
    prefix = toks[:slot_start]
    coeff = RatFunc.one(m)
    if prefix:
        parser = _ElementParser(prefix, ambients[0])
        pref = parser.parse_product()
        if parser.peek() == "*":
            parser.take()
            pref = pref * parser.parse_product()
        if parser.peek() is not None:
            raise ParseError("bad scalar prefix in tensor term")
        if pref.terms and set(pref.terms) != {()}:
            raise ParseError("tensor prefixes must be scalars")
        coeff = pref.terms.get((), RatFunc.zero(m))
    bounds = [slot_start] + [p + 1 for p in ox_positions]
    ends = [p for p in ox_positions] + [len(toks)]
    factors = []
    for amb, lo, hi in zip(ambients, bounds, ends):
        parser = _ElementParser(toks[lo:hi], amb)
        factors.append(parser.parse_sum())
        if parser.peek() is not None:
            raise ParseError("trailing input in tensor factor")
    terms = {}
    from itertools import product as _product
    for combo in _product(*(f.terms.items() for f in factors)):
        words = tuple(w for w, _ in combo)
        c = coeff
        for _, c2 in combo:
            c = c * c2
        cur = terms.get(words)
        terms[words] = c if cur is None else cur + c
    return TensorElement(ambients, terms)


def parse_tensor(text, ambients):
    """Parse sums of tensor terms "(x) ox (y) + ..." (arity two or three)."""
    toks = _tokenize(text)
    if not toks:
        raise ParseError("empty tensor")
    total = TensorElement(ambients, {})
    for sign, chunk in _split_top_level_sum(toks):
        term = _parse_tensor_term(chunk, ambients)
        total = total + (term if sign > 0 else -term)
    return total


def _letter_str(lt):
    fam, idx, pw = lt
    if fam == "e":
        base = f"e{idx + 1}'"
    elif fam in ("K'", "w'"):
        base = f"{fam[0]}{idx + 1}'"
    else:
        base = f"{fam}{idx + 1}"
    return base if pw == 1 else f"{base}^{pw}"


def _word_str(word):
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        lt = word[i]
        if _CLASS[lt[0]] != 1:
            run = 1
            while i + run < len(word) and word[i + run] == lt:
                run += 1
            base = _letter_str(lt)
            parts.append(base if run == 1 else f"{base}^{run}")
            i += run
        else:
            parts.append(_letter_str(lt))
            i += 1
    return " ".join(parts)


def _term_str(word, coeff, lead):
    if coeff.is_monomial():
        mono = format_poly(coeff.num)
        neg = mono.startswith("-")
        if neg:
            mono = mono[1:]
        sign = ("- " if neg else "+ ") if not lead else ("-" if neg else "")
        if mono == "1" and word:
            return f"{sign}{_word_str(word)}"
        if not word:
            return f"{sign}{mono}"
        return f"{sign}{mono} {_word_str(word)}"
    body = f"({format_scalar(coeff)})"
    if word:
        body += f" {_word_str(word)}"
    return body if lead else f"+ {body}"


def format_element(x):
    """Canonical text form; pulls a common scalar denominator when present."""
    if not x.terms:
        return "0"
    from .scalars import LaurentPoly
    common = LaurentPoly.one(x.ambient.datum.m)
    for c in x.terms.values():
        d = c.den
        if d.is_one:
            continue
        if common.is_one:
            common = d
        else:
            common = common * d.divexact(poly_gcd(common, d))
    if not common.is_one:
        scaled = x.scale(RatFunc.of_poly(common))
        if all(c.is_polynomial() for c in scaled.terms.values()):
            return f"({_format_sum(scaled)})/({format_poly(common)})"
    return _format_sum(x)


def _format_sum(x):
    items = sorted(x.terms.items(), key=lambda kv: (-len(kv[0]), kv[0]))
    parts = []
    for i, (word, coeff) in enumerate(items):
        parts.append(_term_str(word, coeff, lead=i == 0))
    return " ".join(parts)


def format_tensor(t):
    if not t.terms:
        return "0"
    keys = sorted(t.terms, key=lambda k: tuple((len(w), w) for w in k))
    parts = []
    for i, key in enumerate(keys):
        c = t.terms[key]
        factors = " ox ".join(f"({_word_str(w)})" for w in key)
        if c.is_one:
            frag = factors
        else:
            frag = f"({format_scalar(c)}) {factors}"
        parts.append(frag if i == 0 else f"+ {frag}")
    return " ".join(parts)
