"""Finite-type Cartan data and the two-parameter Euler bilinear form.

The Euler form <i,j> is d_i a_ij for i < j, d_i on the diagonal and 0 for
i > j (the case split follows the declared node ordering of the Cartan
matrix).  It is extended bilinearly to rational weights; every r/s exponent
in the algebras is an Euler-form value, so all of them live on the 1/m
lattice fixed here, with m the index of the root lattice in the weight
lattice (det of the Cartan matrix) for the built-in types.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction

from .errors import DimensionMismatch, InvalidArgument
from .scalars import RatFunc


class Weight:
    """Exact weight in simple-root coordinates."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(Fraction(c) for c in coords)

    def __add__(self, other):
        if len(self.coords) != len(other.coords):
            raise DimensionMismatch("weights of different rank")
        return Weight(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other):
        if len(self.coords) != len(other.coords):
            raise DimensionMismatch("weights of different rank")
        return Weight(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self):
        return Weight(-a for a in self.coords)

    def __rmul__(self, c):
        return Weight(Fraction(c) * a for a in self.coords)

    def __eq__(self, other):
        return isinstance(other, Weight) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"Weight({list(map(str, self.coords))})"

    @property
    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coords)

    def is_dominant_integral(self):
        return self.is_integral() and all(c >= 0 for c in self.coords)

    def height(self):
        return sum(self.coords)


def _det_int(rows):
    # Bareiss fraction-free determinant for small integer matrices
    n = len(rows)
    m = [list(map(int, row)) for row in rows]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


class RootDatum:
    """Cartan matrix of finite type + symmetrizers + Euler form table."""

    __slots__ = ("name", "cartan", "sym", "euler", "m", "rank")

    def __init__(self, cartan, sym, name=None, m=None):
        cartan = tuple(tuple(int(x) for x in row) for row in cartan)
        sym = tuple(int(d) for d in sym)
        n = len(cartan)
        if any(len(row) != n for row in cartan) or len(sym) != n:
            raise DimensionMismatch("cartan/sym sizes disagree")
        for i in range(n):
            if cartan[i][i] != 2:
                raise InvalidArgument("diagonal of a Cartan matrix must be 2")
            if sym[i] <= 0:
                raise InvalidArgument("symmetrizers must be positive")
            for j in range(n):
                if i != j and cartan[i][j] > 0:
                    raise InvalidArgument("off-diagonal entries must be <= 0")
                if (cartan[i][j] == 0) != (cartan[j][i] == 0):
                    raise InvalidArgument("zero pattern must be symmetric")
                if sym[i] * cartan[i][j] != sym[j] * cartan[j][i]:
                    raise InvalidArgument("d_i a_ij = d_j a_ji fails")
        # finite type <=> the symmetrized matrix is positive definite
        b = [[sym[i] * cartan[i][j] for j in range(n)] for i in range(n)]
        for k in range(1, n + 1):
            if _det_int([row[:k] for row in b[:k]]) <= 0:
                raise InvalidArgument("Cartan matrix is not of finite type")
        self.name = name
        self.cartan = cartan
        self.sym = sym
        self.rank = n
        self.euler = tuple(
            tuple(sym[i] * cartan[i][j] if i < j else (sym[i] if i == j else 0)
                  for j in range(n))
            for i in range(n))
        self.m = int(m) if m else max(1, abs(_det_int(cartan)))

    def __eq__(self, other):
        return (isinstance(other, RootDatum)
                and self.cartan == other.cartan and self.sym == other.sym
                and self.m == other.m)

    def __hash__(self):
        return hash((self.cartan, self.sym, self.m))

    def __repr__(self):
        return f"RootDatum({self.name or self.cartan})"

    # -- weights --------------------------------------------------------

    def root(self, i):
        """Simple root alpha_i (0-based index)."""
        self._check_index(i)
        return Weight(Fraction(int(k == i)) for k in range(self.rank))

    def zero_weight(self):
        return Weight([0] * self.rank)

    def _check_index(self, i):
        if not 0 <= i < self.rank:
            raise DimensionMismatch(f"generator index {i} out of range")

    def check_weight(self, lam):
        if len(lam.coords) != self.rank:
            raise DimensionMismatch("weight has wrong rank")
        for c in lam.coords:
            if self.m % c.denominator:
                raise InvalidArgument(
                    f"weight coordinate {c} is not on the 1/{self.m} lattice")

    # -- the Euler form ---------------------------------------------------

    def euler_form(self, lam, mu):
        """Bilinear extension <lam, mu>; exact rational."""
        if len(lam.coords) != self.rank or len(mu.coords) != self.rank:
            raise DimensionMismatch("weights of wrong rank")
        total = Fraction(0)
        for i, a in enumerate(lam.coords):
            if not a:
                continue
            row = self.euler[i]
            for j, b in enumerate(mu.coords):
                if b:
                    total += a * b * row[j]
        return total

    def pairing_exponents(self, lam, mu):
        return self.euler_form(lam, mu), self.euler_form(mu, lam)

    # -- scalar helpers -----------------------------------------------------

    def mono(self, rexp, sexp, coeff=1):
        """Monomial coeff * r^rexp s^sexp on this datum's exponent lattice."""
        return RatFunc.mono_frac(coeff, rexp, sexp, self.m)

    def r_i(self, i):
        return self.mono(self.sym[i], 0)

    def s_i(self, i):
        return self.mono(0, self.sym[i])

    def torus_eigenvalue(self, kind, mu, lam):
        """Eigenvalue of omega_mu (kind 'omega') or omega'_mu on weight lam."""
        if not mu.is_integral():
            raise InvalidArgument("torus label must lie in the root lattice")
        self.check_weight(lam)
        lm = self.euler_form(lam, mu)
        ml = self.euler_form(mu, lam)
        if kind in ("omega", "w", "K"):
            return self.mono(lm, -ml)
        if kind in ("omega_prime", "w'", "K'"):
            return self.mono(-ml, lm)
        raise InvalidArgument(f"unknown torus kind {kind!r}")

    def serre_coefficient(self, i, j, k):
        """Monomial coefficient of the degree-k term of the (i,j) Serre relation."""
        self._check_index(i)
        self._check_index(j)
        if i == j:
            raise InvalidArgument("Serre coefficients need i != j")
        n = 1 - self.cartan[i][j]
        if not 0 <= k <= n:
            raise InvalidArgument(f"Serre index k={k} out of range 0..{n}")
        half = Fraction(k * (k - 1), 2) * self.sym[i]
        return self.mono(half + k * self.euler[j][i], -half - k * self.euler[i][j])

    def serre_coefficient_prime(self, i, j, k):
        """Serre coefficient for the primed raising generators (Euler arguments swapped)."""
        self._check_index(i)
        self._check_index(j)
        if i == j:
            raise InvalidArgument("Serre coefficients need i != j")
        n = 1 - self.cartan[i][j]
        if not 0 <= k <= n:
            raise InvalidArgument(f"Serre index k={k} out of range 0..{n}")
        half = Fraction(k * (k - 1), 2) * self.sym[i]
        return self.mono(half + k * self.euler[i][j], -half - k * self.euler[j][i])


_BUILTIN = {
    "A1": ([[2]], [1]),
    "A2": ([[2, -1], [-1, 2]], [1, 1]),
    "A3": ([[2, -1, 0], [-1, 2, -1], [0, -1, 2]], [1, 1, 1]),
    "B2": ([[2, -1], [-2, 2]], [2, 1]),
    "C2": ([[2, -2], [-1, 2]], [1, 2]),
    "B3": ([[2, -1, 0], [-1, 2, -1], [0, -2, 2]], [2, 2, 1]),
}


def root_datum(spec):
    """Built-in datum by name ('A1', 'A2', 'A3', 'B2', 'C2', 'B3')."""
    name = spec.strip().upper()
    if name not in _BUILTIN:
        raise InvalidArgument(
            f"unknown type {spec!r}; built-ins: {', '.join(sorted(_BUILTIN))}")
    cartan, sym = _BUILTIN[name]
    return RootDatum(cartan, sym, name=name)


def _derive_symmetrizers(cartan):
    n = len(cartan)
    d = [Fraction(0)] * n
    for start in range(n):
        if d[start]:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i != j and cartan[i][j] and not d[j]:
                    d[j] = d[i] * cartan[i][j] / cartan[j][i]
                    stack.append(j)
    denom = math.lcm(*(c.denominator for c in d))
    ints = [int(c * denom) for c in d]
    g = math.gcd(*ints)
    return [x // g for x in ints]


def datum_from_config(obj):
    """Datum from decoded JSON: {"type": "A2"} or {"cartan": ..., "sym": ...}."""
    if "type" in obj:
        return root_datum(obj["type"])
    if "cartan" not in obj:
        raise InvalidArgument('config needs a "type" or a "cartan" key')
    cartan = obj["cartan"]
    sym = obj.get("sym") or _derive_symmetrizers(cartan)
    return RootDatum(cartan, sym, name=obj.get("name"))


def load_datum(path):
    with open(path) as fh:
        return datum_from_config(json.load(fh))


def parse_weight(text, datum):
    """Parse weights like "1/2 a1 + a2 - 3 a3" (a<i> = i-th simple root, 1-based)."""
    text = text.strip()
    coords = [Fraction(0)] * datum.rank
    if text in ("0", ""):
        return Weight(coords)
    for chunk in text.replace("-", "+-").split("+"):
        chunk = chunk.strip()
        if not chunk:
            continue
        neg = chunk.startswith("-")
        if neg:
            chunk = chunk[1:].strip()
        if "a" not in chunk:
            raise InvalidArgument(f"weight term {chunk!r} has no a<i> part")
        coeff_text, idx_text = chunk.split("a", 1)
        coeff_text = coeff_text.replace("*", "").strip()
        coeff = Fraction(coeff_text) if coeff_text else Fraction(1)
        try:
            idx = int(idx_text.strip())
        except ValueError as exc:
            raise InvalidArgument(f"bad root index in {chunk!r}") from exc
        if not 1 <= idx <= datum.rank:
            raise DimensionMismatch(f"root index {idx} out of range")
        coords[idx - 1] += -coeff if neg else coeff
    w = Weight(coords)
    datum.check_weight(w)
    return w


def format_weight(w):
    parts = []
    for i, c in enumerate(w.coords):
        if not c:
            continue
        mag = abs(c)
        body = f"a{i + 1}" if mag == 1 else f"{mag} a{i + 1}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"
