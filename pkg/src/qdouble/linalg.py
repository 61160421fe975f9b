"""Dense exact linear algebra over the scalar field (no floats anywhere)."""

from __future__ import annotations

from .errors import DegenerateQuotient
from .scalars import RatFunc


def _zero(m):
    return RatFunc.zero(m)


def rref(rows, m=1):
    """Reduced row echelon form; returns (new rows, pivot column list)."""
    if rows:
        m = rows[0][0].m if rows[0] else m
    mat = [list(row) for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    pivots = []
    rr = 0
    for col in range(ncols):
        piv = None
        for i in range(rr, nrows):
            if not mat[i][col].is_zero:
                piv = i
                break
        if piv is None:
            continue
        mat[rr], mat[piv] = mat[piv], mat[rr]
        inv = mat[rr][col].inv()
        mat[rr] = [x * inv for x in mat[rr]]
        for i in range(nrows):
            if i != rr and not mat[i][col].is_zero:
                c = mat[i][col]
                mat[i] = [a - c * b for a, b in zip(mat[i], mat[rr])]
        pivots.append(col)
        rr += 1
        if rr == nrows:
            break
    return mat, pivots


def rank(rows, m=1):
    return len(rref(rows, m)[1])


def kernel(rows, ncols, m=1):
    """Basis of the right kernel {v : rows . v = 0} as coordinate lists."""
    if rows:
        m = rows[0][0].m if rows[0] else m
    red, pivots = rref(rows, m)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    one = RatFunc.one(m)
    for fc in free:
        v = [_zero(m) for _ in range(ncols)]
        v[fc] = one
        for rr, pc in enumerate(pivots):
            v[pc] = -red[rr][fc]
        basis.append(v)
    return basis


def invert(rows):
    """Inverse of a square matrix; DegenerateQuotient when singular."""
    n = len(rows)
    if n == 0:
        return []
    m = rows[0][0].m
    one = RatFunc.one(m)
    aug = [list(row) + [one if i == j else _zero(m) for j in range(n)]
           for i, row in enumerate(rows)]
    red, pivots = rref(aug, m)
    if pivots[:n] != list(range(n)):
        raise DegenerateQuotient("matrix is singular")
    return [row[n:] for row in red]


def solve(rows, rhs):
    """Solve A x = rhs for square invertible A."""
    inv = invert(rows)
    return [sum((inv[i][j] * rhs[j] for j in range(len(rhs))),
                _zero(rhs[0].m)) for i in range(len(rhs))]


def mat_mul(a, b):
    m = a[0][0].m if a and a[0] else 1
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), _zero(m))
             for j in range(len(b[0]))] for i in range(len(a))]


def is_identity(a):
    for i, row in enumerate(a):
        for j, x in enumerate(row):
            if i == j and not x.is_one:
                return False
            if i != j and not x.is_zero:
                return False
    return True
