"""Exact integer and rational linear algebra.

Matrices are small (dimension <= ~30) but entries can be hundreds of digits,
so everything here is written for arbitrary-precision ints / Fractions and
never touches floating point.

Conventions fixed once for the whole package:

* ``hnf`` is the column-style Hermite normal form: ``H = M * U`` with U
  unimodular.  Nonzero columns come first, the pivot (first nonzero entry
  going down) of each later column sits strictly lower, pivots are positive,
  and in a pivot's row every entry to the left is reduced into ``[0, pivot)``.
  For a full-rank square matrix H is lower triangular.
* ``snf`` returns the full diagonal ``d_1 | d_2 | ... >= 0``.
"""

from fractions import Fraction

from .intutil import xgcd


class IntMatrix:
    """Rectangular matrix of arbitrary-precision integers."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        self.data = [list(map(int, row)) for row in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else 0
        assert all(len(r) == self.cols for r in self.data), "ragged matrix"

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)])

    def __getitem__(self, ij):
        return self.data[ij[0]][ij[1]]

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.data == other.data

    def __hash__(self):
        return hash(tuple(map(tuple, self.data)))

    def __repr__(self):
        return "IntMatrix(%r)" % (self.data,)

    def transpose(self):
        return IntMatrix([[self.data[i][j] for i in range(self.rows)]
                          for j in range(self.cols)])

    def mul(self, other):
        assert self.cols == other.rows
        out = [[sum(self.data[i][k] * other.data[k][j] for k in range(self.cols))
                for j in range(other.cols)] for i in range(self.rows)]
        return IntMatrix(out)

    def det(self):
        """Exact determinant by fraction-free (Bareiss) elimination."""
        assert self.rows == self.cols, "determinant of non-square matrix"
        n = self.rows
        if n == 0:
            return 1
        a = [row[:] for row in self.data]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]


def _row_hnf(a, n_cols):
    """Row-style HNF of the list-of-rows ``a`` (destructive), returning the
    transform rows alongside.  Helper for :func:`hnf`; rows of ``a`` carry an
    attached transform block appended to each row (width = original rows)."""
    n_rows = len(a)
    pivot_row = 0
    pivot_cols = []
    for col in range(n_cols):
        # find a row at or below pivot_row with nonzero entry in col
        i0 = next((i for i in range(pivot_row, n_rows) if a[i][col] != 0), None)
        if i0 is None:
            continue
        a[pivot_row], a[i0] = a[i0], a[pivot_row]
        for i in range(pivot_row + 1, n_rows):
            if a[i][col] == 0:
                continue
            p, q = a[pivot_row][col], a[i][col]
            if q % p == 0:
                f = q // p
                a[i] = [u - f * v for u, v in zip(a[i], a[pivot_row])]
            else:
                # 2x2 unimodular combination zeroing a[i][col]
                g, x, y = xgcd(p, q)
                r1 = [x * u + y * v for u, v in zip(a[pivot_row], a[i])]
                r2 = [(-(q // g)) * u + (p // g) * v
                      for u, v in zip(a[pivot_row], a[i])]
                a[pivot_row], a[i] = r1, r2
        if a[pivot_row][col] < 0:
            a[pivot_row] = [-u for u in a[pivot_row]]
        piv = a[pivot_row][col]
        for i in range(pivot_row):
            f = a[i][col] // piv
            if f:
                a[i] = [u - f * v for u, v in zip(a[i], a[pivot_row])]
        pivot_cols.append(col)
        pivot_row += 1
        if pivot_row == n_rows:
            break
    return pivot_cols


def hnf(m):
    """Column-style Hermite normal form.

    Returns (H, U) with ``H = M * U``, U unimodular.  Total on all integer
    matrices; zero columns of H are pushed to the right.
    """
    if not isinstance(m, IntMatrix):
        m = IntMatrix(m)
    # operate on rows of M^T, carrying the transform
    nt_rows, nt_cols = m.cols, m.rows
    a = [[m.data[j][i] for j in range(nt_cols)] +
         [1 if k == i else 0 for k in range(nt_rows)]
         for i in range(nt_rows)]
    _row_hnf(a, nt_cols)
    h_t = [row[:nt_cols] for row in a]
    u_t = [row[nt_cols:] for row in a]
    h = IntMatrix(h_t).transpose()
    u = IntMatrix(u_t).transpose()
    assert abs(u.det()) == 1
    return h, u


def snf(m):
    """Smith normal form diagonal of an integer matrix.

    Returns the list ``[d_1, ..., d_min(r,c)]`` with ``d_i >= 0`` and
    ``d_i | d_{i+1}``.

    Computed through determinantal divisors (the k-th invariant is the gcd of
    all k x k minors divided by the (k-1)-th): elimination-free, so entries
    never swell, and Bareiss keeps each minor exact.  Quadratic-exponential in
    the dimension, which is irrelevant at the sizes this package meets.
    """
    from itertools import combinations
    from math import gcd

    if not isinstance(m, IntMatrix):
        m = IntMatrix(m)
    rows, cols = m.rows, m.cols
    n = min(rows, cols)
    if n == 0:
        return []
    diag = []
    prev = 1
    for k in range(1, n + 1):
        g = 0
        for rsel in combinations(range(rows), k):
            for csel in combinations(range(cols), k):
                sub = IntMatrix([[m.data[i][j] for j in csel] for i in rsel])
                g = gcd(g, sub.det())
                if g == prev:  # cannot shrink below d_{k-1}
                    break
            if g == prev:
                break
        if g == 0:
            break
        diag.append(g // prev)
        prev = g
    diag += [0] * (n - len(diag))
    return diag


# --- exact elimination over Q and F_p ------------------------------------

def rref_fraction(rows):
    """Reduced row echelon form over Q.  Returns (new_rows, pivot_cols).

    Input rows are lists of ints or Fractions; output entries are Fractions.
    """
    a = [[Fraction(x) for x in row] for row in rows]
    if not a:
        return a, []
    n_cols = len(a[0])
    piv_cols = []
    r = 0
    for c in range(n_cols):
        if r == len(a):
            break
        pr = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv_cols.append(c)
        r += 1
    return a, piv_cols


def solve_fraction(mat_rows, rhs):
    """Solve M x = rhs exactly over Q; returns list of Fractions or None."""
    n = len(mat_rows)
    aug = [list(mat_rows[i]) + [rhs[i]] for i in range(n)]
    red, piv = rref_fraction(aug)
    ncols = len(mat_rows[0]) if n else 0
    if ncols in piv:
        return None  # inconsistent
    x = [Fraction(0)] * ncols
    for r, c in enumerate(piv):
        x[c] = red[r][ncols]
    # reject underdetermined-but-inconsistent rows
    for r in range(len(piv), n):
        if red[r][ncols] != 0:
            return None
    return x

def kernel_fraction(rows, n_cols):
    """Basis of the right kernel of the matrix over Q."""
    red, piv = rref_fraction(rows) if rows else ([], [])
    free = [c for c in range(n_cols) if c not in piv]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n_cols
        v[fc] = Fraction(1)
        for r, c in enumerate(piv):
            v[c] = -red[r][fc]
        basis.append(v)
    return basis


def rref_mod(rows, p):
    """Reduced row echelon form over F_p.  Returns (new_rows, pivot_cols)."""
    a = [[x % p for x in row] for row in rows]
    if not a:
        return a, []
    n_cols = len(a[0])
    piv_cols = []
    r = 0
    for c in range(n_cols):
        if r == len(a):
            break
        pr = next((i for i in range(r, len(a)) if a[i][c]), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [x * inv % p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        piv_cols.append(c)
        r += 1
    return a, piv_cols


def kernel_mod(rows, n_cols, p):
    """Basis of the right kernel over F_p."""
    red, piv = rref_mod(rows, p) if rows else ([], [])
    free = [c for c in range(n_cols) if c not in piv]
    basis = []
    for fc in free:
        v = [0] * n_cols
        v[fc] = 1
        for r, c in enumerate(piv):
            v[c] = -red[r][fc] % p
        basis.append(v)
    return basis


def solve_mod(mat_rows, rhs, p):
    """One solution of M x = rhs over F_p, or None."""
    n = len(mat_rows)
    ncols = len(mat_rows[0]) if n else 0
    aug = [list(mat_rows[i]) + [rhs[i]] for i in range(n)]
    red, piv = rref_mod(aug, p)
    if ncols in piv:
        return None
    x = [0] * ncols
    for r, c in enumerate(piv):
        x[c] = red[r][ncols]
    for r in range(len(piv), n):
        if red[r][ncols] % p:
            return None
    return x
