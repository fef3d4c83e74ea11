"""Exact linear algebra over the rationals, plus polynomial helpers.

Vectors are tuples of Fractions, matrices are tuples of row tuples.  Floats
are tolerated alongside Fractions so the numeric mode of the group layer can
reuse the same operations; everything that matters for verification stays in
exact arithmetic.  Polynomials in the formal parameter are coefficient tuples
(lowest degree first) with trailing zeros trimmed; the empty tuple is zero.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DimensionMismatch, InternalInvariantViolation

ZERO = Fraction(0)
ONE = Fraction(1)


def rat(value):
    """Coerce ints, strings and Fractions to Fraction; floats pass through."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, float):
        return value
    raise TypeError(f"cannot interpret {value!r} as a scalar")


def as_vector(values):
    return tuple(rat(v) for v in values)


def as_matrix(rows):
    mat = tuple(as_vector(row) for row in rows)
    if mat and any(len(row) != len(mat[0]) for row in mat):
        raise DimensionMismatch("ragged matrix")
    return mat


def zero_vector(n):
    return (ZERO,) * n


def basis_vector(n, i):
    return tuple(ONE if j == i else ZERO for j in range(n))


def identity(n):
    return tuple(basis_vector(n, i) for i in range(n))


def zero_matrix(rows, cols=None):
    cols = rows if cols is None else cols
    return tuple((ZERO,) * cols for _ in range(rows))


def is_zero_vector(v):
    return all(x == 0 for x in v)


def is_zero_matrix(m):
    return all(is_zero_vector(row) for row in m)


def vec_add(u, v):
    if len(u) != len(v):
        raise DimensionMismatch("vector lengths differ")
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    if len(u) != len(v):
        raise DimensionMismatch("vector lengths differ")
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v):
    return tuple(c * x for x in v)


def vec_neg(v):
    return tuple(-x for x in v)


def mat_vec(m, v):
    if m and len(m[0]) != len(v):
        raise DimensionMismatch("matrix and vector shapes differ")
    return tuple(sum((a * b for a, b in zip(row, v)), ZERO) for row in m)


def mat_mul(a, b):
    if a and b and len(a[0]) != len(b):
        raise DimensionMismatch("matrix shapes differ")
    bt = tuple(zip(*b)) if b else ()
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), ZERO) for col in bt) for row in a)


def mat_add(a, b):
    return tuple(vec_add(ra, rb) for ra, rb in zip(a, b))


def mat_sub(a, b):
    return tuple(vec_sub(ra, rb) for ra, rb in zip(a, b))


def mat_scale(c, m):
    return tuple(vec_scale(c, row) for row in m)


def transpose(m):
    return tuple(zip(*m)) if m else ()


class EchelonBasis:
    """Incremental reduced row echelon form over the rationals.

    Supports adding vectors one by one and exact span-membership queries;
    used for pruning spanning sets and picking complements by greedy pivoting.
    """

    def __init__(self, dim):
        self.dim = dim
        self.rows = []  # (pivot column, reduced row) pairs, pivot normalized to 1

    def _reduce(self, v):
        v = list(v)
        for piv, row in self.rows:
            c = v[piv]
            if c:
                for j in range(self.dim):
                    v[j] -= c * row[j]
        return v

    def add(self, v):
        """Add v to the span; returns True if it was independent."""
        if len(v) != self.dim:
            raise DimensionMismatch("vector length differs from ambient dimension")
        red = self._reduce(v)
        piv = next((j for j, x in enumerate(red) if x != 0), None)
        if piv is None:
            return False
        inv = red[piv]
        red = [x / inv for x in red]
        for other_piv, row in self.rows:
            c = row[piv]
            if c:
                for j in range(self.dim):
                    row[j] -= c * red[j]
        self.rows.append((piv, red))
        return True

    def contains(self, v):
        return all(x == 0 for x in self._reduce(v))

    @property
    def rank(self):
        return len(self.rows)


def independent_subset(vectors, dim):
    eb = EchelonBasis(dim)
    return [v for v in vectors if eb.add(v)]


def matrix_rank(m):
    if not m:
        return 0
    eb = EchelonBasis(len(m[0]))
    for row in m:
        eb.add(row)
    return eb.rank


def invert(m):
    """Exact inverse of a square rational matrix; ValueError if singular."""
    n = len(m)
    aug = [list(m[i]) + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def det(m):
    """Exact determinant via fraction-free (Bareiss) elimination."""
    n = len(m)
    if n == 0:
        return ONE
    work = [list(row) for row in m]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        piv = next((r for r in range(k, n) if work[r][k] != 0), None)
        if piv is None:
            return ZERO
        if piv != k:
            work[k], work[piv] = work[piv], work[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                work[i][j] = (work[k][k] * work[i][j] - work[i][k] * work[k][j]) / prev
            work[i][k] = ZERO
        prev = work[k][k]
    return sign * work[n - 1][n - 1]


def solve_in_basis(columns, rhs):
    """Solve sum_j x_j columns[j] = rhs exactly.

    Returns the coefficient tuple, or None if the system is inconsistent.
    Intended for independent columns, where the solution is unique.
    """
    m = len(rhs)
    n = len(columns)
    aug = [[columns[j][i] for j in range(n)] + [rhs[i]] for i in range(m)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, m):
        if aug[i][n] != 0:
            return None
    x = [ZERO] * n
    for idx, c in enumerate(pivots):
        x[c] = aug[idx][n]
    return tuple(x)


# ---------------------------------------------------------------------------
# univariate polynomials over the rationals
# ---------------------------------------------------------------------------

def poly_trim(p):
    p = tuple(p)
    end = len(p)
    while end and p[end - 1] == 0:
        end -= 1
    return p[:end]


def poly_is_zero(p):
    return not poly_trim(p)


def poly_add(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return poly_trim(out)


def poly_neg(p):
    return tuple(-c for c in p)


def poly_sub(p, q):
    return poly_add(p, poly_neg(q))


def poly_mul(p, q):
    p, q = poly_trim(p), poly_trim(q)
    if not p or not q:
        return ()
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] += a * b
    return poly_trim(out)


def poly_scale(c, p):
    if c == 0:
        return ()
    return poly_trim(tuple(c * x for x in p))


def poly_eval(p, x):
    acc = ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_valuation(p):
    """Index of the lowest nonzero coefficient; None for the zero polynomial."""
    for i, c in enumerate(p):
        if c != 0:
            return i
    return None


def poly_divexact(num, den):
    """Exact quotient num / den in the polynomial ring; fails loudly otherwise."""
    den = poly_trim(den)
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    num = list(poly_trim(num))
    if not num:
        return ()
    dd = len(den) - 1
    lead = den[-1]
    if len(num) - 1 < dd:
        raise InternalInvariantViolation("inexact polynomial division")
    q = [ZERO] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            f = c / lead
            q[i - dd] = f
            for j, dj in enumerate(den):
                num[i - dd + j] -= f * dj
    if any(c != 0 for c in num):
        raise InternalInvariantViolation("inexact polynomial division")
    return poly_trim(q)


def poly_series_div(num, den, order):
    """Taylor coefficients 0..order of num/den, which must be regular at 0.

    The caller guarantees valuation(num) >= valuation(den) (or num == 0).
    """
    den = poly_trim(den)
    v = poly_valuation(den)
    if v is None:
        raise ZeroDivisionError("series division by zero")
    num = poly_trim(num)
    if not num:
        return (ZERO,) * (order + 1)
    if poly_valuation(num) < v:
        raise ValueError("quotient is not regular at 0")
    ns = num[v:]
    ds = den[v:]
    d0 = ds[0]
    out = []
    for m in range(order + 1):
        acc = ns[m] if m < len(ns) else ZERO
        for j in range(m):
            step = m - j
            if step < len(ds) and ds[step]:
                acc -= out[j] * ds[step]
        out.append(acc / d0)
    return tuple(out)


def poly_det(rows):
    """Determinant of a square matrix of polynomials (fraction-free Bareiss)."""
    n = len(rows)
    if n == 0:
        return (ONE,)
    work = [[poly_trim(p) for p in row] for row in rows]
    sign = 1
    prev = (ONE,)
    for k in range(n - 1):
        piv = next((r for r in range(k, n) if work[r][k]), None)
        if piv is None:
            return ()
        if piv != k:
            work[k], work[piv] = work[piv], work[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = poly_sub(poly_mul(work[k][k], work[i][j]),
                               poly_mul(work[i][k], work[k][j]))
                work[i][j] = poly_divexact(num, prev)
            work[i][k] = ()
        prev = work[k][k]
    d = work[n - 1][n - 1]
    return poly_neg(d) if sign < 0 else d


# ---------------------------------------------------------------------------
# deterministic random sampling helpers
# ---------------------------------------------------------------------------

def random_fraction(rng, max_num=6, max_den=4):
    return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))


def random_vector(rng, dim, max_num=6, max_den=4):
    return tuple(random_fraction(rng, max_num, max_den) for _ in range(dim))
