"""Exact integer-lattice linear algebra.

Matrices are row-major tuples of tuples; lattice bases are the *columns*.
Dimensions here never exceed ~8, so everything is plain Python with exact
ints/Fractions and no attempt at asymptotic cleverness.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd

from .errors import (
    BadDimension,
    DependentColumns,
    NotCoprime,
    NotSquare,
    Singular,
)
from .numeric import mod_inverse

Matrix = tuple  # tuple[tuple[int | Fraction, ...], ...]

LLL_DELTA = Fraction(3, 4)


# -- small helpers ------------------------------------------------------------

def as_matrix(rows) -> Matrix:
    return tuple(tuple(r) for r in rows)


def columns(M) -> list[tuple]:
    return [tuple(col) for col in zip(*M)]


def from_columns(cols) -> Matrix:
    return tuple(zip(*cols))


def transpose(M) -> Matrix:
    return tuple(zip(*M))


def matmul(A, B) -> Matrix:
    Bt = list(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in Bt) for row in A)


def matvec(A, x) -> tuple:
    return tuple(sum(a * b for a, b in zip(row, x)) for row in A)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def primitive(v) -> tuple[int, ...]:
    """Scale a nonzero rational vector by a positive factor to a primitive integer vector."""
    v = [Fraction(x) for x in v]
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive scaling")
    return tuple(x // g for x in ints)


# -- determinants and inverses --------------------------------------------------

def _check_square(M):
    n = len(M)
    if any(len(r) != n for r in M):
        raise NotSquare(f"matrix is not square: {len(M)} rows")
    return n


def determinant(M) -> int:
    """Exact determinant of an integer matrix by Bareiss fraction-free elimination."""
    n = _check_square(M)
    if n == 0:
        return 1
    a = [list(r) for r in M]
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
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def inverse_rational(M) -> Matrix:
    """Exact inverse over Q by Gauss-Jordan elimination."""
    n = _check_square(M)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M)]
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            raise Singular("matrix is singular")
        a[c], a[p] = a[p], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    inv_m = tuple(tuple(row[n:]) for row in a)
    assert matmul(M, inv_m) == identity(n)
    return inv_m


def adjugate_scaled(M, scale: int) -> Matrix:
    """``scale * M^{-1}`` as an integer matrix (scale must be a multiple of det M)."""
    inv = inverse_rational(M)
    out = tuple(tuple(scale * x for x in row) for row in inv)
    assert all(x.denominator == 1 for row in out for x in row)
    return tuple(tuple(int(x) for x in row) for row in out)


# -- LLL -----------------------------------------------------------------------

def _gram_schmidt(b):
    n = len(b)
    bstar = []
    mu = [[Fraction(0)] * n for _ in range(n)]
    norms = []
    for i in range(n):
        v = [Fraction(x) for x in b[i]]
        for j in range(i):
            mu[i][j] = dot(b[i], bstar[j]) / norms[j]
            v = [x - mu[i][j] * y for x, y in zip(v, bstar[j])]
        bstar.append(v)
        norms.append(dot(v, v))
    return bstar, mu, norms


def lll_conditions_hold(cols, delta=LLL_DELTA) -> bool:
    """Size reduction (|mu_ij| <= 1/2) and the Lovász condition, checked exactly."""
    _, mu, norms = _gram_schmidt([list(c) for c in cols])
    n = len(cols)
    for i in range(n):
        for j in range(i):
            if abs(mu[i][j]) > Fraction(1, 2):
                return False
    for k in range(1, n):
        if norms[k] < (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            return False
    return True


def lll_reduce(basis, delta=LLL_DELTA) -> tuple[Matrix, Matrix]:
    """LLL-reduce the columns of ``basis``.

    Returns ``(reduced, transform)`` with ``reduced == basis @ transform`` and
    ``transform`` unimodular.
    """
    cols = [list(c) for c in columns(basis)]
    n = len(cols)
    dim = len(basis)
    T = [[int(i == j) for j in range(n)] for i in range(n)]  # column i of T is T[i]
    _, mu, norms = _gram_schmidt(cols)
    if any(x == 0 for x in norms):
        raise DependentColumns("basis columns are linearly dependent")

    def size_reduce(k, j):
        q = round(mu[k][j])
        if q:
            cols[k] = [x - q * y for x, y in zip(cols[k], cols[j])]
            T[k] = [x - q * y for x, y in zip(T[k], T[j])]
            for l in range(j):
                mu[k][l] -= q * mu[j][l]
            mu[k][j] -= q

    k = 1
    while k < n:
        size_reduce(k, k - 1)
        if norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            for j in range(k - 2, -1, -1):
                size_reduce(k, j)
            k += 1
        else:
            cols[k], cols[k - 1] = cols[k - 1], cols[k]
            T[k], T[k - 1] = T[k - 1], T[k]
            _, mu, norms = _gram_schmidt(cols)
            k = max(k - 1, 1)
    reduced = tuple(tuple(row) for row in zip(*cols)) if n else tuple(() for _ in range(dim))
    transform = tuple(tuple(row) for row in zip(*T))
    return reduced, transform


# -- Barvinok short vector -------------------------------------------------------

def _score(alpha_num):
    """Ordering key on candidate numerators: max |alpha|, then support size."""
    return (max(abs(x) for x in alpha_num), sum(1 for x in alpha_num if x))


def short_nonneg_combination(U, index: int) -> tuple[tuple[int, ...], tuple[Fraction, ...]]:
    """Find a nonzero integer ``w`` with ``alpha = U^{-1} w`` small.

    Guarantees ``max |alpha_j| < 1`` and that not every nonzero ``alpha_j`` is
    negative (so ``w`` never lies in the negated cone, where the signed
    replacement identity breaks down).
    """
    D = len(U)
    A = adjugate_scaled(U, index)  # lattice of index * alpha
    R, T = lll_reduce(A)
    Rc, Tc = columns(R), columns(T)

    def search(box):
        best = None
        for x in itertools.product(range(-box, box + 1), repeat=D):
            if not any(x):
                continue
            num = tuple(sum(Rc[i][r] * x[i] for i in range(D)) for r in range(D))
            key = (_score(num), x)
            if best is None or key < best[0]:
                best = (key, num, x)
        return best

    best = search(2)
    box = 2
    while best[0][0][0] >= index:
        box += 1
        best = search(box)
    _, num, x = best
    w = tuple(sum(Tc[i][r] * x[i] for i in range(D)) for r in range(D))
    if all(v <= 0 for v in num):
        num = tuple(-v for v in num)
        w = tuple(-v for v in w)
    alpha = tuple(Fraction(v, index) for v in num)
    assert any(w), "zero short vector"
    assert matvec(U, alpha) == w
    assert max(abs(a) for a in alpha) < 1
    return w, alpha


# -- congruence lattice ------------------------------------------------------------

def congruence_lattice_basis(a, b: int) -> Matrix:
    """Basis (columns) of {m in Z^d : sum a_j m_j == 0 mod b}."""
    d = len(a)
    if d < 1:
        raise BadDimension("need at least one coefficient")
    if b < 2:
        raise BadDimension(f"modulus must be >= 2, got {b}")
    for j, aj in enumerate(a, start=1):
        if gcd(aj, b) != 1:
            raise NotCoprime(aj, b, j)
    inv1 = mod_inverse(a[0], b)
    cols = [tuple(b if i == 0 else 0 for i in range(d))]
    for j in range(1, d):
        c = (a[j] * inv1) % b
        cols.append(tuple(-c if i == 0 else int(i == j) for i in range(d)))
    return from_columns(cols)
