"""Exact integer lattice helpers.

Vectors are plain tuples of Python ints and matrices are lists of rows, so
everything is arbitrary precision and nothing touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd
from typing import Sequence

from .errors import DimensionMismatch, EmptyInputError, ZeroVectorError

IntVector = tuple


def vec(entries) -> IntVector:
    return tuple(int(x) for x in entries)


def as_rational(x) -> Fraction:
    """Parse ints, Fractions or strings like ``"-3/4"`` into a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not an exact rational: {x!r}")


def gcd_list(values) -> int:
    return reduce(gcd, (abs(int(v)) for v in values), 0)


def det2(u, v) -> int:
    return u[0] * v[1] - u[1] * v[0]


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def is_zero(v) -> bool:
    return all(x == 0 for x in v)


def gcd_minors2(M: Sequence[Sequence[int]]) -> int:
    """gcd of the absolute values of all 2x2 minors of a matrix with two columns.

    ``M`` is given as a list of rows. The result is 0 exactly when the two
    columns are linearly dependent.
    """
    rows = [tuple(r) for r in M]
    if len(rows) < 2 or any(len(r) != 2 for r in rows):
        raise DimensionMismatch(
            "gcd_minors2 needs a matrix with exactly 2 columns and at least 2 rows",
            shape=(len(rows), sorted({len(r) for r in rows})),
        )
    g = 0
    for a, b in combinations(rows, 2):
        g = gcd(g, abs(a[0] * b[1] - a[1] * b[0]))
    return g


def pair_index(u, v) -> int:
    """``gcd_minors2`` of the matrix whose columns are ``u`` and ``v``."""
    if len(u) != len(v):
        raise DimensionMismatch("columns differ in length", dims=(len(u), len(v)))
    return gcd_minors2(list(zip(u, v)))


def primitive_vector(v) -> IntVector:
    """Divide ``v`` by the gcd of its entries."""
    g = gcd_list(v)
    if g == 0:
        raise ZeroVectorError("cannot take the primitive vector of 0")
    return tuple(int(x) // g for x in v)


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_decomposition(M):
    """Diagonalise ``M`` (r x k, rows) by unimodular row and column operations.

    Returns ``(U, D, V, Uinv)`` with ``U @ M @ V == D`` diagonal and
    ``Uinv`` the inverse of ``U``. Divisibility of the diagonal is not
    enforced; the callers only need products and the transforms.
    """
    A = [list(map(int, row)) for row in M]
    r = len(A)
    k = len(A[0]) if r else 0
    U, Uinv, V = _identity(r), _identity(r), _identity(k)

    def add_row(i, j, c):  # row_i += c * row_j
        A[i] = [a + c * b for a, b in zip(A[i], A[j])]
        U[i] = [a + c * b for a, b in zip(U[i], U[j])]
        for row in Uinv:
            row[j] -= c * row[i]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]
        for row in Uinv:
            row[i], row[j] = row[j], row[i]

    def add_col(i, j, c):  # col_i += c * col_j
        for row in A:
            row[i] += c * row[j]
        for row in V:
            row[i] += c * row[j]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    for t in range(min(r, k)):
        while True:
            pivots = [(abs(A[i][j]), i, j) for i in range(t, r) for j in range(t, k) if A[i][j]]
            if not pivots:
                return U, A, V, Uinv
            _, pi, pj = min(pivots)
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = A[t][t]
            done = True
            for i in range(t + 1, r):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    done = done and A[i][t] == 0
            for j in range(t + 1, k):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    done = done and A[t][j] == 0
            if done:
                break
    return U, A, V, Uinv


def _columns_matrix(vectors):
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        raise EmptyInputError("need at least one vector")
    dims = {len(v) for v in vectors}
    if len(dims) != 1:
        raise DimensionMismatch("vectors of different dimensions", dims=sorted(dims))
    r = dims.pop()
    return [[v[i] for v in vectors] for i in range(r)], r, len(vectors)


def lattice_index(vectors) -> int:
    """Index of the Z-span of ``vectors`` inside its saturation.

    Equals the gcd of the maximal minors of the matrix with these columns.
    Returns 0 when the vectors are linearly dependent (rank drop).
    """
    M, r, k = _columns_matrix(vectors)
    if k > r:
        return 0
    _, D, _, _ = smith_decomposition(M)
    prod = 1
    for t in range(k):
        if D[t][t] == 0:
            return 0
        prod *= abs(D[t][t])
    return prod


def rank(vectors) -> int:
    M, r, k = _columns_matrix(vectors)
    _, D, _, _ = smith_decomposition(M)
    return sum(1 for t in range(min(r, k)) if D[t][t] != 0)


def saturation_basis(vectors) -> list:
    """A Z-basis of (R-span of ``vectors``) intersected with Z^r."""
    M, r, k = _columns_matrix(vectors)
    _, D, _, Uinv = smith_decomposition(M)
    rk = sum(1 for t in range(min(r, k)) if D[t][t] != 0)
    return [tuple(Uinv[i][t] for i in range(r)) for t in range(rk)]


def quotient_projection(vectors) -> list:
    """Rows of an integer map Z^r -> Z^(r-rank) whose kernel is the saturation
    of the span of ``vectors`` and which is surjective."""
    M, r, k = _columns_matrix(vectors)
    U, D, _, _ = smith_decomposition(M)
    rk = sum(1 for t in range(min(r, k)) if D[t][t] != 0)
    return [tuple(row) for row in U[rk:]]


def mat_vec(A, v) -> IntVector:
    return tuple(sum(a * x for a, x in zip(row, v)) for row in A)
