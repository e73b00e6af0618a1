from itertools import product

import pytest
from hypothesis import given, strategies as st

from tropimpl.errors import DimensionMismatch, EmptyInputError, ZeroVectorError
from tropimpl.lattice import (
    gcd_list,
    gcd_minors2,
    lattice_index,
    pair_index,
    primitive_vector,
    quotient_projection,
    rank,
    saturation_basis,
    smith_decomposition,
)

ints = st.integers(-30, 30)


def cols(u, v):
    return list(zip(u, v))


def test_gcd_minors2_examples():
    assert gcd_minors2(cols((1, 0), (0, 1))) == 1
    assert gcd_minors2(cols((2, 0, 0), (0, 2, 0))) == 4
    # the three minors are -2, -1 and 2
    assert gcd_minors2(cols((-1, -2, -2), (-2, -2, -3))) == 1


def test_gcd_minors2_rank_one_is_zero():
    assert gcd_minors2(cols((1, 2, 3), (2, 4, 6))) == 0


def test_gcd_minors2_shape_errors():
    with pytest.raises(DimensionMismatch):
        gcd_minors2([(1, 2, 3), (4, 5, 6)])
    with pytest.raises(DimensionMismatch):
        gcd_minors2([(1, 2)])


def brute_index(vectors):
    """Count points of the saturation inside the half-open parallelepiped
    spanned by the vectors (2D spans only)."""
    if rank(vectors) < len(vectors):
        return 0
    from fractions import Fraction

    B = saturation_basis(vectors)
    # express vectors in the saturation basis, then count integer points
    import sympy

    M = sympy.Matrix([list(b) for b in B]).T
    coords = [list(M.solve_least_squares(sympy.Matrix(list(v)))) for v in vectors]
    C = sympy.Matrix(coords).T
    return abs(int(C.det()))


def test_lattice_index_examples():
    assert lattice_index([(1, 0), (0, 1)]) == 1
    assert lattice_index([(2, 2, 2)]) == 2
    assert lattice_index([(1, 1, 0), (0, 2, 0)]) == 2
    # the saturation of span{(1,1,0),(0,2,0)} is Z^2 x 0; mod the span the
    # fundamental domain [0,1)x[0,2) holds exactly two lattice points
    pts = [p for p in product(range(0, 3), repeat=2) if p[0] < 1 and p[1] < 2]
    assert len(pts) == 2


def test_lattice_index_rank_drop():
    assert lattice_index([(1, 2), (2, 4)]) == 0
    assert lattice_index([(1, 0), (0, 1), (1, 1)]) == 0


def test_lattice_index_empty():
    with pytest.raises(EmptyInputError):
        lattice_index([])


@given(st.lists(ints, min_size=3, max_size=3), st.lists(ints, min_size=3, max_size=3))
def test_lattice_index_pair_matches_minors(u, v):
    assert lattice_index([tuple(u), tuple(v)]) == gcd_minors2(cols(u, v))


@given(st.lists(ints, min_size=1, max_size=5).filter(any))
def test_single_vector_index_is_content(v):
    assert lattice_index([tuple(v)]) == gcd_list(v)


@given(st.lists(st.lists(ints, min_size=3, max_size=3), min_size=3, max_size=3))
def test_square_index_is_abs_det(rows):
    import sympy

    d = abs(int(sympy.Matrix(rows).det()))
    assert lattice_index([tuple(r) for r in rows]) == d


@given(st.lists(ints, min_size=2, max_size=4), st.lists(ints, min_size=2, max_size=4))
def test_gcd_minors2_invariances(u, v):
    n = min(len(u), len(v))
    u, v = u[:n], v[:n]
    g = gcd_minors2(cols(u, v))
    assert gcd_minors2(cols(v, u)) == g
    assert gcd_minors2(cols([-x for x in u], v)) == g


def test_primitive_vector():
    assert primitive_vector((2, 4)) == (1, 2)
    assert primitive_vector((-3, 0, -3)) == (-1, 0, -1)
    assert primitive_vector((0, -6)) == (0, -1)
    with pytest.raises(ZeroVectorError):
        primitive_vector((0, 0))


@given(st.lists(ints, min_size=1, max_size=4).filter(any))
def test_primitive_idempotent(v):
    p = primitive_vector(v)
    assert primitive_vector(p) == p
    assert gcd_list(p) == 1
    k = gcd_list(v)
    assert tuple(k * x for x in p) == tuple(v)


@given(st.lists(st.lists(ints, min_size=3, max_size=3), min_size=1, max_size=3))
def test_smith_decomposition_identity(vectors):
    M = [[v[i] for v in vectors] for i in range(3)]
    U, D, V, Uinv = smith_decomposition(M)
    import sympy

    assert sympy.Matrix(U) * sympy.Matrix(M) * sympy.Matrix(V) == sympy.Matrix(D)
    assert sympy.Matrix(U) * sympy.Matrix(Uinv) == sympy.eye(3)
    assert abs(sympy.Matrix(U).det()) == 1 and abs(sympy.Matrix(V).det()) == 1


def test_quotient_projection_kernel():
    Q = quotient_projection([(1, 1, 1)])
    assert len(Q) == 2
    for row in Q:
        assert sum(row) == 0
    assert pair_index(Q[0], Q[1]) == 1 or len(Q[0]) == 3
