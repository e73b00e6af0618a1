from math import gcd

import pytest
from hypothesis import given, strategies as st

from tropimpl.errors import EmptyInputError
from tropimpl.fixtures import FIRST_SUPPORTS, NODAL_SUPPORTS
from tropimpl.lattice import det2, dot
from tropimpl.polygon import (
    common_refinement,
    convex_hull,
    face_in_direction,
    inner_normal_rays,
    lattice_length_of_face,
    mixed_volume,
    sort_by_angle,
)

SQUARE = convex_hull([(0, 0), (1, 0), (0, 1), (1, 1)])


def test_hull_shapes():
    assert convex_hull([(0, 0)]).dim == 0
    assert convex_hull([(0, 0), (1, 1), (2, 2)]).dim == 1
    tri = convex_hull([(0, 0), (2, 1), (1, 2), (1, 1)])
    assert tri.dim == 2 and len(tri.vertices) == 3
    # counterclockwise
    assert tri.twice_area() > 0


def test_inner_normals_examples():
    assert set(inner_normal_rays(SQUARE)) == {(1, 0), (0, 1), (-1, 0), (0, -1)}
    assert set(inner_normal_rays(convex_hull([(0, 0), (2, 0)]))) == {(0, 1), (0, -1)}
    assert inner_normal_rays(convex_hull([(3, 3)])) == []


def test_triangle_normals_by_rotation():
    tri = convex_hull([(0, 0), (2, 1), (1, 2)])
    rays = inner_normal_rays(tri)
    assert len(rays) == 3
    edges = tri.edges()
    for (a, b), r in zip(edges, rays):
        rot = (-(b[1] - a[1]), b[0] - a[0])
        g = gcd(*map(abs, rot))
        assert r == (rot[0] // g, rot[1] // g)
        assert set(face_in_direction(tri, r)) == {a, b}
    # the edge from (0,0) to (2,1) has the interior on its left: normal (-1, 2)
    assert (-1, 2) in rays and (1, -2) not in rays


def test_common_refinement_counts():
    hulls = lambda supps: [convex_hull(s) for s in supps]
    assert len(common_refinement(hulls(NODAL_SUPPORTS))) == 8
    assert len(common_refinement(hulls(FIRST_SUPPORTS))) == 9
    assert len(common_refinement([SQUARE])) == 4
    with pytest.raises(EmptyInputError):
        common_refinement([convex_hull([(1, 1)])])


def test_refinement_sorted_from_east():
    fan = common_refinement([SQUARE, convex_hull([(0, 0), (1, 1)])])
    assert fan.rays[0] == (1, 0)
    for a, b in zip(fan.rays, fan.rays[1:]):
        assert sort_by_angle([b, a]) == [a, b]


def test_lattice_length_examples():
    sq2 = convex_hull([(0, 0), (2, 0), (0, 2), (2, 2)])
    assert lattice_length_of_face(sq2, (0, 1)) == 2
    assert lattice_length_of_face(sq2, (1, 1)) == 0
    P2 = convex_hull([(0, 0), (0, 1), (2, 0)])
    # the face is the segment from (0,0) to (2,0), which has three lattice points
    pts = [(x, 0) for x in range(0, 3)]
    assert lattice_length_of_face(P2, (0, 1)) == len(pts) - 1


def test_mixed_volume_examples():
    e1 = convex_hull([(0, 0), (1, 0)])
    e2 = convex_hull([(0, 0), (0, 1)])
    assert mixed_volume(e1, e2) == 1
    P2 = convex_hull([(0, 0), (0, 1), (2, 0)])
    P3 = convex_hull([(0, 0), (1, 1)])
    assert mixed_volume(P2, P3) == 3
    assert mixed_volume(SQUARE, SQUARE) == 2
    assert mixed_volume(e1, convex_hull([(0, 0), (3, 0)])) == 0
    assert mixed_volume(SQUARE, convex_hull([(5, 5)])) == 0


points = st.lists(st.tuples(st.integers(-6, 6), st.integers(-6, 6)), min_size=1, max_size=7)


@given(points, points, st.tuples(st.integers(-9, 9), st.integers(-9, 9)))
def test_mixed_volume_symmetric_translation_invariant(a, b, shift):
    P, Q = convex_hull(a), convex_hull(b)
    Qs = convex_hull([(x + shift[0], y + shift[1]) for x, y in b])
    mv = mixed_volume(P, Q)
    assert mv == mixed_volume(Q, P) == mixed_volume(P, Qs)
    assert mv >= 0
    from tropimpl.polygon import minkowski_sum

    positive = minkowski_sum(P, Q).dim == 2 and P.dim > 0 and Q.dim > 0
    assert (mv > 0) == positive


@given(points)
def test_polygon_closure(a):
    P = convex_hull(a)
    if P.dim < 2:
        return
    total = [0, 0]
    for (u, v), r in zip(P.edges(), inner_normal_rays(P)):
        length = gcd(abs(v[0] - u[0]), abs(v[1] - u[1]))
        rot = (r[1], -r[0])  # rotate by -90 degrees
        total[0] += length * rot[0]
        total[1] += length * rot[1]
    assert total == [0, 0]


@given(points, points)
def test_refinement_contains_input_rays(a, b):
    P, Q = convex_hull(a), convex_hull(b)
    if P.dim == 0 and Q.dim == 0:
        return
    fan = common_refinement([P, Q])
    assert set(inner_normal_rays(P)) | set(inner_normal_rays(Q)) == set(fan.rays)
