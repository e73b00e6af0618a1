"""Lattice polygons, inner normal fans and mixed volumes."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from math import gcd

from .errors import EmptyInputError
from .lattice import det2, dot, primitive_vector


@dataclass(frozen=True)
class LatticePolygon:
    """Convex hull of finitely many lattice points.

    ``vertices`` are the extreme points, counterclockwise for dim 2 and
    starting from the lowest (then leftmost) vertex. A segment stores its two
    endpoints, a point stores itself.
    """

    vertices: tuple
    dim: int

    def edges(self):
        """Edge vectors as (start, end) pairs, counterclockwise for polygons."""
        v = self.vertices
        if self.dim == 0:
            return []
        if self.dim == 1:
            return [(v[0], v[1])]
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def twice_area(self) -> int:
        if self.dim < 2:
            return 0
        v = self.vertices
        return sum(det2(v[i], v[(i + 1) % len(v)]) for i in range(len(v)))


def convex_hull(points) -> LatticePolygon:
    pts = sorted(set((int(p[0]), int(p[1])) for p in points))
    if not pts:
        raise EmptyInputError("convex hull of no points")
    if len(pts) == 1:
        return LatticePolygon((pts[0],), 0)

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 or all(cross(pts[0], pts[-1], p) == 0 for p in pts):
        return LatticePolygon((pts[0], pts[-1]), 1)
    start = min(range(len(hull)), key=lambda i: (hull[i][1], hull[i][0]))
    return LatticePolygon(tuple(hull[start:] + hull[:start]), 2)


def minkowski_sum(P: LatticePolygon, Q: LatticePolygon) -> LatticePolygon:
    return convex_hull([(a[0] + b[0], a[1] + b[1]) for a in P.vertices for b in Q.vertices])


def _rot90(d):
    return (-d[1], d[0])


def inner_normal_rays(P: LatticePolygon) -> list:
    """One primitive inner normal per edge; a segment gives two opposite rays."""
    if P.dim == 0:
        return []
    if P.dim == 1:
        a, b = P.vertices
        n = primitive_vector(_rot90((b[0] - a[0], b[1] - a[1])))
        return [n, (-n[0], -n[1])]
    # the interior lies to the left of each counterclockwise edge
    return [primitive_vector(_rot90((b[0] - a[0], b[1] - a[1]))) for a, b in P.edges()]


def _half(v):
    return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1


def angle_compare(u, v) -> int:
    """Counterclockwise angular order starting at direction (1, 0)."""
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return -1 if hu < hv else 1
    c = det2(u, v)
    return -1 if c > 0 else (1 if c < 0 else 0)


def sort_by_angle(vectors) -> list:
    return sorted(vectors, key=cmp_to_key(angle_compare))


@dataclass(frozen=True)
class RefinedFan:
    rays: tuple

    def __len__(self):
        return len(self.rays)

    def consecutive_pairs(self):
        m = len(self.rays)
        return [(self.rays[i], self.rays[(i + 1) % m]) for i in range(m)] if m > 1 else []


def common_refinement(polygons) -> RefinedFan:
    rays = set()
    for P in polygons:
        rays.update(inner_normal_rays(P))
    if not rays:
        raise EmptyInputError("every polygon is a point: the normal fans have no rays")
    return RefinedFan(tuple(sort_by_angle(rays)))


def face_in_direction(P: LatticePolygon, w) -> tuple:
    """Vertices of P minimising <., w> (one vertex or the two ends of an edge)."""
    m = min(dot(v, w) for v in P.vertices)
    return tuple(v for v in P.vertices if dot(v, w) == m)


def lattice_length_of_face(P: LatticePolygon, rho) -> int:
    face = face_in_direction(P, rho)
    if len(face) < 2:
        return 0
    a, b = face
    return gcd(abs(b[0] - a[0]), abs(b[1] - a[1]))


def mixed_volume(P: LatticePolygon, Q: LatticePolygon) -> int:
    twice = minkowski_sum(P, Q).twice_area() - P.twice_area() - Q.twice_area()
    return twice // 2


def edge_lattice_lengths(P: LatticePolygon):
    return [gcd(abs(b[0] - a[0]), abs(b[1] - a[1])) for a, b in P.edges()]
