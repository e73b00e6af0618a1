"""Weighted polyhedral fans: refinement, canonical comparison, balancing.

Two-dimensional fans in Z^n are handled plane by plane. Every 2-cone spans
a rational plane, identified by the primitive sign-normalised vector of its
Plücker coordinates. Within a plane the rays are sorted by angle in integer
coordinates and coplanar cones are cut into elementary sectors whose
weights add up.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations

from .errors import DimensionMismatch, NonIntegralWeightError, ParallelEndpointsError
from .lattice import gcd_list, mat_vec, primitive_vector, quotient_projection, rank
from .polygon import angle_compare


@dataclass(frozen=True)
class Cone:
    generators: tuple
    weight: Fraction

    def to_dict(self):
        return {"generators": [list(g) for g in self.generators], "weight": _fmt(self.weight)}


@dataclass(frozen=True)
class WeightedFan:
    """Pure-dimensional weighted fan of dimension ``dim`` in Z^rank."""

    rank: int
    dim: int
    cones: tuple
    degenerate: tuple = ()

    def to_dict(self):
        return {
            "rank": self.rank,
            "dim": self.dim,
            "cones": [c.to_dict() for c in self.cones],
            "degenerate": [
                {"generators": [list(g) for g in gens], "reason": reason}
                for gens, reason in self.degenerate
            ],
        }

    @classmethod
    def from_dict(cls, d):
        cones = tuple(
            Cone(tuple(tuple(int(x) for x in g) for g in c["generators"]), Fraction(str(c["weight"])))
            for c in d["cones"]
        )
        degenerate = tuple(
            (tuple(tuple(int(x) for x in g) for g in e["generators"]), e.get("reason", ""))
            for e in d.get("degenerate", [])
        )
        return cls(int(d["rank"]), int(d["dim"]), cones, degenerate)

    def rays(self):
        out = set()
        for c in self.cones:
            out.update(primitive_vector(g) for g in c.generators)
        return sorted(out)


def _fmt(w: Fraction) -> str:
    return str(w.numerator) if w.denominator == 1 else f"{w.numerator}/{w.denominator}"


def check_integral(fan: WeightedFan) -> WeightedFan:
    for c in fan.cones:
        if c.weight.denominator != 1:
            raise NonIntegralWeightError(
                "cone weight is not an integer", generators=c.generators, weight=_fmt(c.weight)
            )
    return fan


# ---------------------------------------------------------------------------
# planes


def plucker(u, v) -> tuple:
    n = len(u)
    return tuple(u[i] * v[j] - u[j] * v[i] for i in range(n) for j in range(i + 1, n))


def plane_key(u, v):
    """Primitive Plücker vector with first nonzero entry positive, and the
    sign relating it to the orientation (u, v)."""
    p = plucker(u, v)
    if all(x == 0 for x in p):
        raise ParallelEndpointsError("generators are parallel", u=u, v=v)
    p = primitive_vector(p)
    sign = 1
    for x in p:
        if x:
            sign = 1 if x > 0 else -1
            break
    return tuple(sign * x for x in p), sign


class _Plane:
    """Integer 2D coordinates on a rational plane with a canonical orientation."""

    def __init__(self, u, v):
        _, sign = plane_key(u, v)
        if sign < 0:
            u, v = v, u
        self.u, self.v = u, v
        n = len(u)
        for i in range(n):
            for j in range(i + 1, n):
                m = u[i] * v[j] - u[j] * v[i]
                if m:
                    self.i, self.j, self.m = i, j, m
                    return

    def coords(self, w):
        i, j, m = self.i, self.j, self.m
        sg = 1 if m > 0 else -1
        a = (w[i] * self.v[j] - w[j] * self.v[i]) * sg
        b = (self.u[i] * w[j] - self.u[j] * w[i]) * sg
        return a, b

    def contains(self, w) -> bool:
        a, b = self.coords(w)
        m = abs(self.m)
        return all(a * x + b * y == m * z for x, y, z in zip(self.u, self.v, w))


def _cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def refine_2d(cones, rank_n: int) -> list:
    """Cut coplanar 2-cones into elementary sectors with summed weights.

    ``cones`` is an iterable of ((u, v), weight). Every fan ray lying in a
    plane is used as a cut in that plane. Returns a sorted list of
    ((r1, r2), weight) with primitive generators, r1 before r2
    counterclockwise in the plane's canonical orientation, weight != 0.
    """
    cones = [((tuple(u), tuple(v)), Fraction(w)) for (u, v), w in cones]
    for (u, v), _ in cones:
        if len(u) != rank_n or len(v) != rank_n:
            raise DimensionMismatch("generator of the wrong dimension", expected=rank_n)
    planes: dict = {}
    all_rays = set()
    for (u, v), w in cones:
        key, _ = plane_key(u, v)
        planes.setdefault(key, []).append(((u, v), w))
        all_rays.add(primitive_vector(u))
        all_rays.add(primitive_vector(v))
    out = []
    for key in sorted(planes):
        members = planes[key]
        geo = _Plane(*members[0][0])
        rays = [r for r in all_rays if geo.contains(r)]
        coords = {r: geo.coords(r) for r in rays}
        order = sorted(rays, key=cmp_to_key(lambda a, b: angle_compare(coords[a], coords[b])))
        parts = []
        for (u, v), w in members:
            cu, cv = geo.coords(u), geo.coords(v)
            if _cross(cu, cv) < 0:
                cu, cv = cv, cu
            parts.append((cu, cv, w))
        k = len(order)
        for idx in range(k if k >= 2 else 0):
            a, b = order[idx], order[(idx + 1) % k]
            ca, cb = coords[a], coords[b]
            if _cross(ca, cb) <= 0:
                continue
            mid = (ca[0] + cb[0], ca[1] + cb[1])
            total = sum(
                (w for cu, cv, w in parts if _cross(cu, mid) > 0 and _cross(mid, cv) > 0),
                Fraction(0),
            )
            if total != 0:
                out.append(((a, b), total))
    return sorted(out)


def refine_fan(fan: WeightedFan) -> WeightedFan:
    if fan.dim != 2:
        return fan
    pieces = refine_2d(((c.generators, c.weight) for c in fan.cones), fan.rank)
    return WeightedFan(fan.rank, 2, tuple(Cone(g, w) for g, w in pieces), fan.degenerate)


def canonical_form(fan: WeightedFan):
    """A hashable description of the weighted support, independent of the
    chosen subdivision: per plane, the rays where the sector weight changes
    together with the weight of the sector that follows each of them."""
    if fan.dim == 1:
        acc: dict = {}
        for c in fan.cones:
            r = primitive_vector(c.generators[0])
            acc[r] = acc.get(r, Fraction(0)) + c.weight
        return frozenset((r, w) for r, w in acc.items() if w)
    if fan.dim != 2:
        return frozenset(
            (frozenset(primitive_vector(g) for g in c.generators), c.weight) for c in fan.cones
        )
    pieces = refine_2d(((c.generators, c.weight) for c in fan.cones), fan.rank)
    by_plane: dict = {}
    for (a, b), w in pieces:
        key, _ = plane_key(a, b)
        by_plane.setdefault(key, []).append((a, b, w))
    result = set()
    for key, secs in by_plane.items():
        geo = _Plane(secs[0][0], secs[0][1])
        rays = set()
        for a, b, _ in secs:
            rays.update((a, b))
        coords = {r: geo.coords(r) for r in rays}
        order = sorted(rays, key=cmp_to_key(lambda x, y: angle_compare(coords[x], coords[y])))
        after = {a: w for a, b, w in secs}
        before = {b: w for a, b, w in secs}
        # a sector only exists between consecutive rays; the weight following
        # a ray is zero unless a piece starts there
        changes = tuple(
            sorted((r, after.get(r, Fraction(0))) for r in order if after.get(r, Fraction(0)) != before.get(r, Fraction(0)))
        )
        result.add((key, changes))
    return frozenset(result)


def fans_equal(f: WeightedFan, g: WeightedFan) -> bool:
    return f.rank == g.rank and f.dim == g.dim and canonical_form(f) == canonical_form(g)


def check_balanced(fan: WeightedFan) -> dict:
    """Balancing of a 2-dimensional weighted fan at each of its rays."""
    if fan.dim != 2:
        raise DimensionMismatch("balancing is only checked for 2-dimensional fans", dim=fan.dim)
    fine = refine_fan(fan)
    incident: dict = {}
    for c in fine.cones:
        a, b = c.generators
        incident.setdefault(a, []).append((b, c.weight))
        incident.setdefault(b, []).append((a, c.weight))
    failures = []
    for ray in sorted(incident):
        Q = quotient_projection([ray])
        total = [Fraction(0)] * len(Q)
        for other, w in incident[ray]:
            img = primitive_vector(mat_vec(Q, other))
            total = [t + w * x for t, x in zip(total, img)]
        if any(total):
            failures.append({"ray": list(ray), "residual": [_fmt(x) for x in total]})
    return {"balanced": not failures, "failures": failures, "rays": len(incident)}
