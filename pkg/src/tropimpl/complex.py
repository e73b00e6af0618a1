"""Weighted boundary complexes: realization as fans and push-forward."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from .errors import DimensionMismatch, InputError, NonIntegralWeightError, NotRefinableError
from .fan import Cone, WeightedFan, refine_2d
from .lattice import lattice_index, mat_vec, primitive_vector, rank, saturation_basis


@dataclass
class BoundaryComplexInput:
    rank: int
    divisors: list  # (name, valuation)
    cells: list  # (tuple of divisor indices, intersection number)
    dim: int = 2

    def __post_init__(self):
        self.divisors = [(str(n), tuple(int(x) for x in v)) for n, v in self.divisors]
        self.cells = [(tuple(int(i) for i in I), int(c)) for I, c in self.cells]
        for name, v in self.divisors:
            if len(v) != self.rank:
                raise DimensionMismatch("valuation of the wrong length", divisor=name, rank=self.rank)
        for I, c in self.cells:
            if len(I) != self.dim:
                raise InputError("cell size differs from the complex dimension", cell=I, dim=self.dim)
            if len(set(I)) != len(I) or any(i < 0 or i >= len(self.divisors) for i in I):
                raise InputError("cell refers to unknown or repeated divisors", cell=I)
            if c < 0:
                raise InputError("negative intersection number", cell=I)

    @classmethod
    def from_dict(cls, d):
        names = [x["name"] for x in d["divisors"]]
        cells = []
        for c in d["cells"]:
            idx = [names.index(x) if isinstance(x, str) else int(x) for x in c["divisors"]]
            cells.append((idx, c.get("intersection_number", 1)))
        return cls(int(d["rank"]), [(x["name"], x["valuation"]) for x in d["divisors"]], cells,
                   int(d.get("dim", 2)))


def realize_weighted_complex(inp: BoundaryComplexInput) -> WeightedFan:
    """Cone over the realization, weighted by intersection number times the
    lattice index of the valuations spanning each cell."""
    cones, degenerate = [], []
    for I, c in inp.cells:
        gens = tuple(inp.divisors[i][1] for i in I)
        if c == 0:
            degenerate.append((gens, "zero intersection number"))
            continue
        idx = lattice_index(gens)
        if idx == 0:
            degenerate.append((gens, "rank drop"))
            continue
        cones.append(Cone(gens, Fraction(c * idx)))
    return WeightedFan(inp.rank, inp.dim, tuple(cones), tuple(degenerate))


def pushforward_fan(fan: WeightedFan, A, delta: int = 1) -> WeightedFan:
    """Push a weighted fan forward along the linear map with integer matrix A."""
    A = [tuple(int(x) for x in row) for row in A]
    if any(len(row) != fan.rank for row in A):
        raise DimensionMismatch("matrix must have one column per ambient coordinate",
                                columns=sorted({len(r) for r in A}), rank=fan.rank)
    n = len(A)
    images, degenerate = [], list(fan.degenerate)
    for cone in fan.cones:
        img = tuple(mat_vec(A, g) for g in cone.generators)
        if rank(img) < fan.dim:
            degenerate.append((img, "image rank drop"))
            continue
        basis = saturation_basis(cone.generators)
        idx = lattice_index([mat_vec(A, b) for b in basis])
        images.append((img, cone.weight * idx))
    if fan.dim == 2:
        pieces = refine_2d(images, n) if images else []
        cones = [Cone(g, w / delta) for g, w in pieces]
    elif fan.dim == 1:
        acc: dict = {}
        for (g,), w in images:
            r = primitive_vector(g)
            acc[r] = acc.get(r, Fraction(0)) + w
        cones = [Cone((r,), w / delta) for r, w in sorted(acc.items()) if w]
    else:
        acc = {}
        for gens, w in images:
            key = frozenset(primitive_vector(g) for g in gens)
            for other in acc:
                if other != key and _overlap(key, other):
                    raise NotRefinableError("overlapping image cones need a refinement",
                                            cones=(sorted(key), sorted(other)))
            acc[key] = acc.get(key, Fraction(0)) + w
        cones = [Cone(tuple(sorted(k)), w / delta) for k, w in acc.items() if w]
    for c in cones:
        if c.weight.denominator != 1:
            raise NonIntegralWeightError("push-forward weight is not an integer",
                                         generators=c.generators, weight=str(c.weight))
    return WeightedFan(n, fan.dim, tuple(cones), tuple(degenerate))


def _coordinates(gens, v):
    """Coefficients of v in the independent generators, or None if v is
    outside their span."""
    M = sympy.Matrix([list(g) for g in gens]).T
    try:
        sol, params = M.gauss_jordan_solve(sympy.Matrix(list(v)))
    except ValueError:
        return None
    return list(sol)


def _overlap(a, b) -> bool:
    """Conservative test for simplicial cones of equal dimension: they
    overlap if they share a span and the barycentre of one lies in the
    other (closed) cone."""
    a, b = sorted(a), sorted(b)
    if rank(a + b) != rank(a):
        return False
    for p, q in ((a, b), (b, a)):
        centre = tuple(sum(x) for x in zip(*p))
        c = _coordinates(q, centre)
        if c is not None and all(x >= 0 for x in c):
            return True
    return False
