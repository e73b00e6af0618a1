"""Tropical graph of a generic parametric surface from Newton polygons.

For f = (f_1, ..., f_n) generic relative to its supports, the surface is
compactified inside the toric surface of the common refinement of the
normal fans. Its boundary divisors are the curve closures F_i and the toric
divisors D_rho, and their intersection numbers come from lattice lengths,
the toric intersection form and torus root counts.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import sympy
from sympy import Poly, QQ

from .errors import CommonFactorError, GenericityError, NonIntegralWeightError
from .graph import Edge, TropicalGraph, Vertex
from .lattice import det2, gcd_list, gcd_minors2
from .poly import (
    LaurentPoly,
    common_zero_fibres,
    newton_polygon,
    rational_points_of_fibres,
    squarefree_without_monomials,
    torus_common_factor,
    torus_intersection_length,
    trop_eval,
)
from .polygon import common_refinement, lattice_length_of_face, minkowski_sum, mixed_volume


@dataclass
class GenericInput:
    polys: list
    delta: int = 1
    keep_zero_edges: bool = True
    use_mixed_volume: bool = False
    force: bool = False
    verify_delta: bool = False
    seed: int = 0

    def __post_init__(self):
        self.polys = list(self.polys)
        if any(f.is_zero() for f in self.polys):
            raise ValueError("the zero polynomial is not allowed")
        if int(self.delta) < 1:
            raise ValueError("delta must be a positive integer")


@dataclass
class GenericityCertificate:
    violations: list = field(default_factory=list)

    @property
    def accepted(self) -> bool:
        return not self.violations

    @property
    def status(self) -> str:
        return "accepted" if self.accepted else "rejected"

    def kinds(self):
        return sorted({v["kind"] for v in self.violations})

    def to_dict(self):
        return {"status": self.status, "violations": self.violations}


# ---------------------------------------------------------------------------
# genericity


def _initial_univariate(f: LaurentPoly, rho) -> Poly | None:
    """Write init_rho(f) = monomial * p(z) with z = s^d1 t^d2, d perpendicular
    to rho; returns p, or None when the initial form is a monomial."""
    init = f.initial_form(rho)
    if init.is_monomial():
        return None
    d = (-rho[1], rho[0])
    coord = 0 if d[0] != 0 else 1
    exps = init.support()
    ks = {e: Fraction(e[coord], d[coord]) for e in exps}
    k0 = min(ks.values())
    z = sympy.Symbol("z")
    terms = {}
    for e, c in init.terms.items():
        k = int(ks[e] - k0)
        terms[(k,)] = QQ(c.numerator, c.denominator)
    return Poly.from_dict(terms, z, domain=QQ)


def _point_witness(fibres):
    points, irrational = rational_points_of_fibres(fibres)
    out = [{"s": str(p[0]), "t": str(p[1])} for p in points]
    out += [{"algebraic": fib.describe()} for fib in irrational]
    return out


def certify_generic(inp: GenericInput) -> GenericityCertificate:
    cert = GenericityCertificate()
    polys = inp.polys
    n = len(polys)
    nonmono = [i for i in range(n) if not polys[i].is_monomial()]

    # (a) squarefree
    for i in nonmono:
        if not squarefree_without_monomials(polys[i]):
            cert.violations.append({
                "kind": "repeated-factor",
                "polys": [i + 1],
                "detail": "polynomial is not squarefree",
            })

    # (d) pairwise finite torus intersections
    shares = set()
    for i, j in combinations(nonmono, 2):
        if torus_common_factor(polys[i], polys[j]):
            shares.add((i, j))
            cert.violations.append({
                "kind": "repeated-factor",
                "polys": [i + 1, j + 1],
                "detail": "polynomials share a factor: the curves have a common component",
            })

    # (b) no two curves meet a toric divisor at the same point
    polygons = [newton_polygon(f) for f in polys]
    if any(P.dim > 0 for P in polygons):
        fan = common_refinement(polygons)
        for rho in fan.rays:
            inits = {i: _initial_univariate(polys[i], rho) for i in nonmono}
            for i, j in combinations(nonmono, 2):
                if (i, j) in shares or inits[i] is None or inits[j] is None:
                    continue
                g = sympy.gcd(inits[i], inits[j])
                if g.degree() > 0:
                    cert.violations.append({
                        "kind": "boundary-collision",
                        "polys": [i + 1, j + 1],
                        "ray": list(rho),
                        "common_factor": str(g.as_expr()),
                    })

    # (c) no triple torus points
    for i, j, k in combinations(nonmono, 3):
        if {(i, j), (i, k), (j, k)} & shares:
            continue
        fibres = common_zero_fibres([polys[x].cleared().to_sympy() for x in (i, j, k)], torus=True)
        if fibres:
            cert.violations.append({
                "kind": "triple-torus-point",
                "polys": [i + 1, j + 1, k + 1],
                "points": _point_witness(fibres),
            })
    return cert


# ---------------------------------------------------------------------------
# graph


def _weight(value, delta, what):
    w = Fraction(value) / delta
    if w.denominator != 1:
        raise NonIntegralWeightError(f"non-integral weight {w} on edge {what}", edge=what, weight=str(w))
    return w


def build_generic_graph(inp: GenericInput, certificate: GenericityCertificate | None = None) -> TropicalGraph:
    if certificate is None:
        certificate = certify_generic(inp)
    if not certificate.accepted and not inp.force:
        raise GenericityError("input is not generic relative to its supports",
                              certificate=certificate.to_dict())
    polys = inp.polys
    n = len(polys)
    delta = int(inp.delta)
    polygons = [newton_polygon(f) for f in polys]
    fan = common_refinement(polygons)
    rays = list(fan.rays)
    m = len(rays)
    D = [tuple(trop_eval(f, r) for f in polys) for r in rays]

    verts = []
    for i in range(n):
        if polygons[i].dim != 0:
            verts.append(Vertex(f"e{i + 1}", f"e{i + 1}", tuple(int(k == i) for k in range(n)), "curve"))
    for k in range(m):
        if any(D[k]):
            verts.append(Vertex(f"D{k + 1}", f"D{k + 1}", D[k], "toric"))
    present = {v.id for v in verts}
    edges = []

    def add(u, v, value, index):
        if u not in present or v not in present:
            return
        w = _weight(value, delta, (u, v))
        if index == 0:
            if inp.keep_zero_edges:
                edges.append(Edge(u, v, Fraction(0), True))
            return
        edges.append(Edge(u, v, w, w == 0))

    # toric divisor pairs: consecutive rays spanning a strictly convex cone
    for k in range(m if m >= 2 else 0):
        j = (k + 1) % m
        c = det2(rays[k], rays[j])
        if c <= 0:
            continue
        idx = gcd_minors2(list(zip(D[k], D[j])))
        add(f"D{k + 1}", f"D{j + 1}", Fraction(idx, c), idx)

    # curve closures against toric divisors
    for i in range(n):
        for k in range(m):
            length = lattice_length_of_face(polygons[i], rays[k])
            if length == 0:
                continue
            idx = gcd_list(D[k][j] for j in range(n) if j != i)
            add(f"e{i + 1}", f"D{k + 1}", length * idx, idx)

    # pairs of curves inside the torus
    for i, j in combinations(range(n), 2):
        if polygons[i].dim == 0 or polygons[j].dim == 0:
            continue
        if minkowski_sum(polygons[i], polygons[j]).dim != 2:
            continue
        if inp.use_mixed_volume:
            if not certificate.accepted:
                raise GenericityError("the mixed-volume shortcut needs an accepted certificate")
            length = mixed_volume(polygons[i], polygons[j])
        else:
            length = torus_intersection_length(polys[i], polys[j])
        if length:
            add(f"e{i + 1}", f"e{j + 1}", length, 1)

    meta = {
        "pipeline": "generic",
        "delta": delta,
        "rays": [list(r) for r in rays],
        "certificate": certificate.status,
        "forced": bool(inp.force and not certificate.accepted),
    }
    if inp.verify_delta:
        est = estimate_degree(polys, random.Random(inp.seed))
        meta["delta_estimate"] = est
        if est != delta:
            meta["warnings"] = [f"preimage count {est} differs from the declared degree {delta}"]
    edges.sort(key=lambda e: (_vkey(e.u), _vkey(e.v)))
    return TropicalGraph(tuple(verts), tuple(edges), meta)


def _vkey(vid):
    return (vid[0], int(vid[1:])) if vid[1:].isdigit() else (vid, 0)


def estimate_degree(polys, rng: random.Random, attempts: int = 5) -> int:
    """Number of torus preimages of f(p) for a random rational torus point p.

    Counts distinct common zeros of f_i - f_i(p); on a non-generic target the
    count may drop, so the maximum over a few targets is returned.
    """
    best = 0
    for _ in range(attempts):
        s0 = Fraction(rng.choice([-1, 1]) * rng.randint(2, 9), rng.randint(1, 5))
        t0 = Fraction(rng.choice([-1, 1]) * rng.randint(2, 9), rng.randint(1, 5))
        shifted = []
        for f in polys:
            g = f - f(s0, t0)
            if not g.is_zero():
                shifted.append(g.cleared().to_sympy())
        try:
            fibres = common_zero_fibres(shifted, torus=True)
        except CommonFactorError:
            continue
        best = max(best, sum(fib.distinct_count() for fib in fibres))
    return best
