"""Resolution of a plane-curve arrangement by point blow-ups.

The curves F_i = (f_i^h = 0) and the line at infinity F_inf = (u = 0) form
the boundary of the compactification of the complement in P^2. Every point
lying on three or more boundary divisors is blown up, and so are the points
of the new exceptional curves that still lie on three or more divisors.

Each center is handled in local affine coordinates (x, y) centred at the
point, with the local equation of every divisor through it. Blowing up uses
the two standard charts y = x*y' (E = {x = 0}) and x = x'*y (E = {y = 0}).

The intersection table is kept up to date with the projection formula:
starting from Bezout numbers in P^2, blowing up a point q subtracts
m_q(A)*m_q(B) from every pair through q, and the new exceptional curve
meets the strict transform of A with multiplicity m_q(A).
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import sympy
from sympy import Poly, QQ

from .errors import (
    ChartError,
    CommonFactorError,
    FactorizationError,
    IrrationalExcessPointSuspected,
    NegativeExponentError,
    NonIntegralWeightError,
    StepLimitExceeded,
)
from .generic import GenericInput
from .graph import Edge, TropicalGraph, Vertex
from .lattice import gcd_minors2
from .poly import (
    HomPoly,
    LaurentPoly,
    ProjPoint,
    S,
    T,
    U,
    X,
    Y,
    _frac,
    common_zero_fibres,
    homogenize,
    local_intersection,
    order_at_origin,
    translate,
)

INF = "Finf"


@dataclass
class ProjArrangement:
    curves: list  # HomPoly
    names: list = None

    def __post_init__(self):
        if self.names is None:
            self.names = [f"F{i + 1}" for i in range(len(self.curves))]
        for a, b in combinations(range(len(self.curves)), 2):
            if sympy.gcd(self.curves[a].to_sympy(), self.curves[b].to_sympy()).total_degree() > 0:
                raise CommonFactorError("curves share a common component",
                                        curves=(self.names[a], self.names[b]))

    @property
    def degrees(self):
        return [c.degree for c in self.curves]

    @classmethod
    def from_polys(cls, polys):
        for f in polys:
            if f.has_negative_exponents():
                raise NegativeExponentError(
                    "the blow-up pipeline needs polynomial inputs; multiply by a monomial first",
                    poly=str(f),
                )
        return cls([homogenize(f) for f in polys])

    def divisor_ids(self):
        return list(self.names) + [INF]

    def hom(self, did) -> HomPoly:
        if did == INF:
            return HomPoly.from_dict({(0, 0, 1): 1})
        return self.curves[self.names.index(did)]


@dataclass
class BlowupStep:
    exceptional: str
    base_point: ProjPoint
    lineage: list
    mult_per_divisor: dict
    forced: bool = False

    def to_dict(self):
        return {
            "exceptional": self.exceptional,
            "base_point": None if self.base_point is None else str(self.base_point),
            "lineage": list(self.lineage),
            "multiplicities": dict(self.mult_per_divisor),
            "forced": self.forced,
        }


@dataclass
class _Local:
    """A point of the current surface with the divisors through it."""

    base: ProjPoint
    lineage: list
    divisors: list  # (id, Poly in X, Y) with the point at the origin
    forced: bool = False


@dataclass
class ResolutionDiagram:
    arrangement: ProjArrangement
    steps: list = field(default_factory=list)
    coefficients: dict = field(default_factory=dict)  # divisor -> {original -> coefficient}
    table: dict = field(default_factory=dict)  # frozenset pair -> intersection number

    @property
    def exceptional(self):
        return [s.exceptional for s in self.steps]

    @property
    def divisors(self):
        return self.arrangement.divisor_ids() + self.exceptional

    def intersection(self, a, b) -> int:
        return self.table.get(frozenset((a, b)), 0)

    def pullback(self, i: int) -> dict:
        """Coefficients of g^*(chi_i) = pi^*(F_i) - deg f_i * pi^*(F_inf)."""
        name = self.arrangement.names[i]
        d = self.arrangement.degrees[i]
        return {D: self.coefficients[D].get(name, 0) - d * self.coefficients[D].get(INF, 0)
                for D in self.divisors}

    def valuation(self, D) -> tuple:
        arr = self.arrangement
        c = self.coefficients[D]
        return tuple(c.get(name, 0) - d * c.get(INF, 0) for name, d in zip(arr.names, arr.degrees))

    def nonzero_table(self) -> dict:
        return {tuple(sorted(k, key=self._order)): v for k, v in self.table.items() if v}

    def _order(self, d):
        return self.divisors.index(d)

    def to_dict(self):
        return {
            "steps": [s.to_dict() for s in self.steps],
            "valuations": {D: list(self.valuation(D)) for D in self.divisors},
            "intersections": [
                {"pair": list(k), "number": v}
                for k, v in sorted(self.nonzero_table().items(),
                                   key=lambda kv: tuple(self._order(d) for d in kv[0]))
            ],
        }


# ---------------------------------------------------------------------------
# excess points of the arrangement in P^2


def _linear_roots_binary(form: Poly):
    """Points (a:b:0) from the linear factors of a binary form in (s, t);
    returns (points, nonlinear factors)."""
    points, rest = [], []
    for fac, _ in sympy.factor_list(form.as_expr(), S, T)[1]:
        P = Poly(fac, S, T, domain=QQ)
        if P.total_degree() == 1:
            a = _frac(P.coeff_monomial(S))
            b = _frac(P.coeff_monomial(T))
            points.append(ProjPoint(b, -a, 0))
        elif P.total_degree() > 1:
            rest.append(fac)
    return points, rest


def divisors_through(arr: ProjArrangement, p: ProjPoint) -> list:
    return [d for d in arr.divisor_ids() if arr.hom(d)(p) == 0]


def find_excess_points(arr: ProjArrangement) -> list:
    """Rational points of P^2 lying on at least three boundary divisors,
    sorted lexicographically by normalised coordinates."""
    n = len(arr.curves)
    candidates = set()
    # affine part: common zeros of three curves
    affine = [c.dehomogenize(2).to_sympy() for c in arr.curves]
    for trip in combinations(range(n), 3):
        polys = [affine[i] for i in trip]
        if any(P.total_degree() == 0 for P in polys):
            continue
        for fib in common_zero_fibres(polys):
            if not fib.is_rational_s:
                raise IrrationalExcessPointSuspected(
                    "three curves share an irrational affine point",
                    curves=[arr.names[i] for i in trip], s_factor=str(fib.s_factor.as_expr()),
                )
            s0 = fib.s_root()
            for fac, _ in sympy.factor_list(fib.t_poly().as_expr(), T)[1]:
                q = Poly(fac, T, domain=QQ)
                if q.degree() != 1:
                    raise IrrationalExcessPointSuspected(
                        "three curves share an irrational affine point",
                        curves=[arr.names[i] for i in trip], s=str(s0), t_factor=str(fac),
                    )
                a, b = q.all_coeffs()
                candidates.add(ProjPoint(s0, -_frac(b) / _frac(a), 1))
    # points at infinity on two curves
    tops = []
    for c in arr.curves:
        top = {(e[0], e[1]): v for e, v in c.terms if e[2] == 0}
        tops.append(Poly.from_dict({e: QQ(v.numerator, v.denominator) for e, v in top.items()},
                                   S, T, domain=QQ))
    for i, j in combinations(range(n), 2):
        g = sympy.gcd(tops[i], tops[j])
        if g.total_degree() == 0:
            continue
        points, rest = _linear_roots_binary(g)
        if rest:
            raise IrrationalExcessPointSuspected(
                "two curves meet the line at infinity at irrational common points",
                curves=[arr.names[i], arr.names[j]], factor=str(rest[0]),
            )
        candidates.update(points)
    excess = [p for p in candidates if len(divisors_through(arr, p)) >= 3]
    return sorted(excess, key=ProjPoint.sort_key)


def _top_level_local(arr: ProjArrangement, p: ProjPoint, forced=False) -> _Local:
    k = p.chart
    a, b = p.affine()
    divs = []
    for did in arr.divisor_ids():
        H = arr.hom(did)
        if H(p) != 0:
            continue
        P = H.dehomogenize(k).to_sympy((X, Y))
        divs.append((did, translate(P, a, b)))
    return _Local(p, [str(p)], divs, forced)


# ---------------------------------------------------------------------------
# local blow-up


def _chart_a(P: Poly, m: int) -> Poly:
    Q = Poly(sympy.expand(P.as_expr().subs(Y, X * Y)), X, Y, domain=QQ)
    return Q.exquo(Poly(X ** m, X, Y, domain=QQ))


def _chart_b(P: Poly, m: int) -> Poly:
    Q = Poly(sympy.expand(P.as_expr().subs(X, X * Y)), X, Y, domain=QQ)
    return Q.exquo(Poly(Y ** m, X, Y, domain=QQ))


def _blow_up_local(loc: _Local, eid: str, min_divisors: int = 3):
    """Blow up the origin of ``loc``. Returns the multiplicities of the
    divisors through it and the points of the exceptional curve that lie on
    at least ``min_divisors`` divisors afterwards."""
    mults = {}
    chart_a, chart_b = [], []
    for did, P in loc.divisors:
        if P.is_zero:
            raise ChartError("zero local equation", divisor=did)
        m = order_at_origin(P)
        if m == 0:
            raise ChartError("divisor does not pass through the center", divisor=did)
        mults[did] = m
        chart_a.append((did, _chart_a(P, m)))
        chart_b.append((did, _chart_b(P, m)))
    children = []
    # chart A: points (0, c) of E = {x = 0}
    roots: dict = {}
    irrational: dict = {}
    for did, Q in chart_a:
        q = Poly(Q.as_expr().subs(X, 0), Y, domain=QQ)
        if q.is_zero:
            raise ChartError("strict transform contains the exceptional curve", divisor=did)
        if q.degree() <= 0:
            continue
        for fac, _ in sympy.factor_list(q.as_expr(), Y)[1]:
            fq = Poly(fac, Y, domain=QQ)
            if fq.degree() == 1:
                a, b = fq.all_coeffs()
                roots.setdefault(-_frac(b) / _frac(a), []).append(did)
            else:
                irrational.setdefault(str(fq.monic().as_expr()), []).append(did)
    for fac, members in irrational.items():
        if len(members) + 1 >= min_divisors and len(members) >= 2:
            raise IrrationalExcessPointSuspected(
                "strict transforms meet the exceptional curve at a common irrational point",
                divisors=members, factor=fac, center=loc.lineage,
            )
    for c in sorted(roots):
        members = roots[c]
        if len(members) + 1 < min_divisors:
            continue
        divs = [(eid, Poly(X, X, Y, domain=QQ))]
        for did, Q in chart_a:
            if did in members:
                divs.append((did, translate(Q, Fraction(0), c)))
        children.append(_Local(loc.base, loc.lineage + [f"{eid}:y={c}"], divs))
    # chart B: the remaining point x' = 0 of E = {y = 0}
    members = [did for did, Q in chart_b if Q.eval((0, 0)) == 0]
    if len(members) + 1 >= min_divisors:
        divs = [(eid, Poly(Y, X, Y, domain=QQ))] + [(did, Q) for did, Q in chart_b if did in members]
        children.append(_Local(loc.base, loc.lineage + [f"{eid}:x=0"], divs))
    return mults, children


def _initial_diagram(arr: ProjArrangement) -> ResolutionDiagram:
    diag = ResolutionDiagram(arr)
    for did in arr.divisor_ids():
        diag.coefficients[did] = {did: 1}
    deg = dict(zip(arr.names, arr.degrees))
    deg[INF] = 1
    for a, b in combinations(arr.divisor_ids(), 2):
        diag.table[frozenset((a, b))] = deg[a] * deg[b]
    return diag


def _apply_step(diag: ResolutionDiagram, loc: _Local, eid: str, mults: dict):
    coef: dict = {}
    for did, m in mults.items():
        for orig, c in diag.coefficients[did].items():
            coef[orig] = coef.get(orig, 0) + c * m
    diag.coefficients[eid] = coef
    for a, b in combinations(mults, 2):
        key = frozenset((a, b))
        diag.table[key] = diag.table.get(key, 0) - mults[a] * mults[b]
        if diag.table[key] < 0:
            raise ChartError("negative intersection number; the local data is inconsistent",
                             pair=(a, b))
    for did, m in mults.items():
        diag.table[frozenset((eid, did))] = m
    diag.steps.append(BlowupStep(eid, loc.base, list(loc.lineage), dict(mults), loc.forced))


def blow_up_at(diag: ResolutionDiagram, p: ProjPoint, forced: bool = True):
    """Blow up a point of P^2 that has not been blown up yet.

    Returns the new step and the points on the exceptional curve that now
    lie on three or more divisors.
    """
    if any(s.base_point == p and len(s.lineage) == 1 for s in diag.steps):
        raise ChartError("point already blown up", point=str(p))
    loc = _top_level_local(diag.arrangement, p, forced)
    eid = f"E{len(diag.steps) + 1}"
    mults, children = _blow_up_local(loc, eid)
    _apply_step(diag, loc, eid, mults)
    return diag.steps[-1], children


def blow_up_double_point(diag: ResolutionDiagram, a: str, b: str) -> ResolutionDiagram:
    """Blow up the point where two boundary curves meet, on a copy of diag.

    Only pairs with intersection number one are accepted: they meet in a
    single transverse point, which is then necessarily rational, and the
    update of the table is exact without any local computation.
    """
    if diag.intersection(a, b) != 1:
        raise ChartError("expected two curves meeting once, transversally",
                         pair=(a, b), number=diag.intersection(a, b))
    new = ResolutionDiagram(diag.arrangement, list(diag.steps),
                            {k: dict(v) for k, v in diag.coefficients.items()}, dict(diag.table))
    loc = _Local(None, [f"{a}/{b}"], [], forced=True)
    _apply_step(new, loc, f"E{len(new.steps) + 1}", {a: 1, b: 1})
    return new


def resolve_arrangement(arr: ProjArrangement, max_steps: int = 64, extra_centers=()) -> ResolutionDiagram:
    """Blow up until no point lies on three or more boundary divisors.

    Excess points of P^2 are handled in lexicographic order; the tree above
    each of them is explored generation by generation, so exceptional
    curves are numbered E1, E2, ... in that order. ``extra_centers`` are
    additional rational points of P^2 blown up on request (flagged as
    forced), for instance double points of the boundary.
    """
    diag = _initial_diagram(arr)
    excess = find_excess_points(arr)
    extra = [ProjPoint(p) if not isinstance(p, ProjPoint) else p for p in extra_centers]
    centers = [(p, False) for p in excess] + [(p, True) for p in extra if p not in excess]
    centers.sort(key=lambda c: c[0].sort_key())
    for p, forced in centers:
        queue = deque([_top_level_local(arr, p, forced)])
        while queue:
            if len(diag.steps) >= max_steps:
                raise StepLimitExceeded("blow-up step limit exceeded", limit=max_steps)
            loc = queue.popleft()
            eid = f"E{len(diag.steps) + 1}"
            mults, children = _blow_up_local(loc, eid)
            _apply_step(diag, loc, eid, mults)
            queue.extend(children)
    return diag


# ---------------------------------------------------------------------------
# graph


def build_nongeneric_graph(diag: ResolutionDiagram, delta: int = 1) -> TropicalGraph:
    arr = diag.arrangement
    n = len(arr.curves)
    verts = []
    for i, name in enumerate(arr.names):
        verts.append(Vertex(f"e{i + 1}", name, diag.valuation(name), "curve"))
    verts.append(Vertex(INF, INF, diag.valuation(INF), "infinity"))
    for eid in diag.exceptional:
        verts.append(Vertex(eid, eid, diag.valuation(eid), "exceptional"))
    ids = {name: f"e{i + 1}" for i, name in enumerate(arr.names)}
    edges = []
    for a, b in combinations(diag.divisors, 2):
        num = diag.intersection(a, b)
        if num <= 0:
            continue
        va, vb = diag.valuation(a), diag.valuation(b)
        idx = gcd_minors2(list(zip(va, vb)))
        w = Fraction(num * idx, delta)
        if w.denominator != 1:
            raise NonIntegralWeightError(f"non-integral weight {w} on edge ({a}, {b})",
                                         edge=(a, b), weight=str(w))
        if w > 0:
            edges.append(Edge(ids.get(a, a), ids.get(b, b), w))
    meta = {
        "pipeline": "nongeneric",
        "delta": delta,
        "blowups": len(diag.steps),
        "forced_blowups": sum(1 for s in diag.steps if s.forced),
    }
    return TropicalGraph(tuple(verts), tuple(edges), meta)


# ---------------------------------------------------------------------------
# Bezout cross-check


def intersection_cycle(F: HomPoly, G: HomPoly, rng: random.Random | None = None) -> dict:
    """All intersection points of two coprime projective curves.

    A random projective change of coordinates moves every intersection off
    the line at infinity and separates x-coordinates; the factors of the
    resultant then give the points. Rational points are mapped back and
    their multiplicity is recomputed independently with local_intersection.
    Returns {"rational": {point: multiplicity}, "irrational": total, "total": sum}.
    """
    rng = rng or random.Random(7)
    Fs, Gs = F.to_sympy(), G.to_sympy()
    if sympy.gcd(Fs, Gs).total_degree() > 0:
        raise CommonFactorError("curves share a component")
    for _ in range(30):
        M = [[rng.randint(-4, 4) for _ in range(3)] for _ in range(3)]
        Mm = sympy.Matrix(M)
        if Mm.det() == 0:
            continue
        sub = {v: sum(M[r][c] * w for c, w in enumerate((S, T, U))) for r, v in enumerate((S, T, U))}
        F2 = Poly(sympy.expand(Fs.as_expr().subs(sub, simultaneous=True)), S, T, U, domain=QQ)
        G2 = Poly(sympy.expand(Gs.as_expr().subs(sub, simultaneous=True)), S, T, U, domain=QQ)
        # no common point on u = 0 and projection from (0:1:0) separating points
        f0 = Poly(F2.as_expr().subs(U, 0), S, T, domain=QQ)
        g0 = Poly(G2.as_expr().subs(U, 0), S, T, domain=QQ)
        if sympy.gcd(f0, g0).total_degree() > 0:
            continue
        if F2.as_expr().subs({S: 0, U: 0}) == 0 and G2.as_expr().subs({S: 0, U: 0}) == 0:
            continue
        fa = F2.as_expr().subs(U, 1)
        ga = G2.as_expr().subs(U, 1)
        R = Poly(sympy.resultant(fa, ga, T), S, domain=QQ)
        if R.is_zero or R.degree() != F.degree * G.degree:
            continue
        rational, irr, ok = {}, 0, True
        for fac, k in sympy.factor_list(R.as_expr(), S)[1]:
            p = Poly(fac, S, domain=QQ)
            if p.degree() == 1:
                a, b = p.all_coeffs()
                s0 = -sympy.Rational(b) / sympy.Rational(a)
                ft = Poly(sympy.sqf_part(sympy.gcd(Poly(fa.subs(S, s0), T), Poly(ga.subs(S, s0), T))).as_expr(), T, domain=QQ)
                if ft.degree() != 1:
                    ok = False
                    break
                c1, c0 = ft.all_coeffs()
                t0 = -sympy.Rational(c0) / sympy.Rational(c1)
                orig = Mm * sympy.Matrix([s0, t0, 1])
                pt = ProjPoint(*[_frac(x) for x in orig])
                rational[pt] = k
            else:
                irr += k * p.degree()
        if not ok:
            continue
        for pt, k in rational.items():
            li = local_intersection(F, G, pt, rng)
            if li != k:
                raise ChartError("local intersection disagrees with the resultant multiplicity",
                                 point=str(pt), local=li, resultant=k)
        total = sum(rational.values()) + irr
        return {"rational": rational, "irrational": irr, "total": total}
    raise ChartError("no separating coordinate change found")


# ---------------------------------------------------------------------------
# reducible inputs


def split_reducible(inp: GenericInput, index: int, factors):
    """Replace f_index by the declared factors; returns the extended input and
    the matrix of the monomial map that multiplies the factor coordinates back."""
    factors = list(factors)
    if len(factors) < 2:
        raise FactorizationError("need at least two factors")
    prod = LaurentPoly.constant(1)
    for g in factors:
        if g.is_monomial():
            raise FactorizationError("unit (monomial) factor declared", factor=str(g))
        prod = prod * g
    if prod != inp.polys[index]:
        raise FactorizationError("declared factors do not multiply back to the polynomial",
                                 index=index + 1, product=str(prod), expected=str(inp.polys[index]))
    n = len(inp.polys)
    k = len(factors)
    new_polys = inp.polys[:index] + factors + inp.polys[index + 1:]
    beta = []
    for i in range(n):
        row = [0] * (n + k - 1)
        if i < index:
            row[i] = 1
        elif i == index:
            for j in range(k):
                row[index + j] = 1
        else:
            row[i + k - 1] = 1
        beta.append(row)
    ext = GenericInput(new_polys, inp.delta, inp.keep_zero_edges, inp.use_mixed_volume,
                       inp.force, inp.verify_delta, inp.seed)
    return ext, beta
