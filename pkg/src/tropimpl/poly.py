"""Exact bivariate Laurent and ternary homogeneous polynomials.

Coefficients are :class:`fractions.Fraction`. Elimination (resultants,
gcds, univariate factorisation over Q) is delegated to sympy's exact
``QQ`` arithmetic; everything geometric on top of it is done here.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping

import sympy
from sympy import Poly, QQ

from .errors import (
    ChartError,
    CommonFactorError,
    NegativeExponentError,
    PositiveDimensionalIntersection,
    ResultantError,
    ZeroPolynomialError,
)
from .lattice import as_rational, gcd_list

S, T, U = sympy.symbols("s t u")
X, Y = sympy.symbols("x y")


# ---------------------------------------------------------------------------
# Laurent polynomials


class LaurentPoly:
    """Bivariate Laurent polynomial with exact rational coefficients.

    Immutable. ``terms`` maps exponent pairs to nonzero Fractions; the zero
    polynomial has no terms.
    """

    __slots__ = ("_terms", "names", "_hash")

    def __init__(self, terms: Mapping | Iterable = (), names=("s", "t")):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exp, c in items:
            e = (int(exp[0]), int(exp[1]))
            acc[e] = acc.get(e, Fraction(0)) + as_rational(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c != 0}
        self.names = tuple(names)
        self._hash = None

    # construction helpers
    @classmethod
    def monomial(cls, exp, coeff=1, names=("s", "t")):
        return cls({tuple(exp): coeff}, names)

    @classmethod
    def constant(cls, c, names=("s", "t")):
        return cls({(0, 0): c}, names)

    @classmethod
    def from_expr(cls, expr, names=("s", "t")):
        """Build from a sympy expression or string in the two named variables."""
        a, b = sympy.symbols(names)
        if isinstance(expr, str):
            expr = sympy.sympify(expr, locals={names[0]: a, names[1]: b})
        expr = sympy.expand(expr)
        num, den = sympy.fraction(sympy.together(expr))
        pn = Poly(num, a, b, domain=QQ)
        pd = Poly(den, a, b, domain=QQ)
        if len(pd.terms()) != 1:
            raise ValueError(f"not a Laurent polynomial: {expr}")
        (dexp, dc), = pd.terms()
        return cls(
            {(e[0] - dexp[0], e[1] - dexp[1]): _frac(c) / _frac(dc) for e, c in pn.terms()},
            names,
        )

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def support(self) -> list:
        return list(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __add__(self, other):
        other = _coerce(other, self.names)
        return LaurentPoly(list(self._terms.items()) + list(other._terms.items()), self.names)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()}, self.names)

    def __sub__(self, other):
        return self + (-_coerce(other, self.names))

    def __rsub__(self, other):
        return _coerce(other, self.names) - self

    def __mul__(self, other):
        other = _coerce(other, self.names)
        out = []
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out.append(((e1[0] + e2[0], e1[1] + e2[1]), c1 * c2))
        return LaurentPoly(out, self.names)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = LaurentPoly.constant(1, self.names)
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, s, t):
        s, t = as_rational(s), as_rational(t)
        return sum((c * s ** e[0] * t ** e[1] for e, c in self._terms.items()), Fraction(0))

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        a, b = self.names
        parts = []
        for (i, j), c in self._terms.items():
            mono = "*".join(
                p for p in (_pw(a, i), _pw(b, j)) if p
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def min_exponents(self):
        if not self._terms:
            raise ZeroPolynomialError("zero polynomial has no support")
        return (min(e[0] for e in self._terms), min(e[1] for e in self._terms))

    def total_degree(self) -> int:
        return max(e[0] + e[1] for e in self._terms)

    def has_negative_exponents(self) -> bool:
        return any(e[0] < 0 or e[1] < 0 for e in self._terms)

    def shift(self, exp):
        """Multiply by the monomial with exponent ``exp``."""
        return LaurentPoly(
            {(e[0] + exp[0], e[1] + exp[1]): c for e, c in self._terms.items()}, self.names
        )

    def cleared(self):
        """The polynomial obtained by dividing out the largest monomial factor."""
        m = self.min_exponents()
        return self.shift((-m[0], -m[1]))

    def monomial_change(self, M):
        """Substitute exponents alpha -> M alpha (M a 2x2 integer matrix)."""
        return LaurentPoly(
            {
                (M[0][0] * e[0] + M[0][1] * e[1], M[1][0] * e[0] + M[1][1] * e[1]): c
                for e, c in self._terms.items()
            },
            self.names,
        )

    def to_sympy(self, gens=(S, T)) -> Poly:
        """Sympy Poly of the monomial-cleared polynomial (exponents made >= 0)."""
        if not self._terms:
            return Poly(0, *gens, domain=QQ)
        f = self.cleared() if self.has_negative_exponents() else self
        return Poly.from_dict({e: _qq(c) for e, c in f._terms.items()}, *gens, domain=QQ)

    def initial_form(self, w):
        """Sum of the terms minimising ``<alpha, w>``."""
        m = trop_eval(self, w)
        return LaurentPoly(
            {e: c for e, c in self._terms.items() if e[0] * w[0] + e[1] * w[1] == m}, self.names
        )


def _pw(name, k):
    if k == 0:
        return ""
    return name if k == 1 else f"{name}^{k}"


def _coerce(x, names):
    if isinstance(x, LaurentPoly):
        return x
    return LaurentPoly.constant(x, names)


def _frac(c) -> Fraction:
    c = sympy.Rational(c)
    return Fraction(int(c.p), int(c.q))


def _qq(c: Fraction):
    return QQ(c.numerator, c.denominator)


def from_sympy(P: Poly, names=("s", "t")) -> LaurentPoly:
    return LaurentPoly({e: _frac(c) for e, c in P.terms()}, names)


# ---------------------------------------------------------------------------
# Homogeneous polynomials and projective points


@dataclass(frozen=True)
class HomPoly:
    """Ternary homogeneous polynomial in (s, t, u) with rational coefficients."""

    terms: tuple  # ((a, b, c), Fraction) pairs, sorted
    degree: int

    def __post_init__(self):
        for e, _ in self.terms:
            if sum(e) != self.degree:
                raise ValueError(f"term {e} is not of degree {self.degree}")

    @classmethod
    def from_dict(cls, terms: Mapping, degree: int | None = None):
        clean = tuple(sorted((tuple(map(int, e)), as_rational(c)) for e, c in terms.items() if c != 0))
        if degree is None:
            if not clean:
                raise ZeroPolynomialError("cannot infer the degree of 0")
            degree = sum(clean[0][0])
        return cls(clean, degree)

    @classmethod
    def from_expr(cls, expr):
        if isinstance(expr, str):
            expr = sympy.sympify(expr, locals={"s": S, "t": T, "u": U})
        P = Poly(sympy.expand(expr), S, T, U, domain=QQ)
        if not P.is_homogeneous:
            raise ValueError(f"{expr} is not homogeneous")
        return cls.from_dict({e: _frac(c) for e, c in P.terms()})

    def to_sympy(self) -> Poly:
        return Poly.from_dict({e: _qq(c) for e, c in self.terms}, S, T, U, domain=QQ)

    def __call__(self, p) -> Fraction:
        coords = p.coords if isinstance(p, ProjPoint) else tuple(map(as_rational, p))
        return sum(
            (c * coords[0] ** e[0] * coords[1] ** e[1] * coords[2] ** e[2] for e, c in self.terms),
            Fraction(0),
        )

    def dehomogenize(self, index: int = 2) -> LaurentPoly:
        """Set coordinate ``index`` to 1; the other two become (x, y) in order."""
        keep = [i for i in range(3) if i != index]
        return LaurentPoly({(e[keep[0]], e[keep[1]]): c for e, c in self.terms})

    def __str__(self):
        return str(self.to_sympy().as_expr())


@dataclass(frozen=True)
class ProjPoint:
    """Rational point of P^2, normalised so the last nonzero coordinate is 1."""

    coords: tuple

    def __init__(self, *coords):
        if len(coords) == 1:
            coords = tuple(coords[0])
        c = [as_rational(x) for x in coords]
        if len(c) != 3 or all(x == 0 for x in c):
            raise ValueError(f"bad projective point {coords}")
        last = max(i for i in range(3) if c[i] != 0)
        object.__setattr__(self, "coords", tuple(x / c[last] for x in c))

    @property
    def chart(self) -> int:
        """Index of the coordinate equal to 1 (the dehomogenisation chart)."""
        return max(i for i in range(3) if self.coords[i] != 0)

    def affine(self):
        """Coordinates of the point in its chart (the two other coordinates)."""
        k = self.chart
        return tuple(self.coords[i] for i in range(3) if i != k)

    def sort_key(self):
        return self.coords

    def __str__(self):
        return "(" + ":".join(str(x) for x in self.coords) + ")"


# ---------------------------------------------------------------------------
# Basic operations


def newton_polygon(f: LaurentPoly):
    from .polygon import convex_hull

    if f.is_zero():
        raise ZeroPolynomialError("the zero polynomial has no Newton polygon")
    return convex_hull(f.support())


def trop_eval(f: LaurentPoly, w) -> int:
    """min over the support of <alpha, w>."""
    if f.is_zero():
        raise ZeroPolynomialError("tropical evaluation of the zero polynomial")
    return min(e[0] * w[0] + e[1] * w[1] for e in f.support())


def homogenize(f: LaurentPoly) -> HomPoly:
    """Homogenise with respect to the third variable u (degree = total degree)."""
    if f.is_zero():
        raise ZeroPolynomialError("cannot homogenise 0")
    if f.has_negative_exponents():
        raise NegativeExponentError(
            "negative exponents present; multiply by a monomial to clear denominators first",
            poly=str(f),
        )
    d = f.total_degree()
    return HomPoly.from_dict({(e[0], e[1], d - e[0] - e[1]): c for e, c in f.terms.items()}, d)


def resultant(f: LaurentPoly, g: LaurentPoly, var: str = "t") -> LaurentPoly:
    """Sylvester resultant eliminating ``var`` (one of the two variable names).

    The Sylvester matrix is written with coefficients in ascending powers,
    which equals the classical Res(g, f).  Inputs must be polynomials.
    """
    names = f.names
    if var not in names:
        raise ValueError(f"unknown variable {var!r}; expected one of {names}")
    for p in (f, g):
        if p.is_zero():
            raise ZeroPolynomialError("resultant of the zero polynomial")
        if p.has_negative_exponents():
            raise NegativeExponentError("resultant needs nonnegative exponents", poly=str(p))
    elim = names.index(var)
    F, G = f.to_sympy(), g.to_sympy()
    v = (S, T)[elim]
    if F.degree(v) == 0 and G.degree(v) == 0:
        raise ResultantError(f"both polynomials are constant in {var}")
    R = sympy.resultant(G.as_expr(), F.as_expr(), v)
    other = (S, T)[1 - elim]
    Rp = Poly(R, other, domain=QQ)
    out = {}
    for (k,), c in Rp.terms():
        out[(k, 0) if elim == 1 else (0, k)] = _frac(c)
    return LaurentPoly(out, names)


def _local_expansion(F, p: ProjPoint) -> Poly:
    """Local equation of F in the affine chart of p, translated to the origin."""
    if isinstance(F, HomPoly):
        f = F.dehomogenize(p.chart)
    else:
        f = F
    a, b = p.affine() if isinstance(F, HomPoly) else p
    P = f.to_sympy((X, Y))
    return translate(P, a, b)


def translate(P: Poly, a, b) -> Poly:
    """P(x + a, y + b)."""
    if a == 0 and b == 0:
        return P
    expr = P.as_expr().subs({X: X + sympy.Rational(a.numerator, a.denominator) if isinstance(a, Fraction) else X + a,
                             Y: Y + sympy.Rational(b.numerator, b.denominator) if isinstance(b, Fraction) else Y + b},
                            simultaneous=True)
    return Poly(sympy.expand(expr), X, Y, domain=QQ)


def order_at_origin(P: Poly) -> int:
    """Lowest total degree of a term (0 if P(0,0) != 0). P must be nonzero."""
    if P.is_zero:
        raise ZeroPolynomialError("order of the zero polynomial")
    return min(sum(e) for e, _ in P.terms())


def multiplicity_at(F: HomPoly, p: ProjPoint) -> int:
    """Order of vanishing of the curve F = 0 at p."""
    return order_at_origin(_local_expansion(F, p))


def _has_common_factor(P: Poly, Q: Poly) -> bool:
    g = sympy.gcd(P, Q)
    return g.total_degree() > 0


def _univariate_order(R: Poly, gen) -> int:
    """Order of vanishing at 0 of a univariate polynomial."""
    if R.is_zero:
        raise ResultantError("resultant vanished identically")
    return min(e[0] for e, _ in Poly(R.as_expr(), gen, domain=QQ).terms())


def local_intersection_affine(f: Poly, g: Poly, rng: random.Random | None = None,
                              max_tries: int = 40) -> int:
    """Intersection multiplicity at the origin of two plane curves in (x, y).

    A random shear x -> x + c*y makes the line x = 0 meet the common zero set
    only at the origin (and not at infinity); the multiplicity is then the
    order at x = 0 of Res_y. The computation is repeated with x and y swapped
    and both answers must agree.
    """
    if f.is_zero or g.is_zero:
        raise ZeroPolynomialError("intersection with the zero polynomial")
    if f.eval((0, 0)) != 0 or g.eval((0, 0)) != 0:
        return 0
    if _has_common_factor(f, g):
        raise CommonFactorError("curves share a component through the point",
                                f=str(f.as_expr()), g=str(g.as_expr()))
    rng = rng or random.Random(0)
    first = _intersection_by_projection(f, g, rng, max_tries)
    swap = {X: Y, Y: X}
    fs = Poly(f.as_expr().subs(swap, simultaneous=True), X, Y, domain=QQ)
    gs = Poly(g.as_expr().subs(swap, simultaneous=True), X, Y, domain=QQ)
    second = _intersection_by_projection(fs, gs, rng, max_tries)
    if first != second:
        raise ResultantError("projection directions disagree", values=(first, second))
    return first


def _intersection_by_projection(f, g, rng, max_tries):
    for attempt in range(max_tries):
        c = 0 if attempt == 0 else rng.randint(-5 - attempt, 5 + attempt)
        fe = Poly(sympy.expand(f.as_expr().subs(X, X + c * Y)), X, Y, domain=QQ)
        ge = Poly(sympy.expand(g.as_expr().subs(X, X + c * Y)), X, Y, domain=QQ)
        # the line x = 0 must meet both curves only at the origin
        f0 = Poly(fe.as_expr().subs(X, 0), Y, domain=QQ)
        g0 = Poly(ge.as_expr().subs(X, 0), Y, domain=QQ)
        if f0.is_zero or g0.is_zero:
            continue
        h = sympy.gcd(f0, g0)
        if h.degree() != _univariate_order(h, Y):
            continue
        # no common point at infinity of the line
        lf = Poly(fe.as_expr(), Y).LC()
        lg = Poly(ge.as_expr(), Y).LC()
        if sympy.sympify(lf).subs(X, 0) == 0 and sympy.sympify(lg).subs(X, 0) == 0:
            continue
        if fe.degree(Y) == 0 and ge.degree(Y) == 0:
            continue
        R = Poly(sympy.resultant(fe.as_expr(), ge.as_expr(), Y), X, domain=QQ)
        return _univariate_order(R, X)
    raise ResultantError("could not find a good projection direction")


def local_intersection(F: HomPoly, G: HomPoly, p: ProjPoint, rng: random.Random | None = None) -> int:
    """Intersection multiplicity I_p(F, G) of two projective plane curves."""
    return local_intersection_affine(_local_expansion(F, p), _local_expansion(G, p), rng)


# ---------------------------------------------------------------------------
# Arithmetic over a number field Q[s]/(p) and common zeros


def _nf_trim(coeffs, p):
    coeffs = [c.rem(p) for c in coeffs]
    while coeffs and coeffs[0].is_zero:
        coeffs.pop(0)
    return coeffs


def _nf_monic(coeffs, p):
    inv = coeffs[0].invert(p)
    return [(c * inv).rem(p) for c in coeffs]


def _nf_rem(a, b, p):
    a = list(a)
    inv = b[0].invert(p)
    while len(a) >= len(b) and a:
        q = (a[0] * inv).rem(p)
        for i in range(len(b)):
            a[i] = (a[i] - q * b[i]).rem(p)
        a = _nf_trim(a, p)
    return a


def nf_gcd(a, b, p):
    """gcd of two polynomials in t over K = Q[s]/(p); coefficients are
    univariate Polys in s listed from the leading term. Result is monic."""
    a, b = _nf_trim(a, p), _nf_trim(b, p)
    while b:
        a, b = b, _nf_rem(a, b, p)
    return _nf_monic(a, p) if a else []


def _nf_derivative(a, p):
    n = len(a) - 1
    return _nf_trim([c * (n - i) for i, c in enumerate(a[:-1])], p)


def _t_coefficients(P: Poly, gens=(S, T)):
    """Coefficients of P in the second generator, leading first, as Polys in the first."""
    s, t = gens
    deg = P.degree(t)
    out = [Poly(0, s, domain=QQ) for _ in range(deg + 1)]
    for (i, j), c in P.terms():
        out[deg - j] = out[deg - j] + Poly(c * s ** i, s, domain=QQ)
    return out


@dataclass
class Fibre:
    """Common zeros of several curves lying over the roots of ``s_factor``.

    ``t_gcd`` is the gcd over Q[s]/(s_factor) of the curves, monic in t.
    """

    s_factor: Poly
    t_gcd: list

    @property
    def is_rational_s(self) -> bool:
        return self.s_factor.degree() == 1

    def s_root(self) -> Fraction:
        a, b = self.s_factor.all_coeffs()
        return -_frac(b) / _frac(a)

    def t_poly(self) -> Poly:
        """For rational s: the gcd as a univariate Poly in t over Q."""
        s0 = self.s_root()
        coeffs = [_frac(c.eval(_qq(s0))) if not c.is_zero else Fraction(0) for c in self.t_gcd]
        return Poly([_qq(c) for c in coeffs], T, domain=QQ)

    def strip_t_zero(self, p):
        coeffs = list(self.t_gcd)
        while len(coeffs) > 1 and coeffs[-1].rem(p).is_zero:
            coeffs.pop()
        return Fibre(self.s_factor, coeffs)

    def distinct_count(self) -> int:
        """Number of distinct points in the fibre over the algebraic closure."""
        h = self.t_gcd
        if len(h) <= 1:
            return 0
        g = nf_gcd(h, _nf_derivative(h, self.s_factor), self.s_factor)
        return (len(h) - len(g)) * self.s_factor.degree()

    def describe(self) -> dict:
        return {
            "s_factor": str(self.s_factor.as_expr()),
            "t_gcd": [str(c.as_expr()) for c in self.t_gcd],
        }


def common_zero_fibres(polys, torus: bool = False) -> list:
    """All common zeros of the given plane curves, grouped by s-coordinate.

    ``polys`` are sympy Polys in (s, t) with pairwise no common factor (at
    least two of them). With ``torus=True`` only zeros with s != 0 and t != 0
    are kept.
    """
    polys = [P for P in polys]
    if len(polys) < 2:
        raise ValueError("need at least two curves")
    in_t = [P for P in polys if P.degree(T) > 0]
    pure_s = [Poly(P.as_expr(), S, domain=QQ) for P in polys if P.degree(T) == 0]
    cand = None
    if pure_s:
        for P in pure_s:
            cand = P if cand is None else sympy.gcd(cand, P)
    else:
        base = in_t[0]
        for P in in_t[1:]:
            R = Poly(sympy.resultant(base.as_expr(), P.as_expr(), T), S, domain=QQ)
            if R.is_zero:
                raise CommonFactorError("curves share a component")
            cand = R if cand is None else sympy.gcd(cand, R)
    if cand is None or cand.degree() <= 0:
        return []
    fibres = []
    for p, _ in sympy.factor_list(cand.as_expr(), S)[1]:
        p = Poly(p, S, domain=QQ).monic()
        if torus and p.degree() == 1 and p.eval(0) == 0:
            continue
        h = None
        for P in polys:
            coeffs = _nf_trim(_t_coefficients(P), p)
            if not coeffs:
                continue  # P vanishes on the whole fibre
            h = coeffs if h is None else nf_gcd(h, coeffs, p)
        if h is None:
            raise PositiveDimensionalIntersection("all curves contain a vertical line")
        h = _nf_monic(h, p)
        fib = Fibre(p, h)
        if torus:
            fib = fib.strip_t_zero(p)
        if len(fib.t_gcd) > 1:
            fibres.append(fib)
    return fibres


def rational_points_of_fibres(fibres):
    """Split fibres into rational points and irrational leftovers."""
    points, irrational = [], []
    for fib in fibres:
        if not fib.is_rational_s:
            irrational.append(fib)
            continue
        s0 = fib.s_root()
        for q, _ in sympy.factor_list(fib.t_poly().as_expr(), T)[1]:
            q = Poly(q, T, domain=QQ)
            if q.degree() == 1:
                a, b = q.all_coeffs()
                points.append((s0, -_frac(b) / _frac(a)))
            else:
                irrational.append(Fibre(fib.s_factor, [Poly(c, S, domain=QQ) for c in q.all_coeffs()]))
    return sorted(set(points)), irrational


# ---------------------------------------------------------------------------
# Intersections in the torus


def squarefree_without_monomials(f: LaurentPoly) -> bool:
    """True iff the cleared polynomial has trivial gcd with both partials."""
    P = f.cleared().to_sympy()
    g = sympy.gcd(sympy.gcd(P, P.diff(S)), P.diff(T))
    return g.total_degree() == 0


def torus_common_factor(f: LaurentPoly, g: LaurentPoly) -> bool:
    """Whether f and g share a non-monomial factor."""
    return _has_common_factor(f.cleared().to_sympy(), g.cleared().to_sympy())


def _edge_directions(f: LaurentPoly):
    P = newton_polygon(f)
    v = P.vertices
    if len(v) == 1:
        return []
    if len(v) == 2:
        return [(v[1][0] - v[0][0], v[1][1] - v[0][1])]
    return [(v[(i + 1) % len(v)][0] - v[i][0], v[(i + 1) % len(v)][1] - v[i][1]) for i in range(len(v))]


def _nonzero_root_count(f: LaurentPoly, g: LaurentPoly, M, elim) -> int:
    F = f.monomial_change(M).cleared().to_sympy()
    G = g.monomial_change(M).cleared().to_sympy()
    v, other = ((T, S) if elim == 1 else (S, T))
    if F.degree(v) == 0 and G.degree(v) == 0:
        # both are univariate in the other variable: coprime, so no common zeros
        return 0
    R = Poly(sympy.resultant(F.as_expr(), G.as_expr(), v), other, domain=QQ)
    if R.is_zero:
        raise CommonFactorError("resultant vanished identically")
    return R.degree() - _univariate_order(R, other)


def torus_intersection_length(f: LaurentPoly, g: LaurentPoly) -> int:
    """Length of the scheme f = g = 0 inside the 2-torus.

    A unimodular monomial change of coordinates is chosen so that no edge of
    either Newton polygon is parallel to the projection's fibres. Then every
    nonzero root of the resultant comes from a torus point, and the length
    is deg R minus its order at 0. Both elimination directions are computed
    and must agree.
    """
    for p in (f, g):
        if p.is_zero():
            raise ZeroPolynomialError("intersection with the zero polynomial")
    if f.is_monomial() or g.is_monomial():
        return 0
    if torus_common_factor(f, g):
        raise CommonFactorError("polynomials share a factor: the torus intersection is a curve",
                                f=str(f), g=str(g))
    dirs = _edge_directions(f) + _edge_directions(g)
    results = []
    for elim in (1, 0):
        for k in sorted(range(-12, 13), key=lambda k: (abs(k), -k)):
            if elim == 1:
                M = ((1, 0), (k, 1))
                ok = all(k * d[0] + d[1] != 0 for d in dirs)
            else:
                M = ((1, k), (0, 1))
                ok = all(d[0] + k * d[1] != 0 for d in dirs)
            if ok:
                results.append(_nonzero_root_count(f, g, M, elim))
                break
        else:
            raise ResultantError("no admissible monomial change found")
    if results[0] != results[1]:
        raise ResultantError("elimination directions disagree", values=results)
    return results[0]
