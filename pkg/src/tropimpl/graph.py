"""Weighted graphs whose cone is a tropical surface."""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction

from .errors import ParallelEndpointsError
from .fan import Cone, WeightedFan, refine_2d
from .lattice import is_zero, rank

KINDS = ("curve", "toric", "infinity", "exceptional")


@dataclass(frozen=True)
class Vertex:
    id: str
    label: str
    point: tuple
    kind: str

    def to_dict(self):
        return {"id": self.id, "label": self.label, "point": list(self.point), "kind": self.kind}


@dataclass(frozen=True)
class Edge:
    u: str
    v: str
    weight: Fraction
    zero: bool = False

    def to_dict(self):
        w = self.weight
        return {
            "u": self.u,
            "v": self.v,
            "weight": str(w.numerator) if w.denominator == 1 else f"{w.numerator}/{w.denominator}",
            "zero": self.zero,
        }


@dataclass(frozen=True)
class TropicalGraph:
    vertices: tuple
    edges: tuple
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def ambient_dim(self) -> int:
        return len(self.vertices[0].point) if self.vertices else 0

    def vertex(self, vid) -> Vertex:
        for v in self.vertices:
            if v.id == vid:
                return v
        raise KeyError(vid)

    def by_label(self, label) -> Vertex:
        for v in self.vertices:
            if v.label == label or label in v.label.split("="):
                return v
        raise KeyError(label)

    def positive_edges(self):
        return [e for e in self.edges if e.weight > 0]

    def edge_between(self, a, b):
        for e in self.edges:
            if {e.u, e.v} == {a, b}:
                return e
        return None

    def to_dict(self):
        return {
            "vertices": [v.to_dict() for v in self.vertices],
            "edges": [e.to_dict() for e in self.edges],
            "meta": self.meta,
        }

    @classmethod
    def from_dict(cls, d):
        verts = tuple(
            Vertex(str(v["id"]), str(v["label"]), tuple(int(x) for x in v["point"]), str(v["kind"]))
            for v in d["vertices"]
        )
        edges = tuple(
            Edge(str(e["u"]), str(e["v"]), Fraction(str(e["weight"])), bool(e.get("zero", False)))
            for e in d["edges"]
        )
        return cls(verts, edges, dict(d.get("meta", {})))


def _canonical_edges(edges):
    return tuple(sorted(edges, key=lambda e: (e.u, e.v)))


def merge_realized(g: TropicalGraph) -> TropicalGraph:
    """Identify vertices with equal points, drop the origin and weight-zero edges."""
    groups: dict = {}
    order = []
    for v in g.vertices:
        if is_zero(v.point):
            continue
        if v.point not in groups:
            groups[v.point] = []
            order.append(v.point)
        groups[v.point].append(v)
    new_id = {}
    verts = []
    for p in order:
        members = groups[p]
        vid = "=".join(m.id for m in members)
        label = "=".join(m.label for m in members)
        for m in members:
            new_id[m.id] = vid
        verts.append(Vertex(vid, label, p, members[0].kind))
    weights: dict = {}
    for e in g.edges:
        if e.weight == 0 or e.u not in new_id or e.v not in new_id:
            continue
        a, b = new_id[e.u], new_id[e.v]
        if a == b:
            continue
        key = tuple(sorted((a, b)))
        weights[key] = weights.get(key, Fraction(0)) + e.weight
    edges = [Edge(a, b, w) for (a, b), w in weights.items()]
    return TropicalGraph(tuple(verts), _canonical_edges(edges), dict(g.meta))


def _in_open_cone(p, a, b) -> bool:
    """Whether p = x*a + y*b with x, y > 0 (a, b independent)."""
    if rank([a, b]) < 2 or rank([a, b, p]) != 2:
        return False
    n = len(p)
    for i in range(n):
        for j in range(i + 1, n):
            m = a[i] * b[j] - a[j] * b[i]
            if m:
                x = Fraction(p[i] * b[j] - p[j] * b[i], m)
                y = Fraction(a[i] * p[j] - a[j] * p[i], m)
                return x > 0 and y > 0
    return False


def suppress_bivalent(g: TropicalGraph) -> TropicalGraph:
    """Remove degree-two vertices that sit inside the cone of their neighbours
    with equal incident weights, fusing the two edges."""
    g = merge_realized(g)
    changed = True
    verts = list(g.vertices)
    edges = list(g.edges)
    while changed:
        changed = False
        for v in verts:
            inc = [e for e in edges if v.id in (e.u, e.v)]
            if len(inc) != 2 or inc[0].weight != inc[1].weight:
                continue
            na = inc[0].v if inc[0].u == v.id else inc[0].u
            nb = inc[1].v if inc[1].u == v.id else inc[1].u
            if na == nb:
                continue
            pa = next(x.point for x in verts if x.id == na)
            pb = next(x.point for x in verts if x.id == nb)
            if not _in_open_cone(v.point, pa, pb):
                continue
            w = inc[0].weight
            edges = [e for e in edges if e not in inc]
            existing = next((e for e in edges if {e.u, e.v} == {na, nb}), None)
            if existing is not None:
                edges.remove(existing)
                w += existing.weight
            a, b = sorted((na, nb))
            edges.append(Edge(a, b, w))
            verts.remove(v)
            changed = True
            break
    return TropicalGraph(tuple(verts), _canonical_edges(edges), dict(g.meta))


def f_vector(g: TropicalGraph) -> tuple:
    m = merge_realized(g)
    return (len(m.vertices), len(m.positive_edges()))


def make_fan2d(g: TropicalGraph) -> WeightedFan:
    """The weighted 2-dimensional fan spanned by the positive edges."""
    n = g.ambient_dim
    pts = {v.id: v.point for v in g.vertices}
    cones = []
    for e in g.edges:
        if e.zero or e.weight == 0:
            continue
        u, v = pts[e.u], pts[e.v]
        if rank([u, v]) < 2:
            raise ParallelEndpointsError(
                "positive-weight edge with parallel endpoints", edge=(e.u, e.v), u=u, v=v
            )
        cones.append(((u, v), e.weight))
    pieces = refine_2d(cones, n) if cones else []
    return WeightedFan(n, 2, tuple(Cone(gens, w) for gens, w in pieces))
