"""Input parsing and output serialisation (JSON, DOT, SVG)."""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from xml.sax.saxutils import escape

from .errors import InputError, UnknownFormatError
from .fan import WeightedFan
from .graph import TropicalGraph
from .poly import LaurentPoly

DOC_KEYS = {"variables", "delta", "polynomials", "options"}
POLY_KEYS = {"name", "terms"}
TERM_KEYS = {"coeff", "exp"}
OPTION_KEYS = {"keep_zero_edges", "mixed_volume", "suppress_bivalent", "force", "max_blowups",
               "seed", "verify_delta"}


@dataclass
class InputDocument:
    variables: tuple
    delta: int
    names: list
    polys: list
    options: dict = field(default_factory=dict)


def _rational(value, where) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise InputError("coefficients must be integers or strings like \"p/q\"", location=where)
    try:
        return Fraction(value) if isinstance(value, int) else Fraction(value.strip())
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad rational {value!r}", location=where) from None


def _reject_unknown(obj, allowed, where):
    if not isinstance(obj, dict):
        raise InputError("expected an object", location=where)
    extra = set(obj) - allowed
    if extra:
        raise InputError(f"unknown field(s) {sorted(extra)}", location=where)


def parse_input(data) -> InputDocument:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InputError("input is not UTF-8", location=f"byte {exc.start}") from None
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc.msg}", location=f"line {exc.lineno} column {exc.colno}") from None
    _reject_unknown(doc, DOC_KEYS, "$")
    variables = doc.get("variables", ["s", "t"])
    if (not isinstance(variables, list) or len(variables) != 2
            or not all(isinstance(v, str) and v for v in variables) or variables[0] == variables[1]):
        raise InputError("variables must be two distinct names", location="$.variables")
    delta = doc.get("delta", 1)
    if isinstance(delta, bool) or not isinstance(delta, int) or delta < 1:
        raise InputError("delta must be a positive integer", location="$.delta")
    if "polynomials" not in doc or not isinstance(doc["polynomials"], list):
        raise InputError("missing polynomial list", location="$.polynomials")
    names, polys = [], []
    for k, p in enumerate(doc["polynomials"]):
        where = f"$.polynomials[{k}]"
        _reject_unknown(p, POLY_KEYS, where)
        if "terms" not in p or not isinstance(p["terms"], list):
            raise InputError("missing term list", location=where + ".terms")
        terms = {}
        for j, t in enumerate(p["terms"]):
            tw = f"{where}.terms[{j}]"
            _reject_unknown(t, TERM_KEYS, tw)
            exp = t.get("exp")
            if (not isinstance(exp, list) or len(exp) != 2
                    or not all(isinstance(x, int) and not isinstance(x, bool) for x in exp)):
                raise InputError("exp must be a pair of integers", location=tw + ".exp")
            key = (exp[0], exp[1])
            if key in terms:
                raise InputError(f"duplicate exponent {list(key)}", location=tw + ".exp")
            terms[key] = _rational(t.get("coeff"), tw + ".coeff")
        f = LaurentPoly(terms, tuple(variables))
        if f.is_zero():
            raise InputError("polynomial is zero", location=where)
        names.append(str(p.get("name", f"f{k + 1}")))
        polys.append(f)
    options = doc.get("options", {})
    _reject_unknown(options, OPTION_KEYS, "$.options")
    return InputDocument(tuple(variables), delta, names, polys, dict(options))


def document_from_polys(polys, delta=1, variables=("s", "t")) -> dict:
    """The JSON document (as a dict) describing the given polynomials."""
    out = []
    for k, f in enumerate(polys):
        out.append({
            "name": f"f{k + 1}",
            "terms": [{"coeff": _fmt(c), "exp": list(e)} for e, c in sorted(f.terms.items())],
        })
    return {"variables": list(variables), "delta": delta, "polynomials": out}


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


# ---------------------------------------------------------------------------
# output


def to_json(obj) -> str:
    if hasattr(obj, "to_dict"):
        obj = obj.to_dict()
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def graph_from_json(text) -> TropicalGraph:
    return TropicalGraph.from_dict(json.loads(text))


def fan_from_json(text) -> WeightedFan:
    return WeightedFan.from_dict(json.loads(text))


def _dot_id(s):
    return '"' + str(s).replace('"', '\\"') + '"'


def graph_to_dot(g: TropicalGraph) -> str:
    lines = ["graph tropical {"]
    for v in g.vertices:
        lab = f"{v.label}\\n({', '.join(map(str, v.point))})"
        lines.append(f"  {_dot_id(v.id)} [label={_dot_id(lab)}];")
    for e in g.edges:
        attrs = [f"label={_dot_id(e.to_dict()['weight'])}"]
        if e.zero:
            attrs.append("style=dashed")
        lines.append(f"  {_dot_id(e.u)} -- {_dot_id(e.v)} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def fan_to_graph(fan: WeightedFan) -> TropicalGraph:
    """View a 2-dimensional fan as a graph on its primitive rays."""
    from .graph import Edge, Vertex
    from .lattice import primitive_vector

    rays = fan.rays()
    ids = {r: f"r{i + 1}" for i, r in enumerate(rays)}
    verts = tuple(Vertex(ids[r], ids[r], r, "ray") for r in rays)
    edges = []
    if fan.dim == 2:
        for c in fan.cones:
            a, b = (primitive_vector(x) for x in c.generators)
            edges.append(Edge(ids[a], ids[b], c.weight))
    return TropicalGraph(verts, tuple(edges), {})


def projection_matrix(n: int, seed: int = 0):
    """A seeded unimodular integer matrix; its first two rows give the view."""
    rng = random.Random(seed)
    M = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(2 * n):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            continue
        c = rng.choice([-1, 1])
        M[i] = [a + c * b for a, b in zip(M[i], M[j])]
    return M


def graph_to_svg(g: TropicalGraph, seed: int = 0, size: int = 480) -> str:
    head = f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">'
    if not g.vertices:
        return head + "</svg>\n"
    n = g.ambient_dim
    M = projection_matrix(n, seed)
    rows = M[:2] if n >= 2 else [M[0], [0] * n]
    pts = {}
    for v in g.vertices:
        pts[v.id] = tuple(sum(a * x for a, x in zip(r, v.point)) for r in rows)
    xs = [p[0] for p in pts.values()] + [0]
    ys = [p[1] for p in pts.values()] + [0]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1)
    pad = 40
    scale = (size - 2 * pad) / span

    def place(p):
        return (pad + (p[0] - min(xs)) * scale, size - pad - (p[1] - min(ys)) * scale)

    body = []
    for e in g.edges:
        (x1, y1), (x2, y2) = place(pts[e.u]), place(pts[e.v])
        dash = ' stroke-dasharray="4 3"' if e.zero else ""
        body.append(f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}" stroke="black"{dash}/>')
        body.append(f'<text x="{(x1 + x2) / 2:.1f}" y="{(y1 + y2) / 2:.1f}" font-size="10" fill="blue">'
                    f'{escape(e.to_dict()["weight"])}</text>')
    for v in g.vertices:
        x, y = place(pts[v.id])
        body.append(f'<circle cx="{x:.1f}" cy="{y:.1f}" r="3"/>')
        body.append(f'<text x="{x + 4:.1f}" y="{y - 4:.1f}" font-size="11">{escape(v.label)}</text>')
    return head + "".join(body) + "</svg>\n"


def serialize(obj, fmt: str = "json", seed: int = 0) -> bytes:
    if fmt == "json":
        return to_json(obj).encode()
    if isinstance(obj, WeightedFan):
        obj = fan_to_graph(obj)
    if fmt == "dot":
        return graph_to_dot(obj).encode()
    if fmt == "svg":
        return graph_to_svg(obj, seed).encode()
    raise UnknownFormatError(f"unknown output format {fmt!r}", expected=["json", "dot", "svg"])
