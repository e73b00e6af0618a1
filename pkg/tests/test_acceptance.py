"""Acceptance suite: one check per criterion, exact arithmetic throughout.

Run with ``pytest tests/test_acceptance.py -s`` (or ``python tests/test_acceptance.py``)
to see one PASS/FAIL line per criterion.

Vertices are identified by their coordinates, never by D-labels: the ray
numbering used here starts at (1, 0) and proceeds counterclockwise, which
need not agree with labels used elsewhere.
"""
import random
from itertools import combinations

import pytest

from tropimpl.complex import pushforward_fan, realize_weighted_complex
from tropimpl.fan import check_balanced, fans_equal
from tropimpl.fixtures import (
    FIRST_SUPPORTS,
    NODAL_SPECIAL,
    NODAL_SUPPORTS,
    SPARSE_SPECIAL,
    SPARSE_SUPPORTS,
    generic_instance,
    parse_all,
    plane_blowup_complex,
    plane_complex,
)
from tropimpl.generic import GenericInput, build_generic_graph, certify_generic
from tropimpl.graph import f_vector, make_fan2d, merge_realized, suppress_bivalent
from tropimpl.poly import LaurentPoly, homogenize, newton_polygon, torus_intersection_length
from tropimpl.polygon import mixed_volume
from tropimpl.resolution import (
    ProjArrangement,
    blow_up_double_point,
    build_nongeneric_graph,
    find_excess_points,
    intersection_cycle,
    resolve_arrangement,
    split_reducible,
)

SEED = 20240601
E1, E2, E3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)


def fan_of(g):
    return make_fan2d(merge_realized(g))


def edge_points(g, e):
    return frozenset((g.vertex(e.u).point, g.vertex(e.v).point))


def first_graph():
    return build_generic_graph(GenericInput(generic_instance(FIRST_SUPPORTS, SEED)))


def nodal_graph():
    return build_generic_graph(GenericInput(generic_instance(NODAL_SUPPORTS, SEED)))


def sparse_graph():
    return build_generic_graph(GenericInput(generic_instance(SPARSE_SUPPORTS, SEED)))


def nodal_special():
    return resolve_arrangement(ProjArrangement.from_polys(parse_all(NODAL_SPECIAL)))


def sparse_special():
    return resolve_arrangement(ProjArrangement.from_polys(parse_all(SPARSE_SPECIAL)))


# ---------------------------------------------------------------------------


def criterion_1():
    g = first_graph()
    toric = {v.point for v in g.vertices if v.kind == "toric"}
    want = {(-2, -1, -2), (-5, -3, -4), (-3, -2, -3), (-1, -1, -1),
            (0, -1, -1), (0, 1, 1), (0, 1, 2), (0, -1, -2)}
    zero = {edge_points(g, e) for e in g.edges if e.zero}
    want_zero = {frozenset(((0, -1, -1), (0, 1, 1))), frozenset(((0, 1, 2), (0, -1, -2)))}
    n_pos = len(g.positive_edges())
    fv = f_vector(suppress_bivalent(g))
    ok = toric == want and zero == want_zero and n_pos == 19 and fv == (7, 13)
    return ok, f"{len(toric)} realized vertices, {n_pos} weighted edges, zero edges ok={zero == want_zero}, f-vector {fv}"


def criterion_2():
    g = nodal_graph()
    n_rays = len(g.meta["rays"])
    pts = {v.point for v in g.vertices}
    want = {(-9, -6, -9), (-3, -3, -3), (-6, -9, -9), (2, 2, 2), (2, 2, 3)}
    dropped = n_rays - sum(v.kind == "toric" for v in g.vertices)
    n_edges = len(g.positive_edges())
    ok = n_rays == 8 and want <= pts and (0, 0, 0) not in pts and dropped > 0 and n_edges == 14
    return ok, f"{n_rays} rays, listed vertices present={want <= pts}, {dropped} origin vertices dropped, {n_edges} edges"


def criterion_3():
    g = suppress_bivalent(sparse_graph())
    fv = f_vector(g)
    d3, d4 = (-1, -2, -2), (-2, -2, -3)
    weights = {edge_points(g, e): e.weight for e in g.edges}
    special = {frozenset((E1, E2)): 2, frozenset((E1, E3)): 2, frozenset((E2, E3)): 3, frozenset((E1, d3)): 2}
    rest_ok = all(w == 1 for k, w in weights.items() if k not in special)
    pts = {v.point for v in g.vertices}
    ok = fv == (5, 8) and all(weights.get(k) == w for k, w in special.items()) and rest_ok and {d3, d4} <= pts
    return ok, f"f-vector {fv}, weights ok={ok}"


def criterion_4():
    d = nodal_special()
    pb = d.pullback(0)
    want_pb = {"F1": 1, "E1": 2, "E2": 3, "E3": 3, "E4": 4, "Finf": -3}
    vals = {D: d.valuation(D) for D in ("E1", "E2", "E3", "E4", "Finf")}
    want_vals = {"E1": (2, 2, 2), "E2": (3, 3, 2), "E3": (3, 3, 2), "E4": (4, 4, 2), "Finf": (-3, -3, -3)}
    fv = f_vector(suppress_bivalent(build_nongeneric_graph(d)))
    nonzero_pb = {k: v for k, v in pb.items() if v}
    ok = len(d.steps) == 4 and nonzero_pb == want_pb and vals == want_vals and fv == (6, 12)
    return ok, f"{len(d.steps)} blow-ups, pullback {nonzero_pb}, merged f-vector {fv}"


def criterion_5():
    arr = ProjArrangement.from_polys(parse_all(SPARSE_SPECIAL))
    pts = {p.coords for p in find_excess_points(arr)}
    d = resolve_arrangement(arr)
    listed = {("F1", "F2"): 1, ("F1", "F3"): 1, ("E1", "F3"): 1, ("E2", "F2"): 1, ("E2", "Finf"): 1,
              ("E2", "E3"): 1, ("E3", "F1"): 1, ("E3", "F2"): 1, ("E3", "F3"): 1, ("F2", "F3"): 2}
    listed = {frozenset(k): v for k, v in listed.items()}
    table = {frozenset(k): v for k, v in d.nonzero_table().items()}
    g = build_nongeneric_graph(d)
    heavy = {frozenset((e.u, e.v)): e.weight for e in g.edges if e.weight != 1}
    checks = {
        "excess points": pts == {(1, 2, 1), (0, 1, 0)},
        "intersection table": table == listed,
        "graph weights": heavy == {frozenset(("e2", "e3")): 2, frozenset(("e1", "Finf")): 2},
        "E3 vertex": d.valuation("E3") == (1, 1, 1),
    }
    extra = sorted(tuple(sorted(k)) for k in set(table) - set(listed))
    missing = sorted(tuple(sorted(k)) for k in set(listed) - set(table))
    failed = [k for k, v in checks.items() if not v]
    detail = "all parts match" if not failed else f"mismatch in {failed}; computed only {extra}, listed only {missing}"
    return not failed, detail


def criterion_6():
    plane = realize_weighted_complex(plane_complex())
    blow = realize_weighted_complex(plane_blowup_complex())
    std = {frozenset((a, b)) for a, b in combinations([E1, E2, E3, (-1, -1, -1)], 2)}
    tripod = {frozenset((v, (1, 1, 1))) for v in (E1, E2, E3)} | {frozenset((v, (-1, -1, -1))) for v in (E1, E2, E3)}
    got_plane = {frozenset(c.generators) for c in plane.cones}
    got_blow = {frozenset(c.generators) for c in blow.cones}
    weights = all(c.weight == 1 for c in plane.cones + blow.cones)
    ok = got_plane == std and got_blow == tripod and weights
    return ok, f"plane cones {len(got_plane)}, blown-up cones {len(got_blow)}, all weights one={weights}"


def criterion_7():
    fans = {
        "first": fan_of(first_graph()),
        "nodal": fan_of(nodal_graph()),
        "sparse": fan_of(sparse_graph()),
        "nodal special": fan_of(build_nongeneric_graph(nodal_special())),
        "sparse special": fan_of(build_nongeneric_graph(sparse_special())),
        "plane": realize_weighted_complex(plane_complex()),
        "plane blow-up": realize_weighted_complex(plane_blowup_complex()),
    }
    bad = [k for k, f in fans.items() if not check_balanced(f)["balanced"]]
    return not bad, f"{len(fans) - len(bad)}/{len(fans)} fans balanced" + (f", unbalanced: {bad}" if bad else "")


def criterion_8():
    rng = random.Random(SEED)
    equal = tried = 0
    while tried < 20:
        polys = [LaurentPoly({e: rng.choice([-1, 1]) * rng.randint(1, 97) for e in supp}) for supp in SPARSE_SUPPORTS]
        inp = GenericInput(polys)
        if not certify_generic(inp).accepted:
            continue
        tried += 1
        a = fan_of(build_generic_graph(inp))
        b = fan_of(build_nongeneric_graph(resolve_arrangement(ProjArrangement.from_polys(polys))))
        equal += fans_equal(a, b)
    return equal == tried, f"{equal}/{tried} instances agree"


def criterion_9():
    # every pair of boundary curves meeting once meets in a single rational,
    # transverse double point; blow each of them up in turn
    out = []
    for name, d in (("sparse special", sparse_special()), ("nodal special", nodal_special())):
        base = fan_of(build_nongeneric_graph(d))
        pairs = [k for k, v in d.nonzero_table().items() if v == 1]
        good = 0
        for a, b in pairs:
            d1 = blow_up_double_point(d, a, b)
            changed = len(d1.divisors) == len(d.divisors) + 1 and d1.nonzero_table() != d.nonzero_table()
            good += changed and fans_equal(base, fan_of(build_nongeneric_graph(d1)))
        out.append((name, good, len(pairs)))
    ok = all(g == n and n > 0 for _, g, n in out)
    return ok, ", ".join(f"{name}: fan unchanged for {g}/{n} double points" for name, g, n in out)


def _random_support(rng):
    k = rng.randint(2, 5)
    return {(rng.randint(0, 4), rng.randint(0, 4)) for _ in range(k)}


def criterion_10():
    rng = random.Random(SEED)
    accepted = agree = 0
    for _ in range(50):
        polys = [LaurentPoly({e: rng.choice([-1, 1]) * rng.randint(1, 97) for e in _random_support(rng)})
                 for _ in range(2)]
        if any(f.is_monomial() for f in polys) or not certify_generic(GenericInput(polys)).accepted:
            continue
        accepted += 1
        f, g = polys
        agree += torus_intersection_length(f, g) == mixed_volume(newton_polygon(f), newton_polygon(g))
    bezout_ok = bezout_n = 0
    crng = random.Random(SEED)
    for exprs in (SPARSE_SPECIAL, NODAL_SPECIAL):
        arr = ProjArrangement.from_polys(parse_all(exprs))
        for a, b in combinations(arr.divisor_ids(), 2):
            F, G = arr.hom(a), arr.hom(b)
            bezout_n += 1
            bezout_ok += intersection_cycle(F, G, crng)["total"] == F.degree * G.degree
    for supports in (FIRST_SUPPORTS, NODAL_SUPPORTS, SPARSE_SUPPORTS):
        hs = [homogenize(f) for f in generic_instance(supports, SEED)]
        for F, G in combinations(hs, 2):
            bezout_n += 1
            bezout_ok += intersection_cycle(F, G, crng)["total"] == F.degree * G.degree
    ok = accepted > 0 and agree == accepted and bezout_ok == bezout_n
    return ok, f"length = mixed volume on {agree}/{accepted} accepted pairs, Bezout totals {bezout_ok}/{bezout_n}"


def criterion_11():
    ident = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    fans = [fan_of(first_graph()), fan_of(sparse_graph()), realize_weighted_complex(plane_complex())]
    ident_ok = all(fans_equal(pushforward_fan(f, ident), f) for f in fans)
    g, h = LaurentPoly.from_expr("s - t"), LaurentPoly.from_expr("s + t + 1")
    f2 = LaurentPoly.from_expr("3 - 5*t + 7*s**2")
    f3 = LaurentPoly.from_expr("11 + 13*s*t")
    inp = GenericInput([g * h, f2, f3])
    ext, beta = split_reducible(inp, 0, [g, h])
    original = fan_of(build_generic_graph(inp))
    via_split = pushforward_fan(fan_of(build_generic_graph(ext)), beta)
    round_trip = fans_equal(via_split, original)
    return ident_ok and round_trip, f"identity preserves fans={ident_ok}, split round trip={round_trip}"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11]


def _run(n):
    ok, detail = CRITERIA[n - 1]()
    print(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'} - {detail}")
    return ok, detail


@pytest.mark.parametrize("n", range(1, len(CRITERIA) + 1))
def test_criterion(n):
    ok, detail = _run(n)
    assert ok, detail


if __name__ == "__main__":
    results = [_run(n)[0] for n in range(1, len(CRITERIA) + 1)]
    print(f"{sum(results)}/{len(results)} criteria pass")
