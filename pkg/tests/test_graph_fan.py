from fractions import Fraction

import pytest

from tropimpl.errors import NonIntegralWeightError, ParallelEndpointsError
from tropimpl.fan import Cone, WeightedFan, check_balanced, check_integral, fans_equal, refine_fan
from tropimpl.graph import (
    Edge,
    TropicalGraph,
    Vertex,
    f_vector,
    make_fan2d,
    merge_realized,
    suppress_bivalent,
)

E3 = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)]


def graph(points, edges):
    verts = tuple(Vertex(f"v{i}", f"V{i}", p, "toric") for i, p in enumerate(points))
    es = tuple(Edge(f"v{a}", f"v{b}", Fraction(w)) for a, b, w in edges)
    return TropicalGraph(verts, es)


def plane_fan(weight=1):
    cones = [Cone((E3[i], E3[j]), Fraction(weight)) for i in range(4) for j in range(i + 1, 4)]
    return WeightedFan(3, 2, tuple(cones))


def test_plane_fan_balanced():
    assert check_balanced(plane_fan())["balanced"]
    assert check_balanced(plane_fan(3))["balanced"]


def test_single_cone_unbalanced():
    fan = WeightedFan(3, 2, (Cone(((1, 0, 0), (0, 1, 0)), Fraction(1)),))
    report = check_balanced(fan)
    assert not report["balanced"] and len(report["failures"]) == 2


def test_refinement_splits_overlaps():
    # two overlapping cones in one plane: [e1, e1+e2] is covered twice
    a = Cone(((1, 0, 0), (0, 1, 0)), Fraction(1))
    b = Cone(((1, 0, 0), (1, 1, 0)), Fraction(2))
    fan = refine_fan(WeightedFan(3, 2, (a, b)))
    weights = sorted(c.weight for c in fan.cones)
    assert weights == [1, 3]
    split = WeightedFan(3, 2, (Cone(((1, 0, 0), (1, 1, 0)), Fraction(3)),
                               Cone(((1, 1, 0), (0, 1, 0)), Fraction(1))))
    assert fans_equal(fan, split)


def test_fans_equal_ignores_subdivision_and_order():
    whole = WeightedFan(3, 2, (Cone(((1, 0, 0), (0, 1, 0)), Fraction(2)),))
    halves = WeightedFan(3, 2, (Cone(((0, 1, 0), (1, 1, 0)), Fraction(2)),
                                Cone(((1, 1, 0), (1, 0, 0)), Fraction(2))))
    assert fans_equal(whole, halves)
    assert not fans_equal(whole, WeightedFan(3, 2, (Cone(((1, 0, 0), (0, 1, 0)), Fraction(1)),)))


def test_check_integral():
    with pytest.raises(NonIntegralWeightError):
        check_integral(WeightedFan(3, 2, (Cone(((1, 0, 0), (0, 1, 0)), Fraction(1, 2)),)))


def test_merge_realized_joins_equal_points_and_drops_origin():
    g = graph([(1, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 0)],
              [(0, 2, 1), (1, 2, 2), (3, 2, 5), (0, 1, 4)])
    m = merge_realized(g)
    ids = {v.id for v in m.vertices}
    assert ids == {"v0=v1", "v2"}
    assert m.vertex("v0=v1").label == "V0=V1"
    assert [(e.u, e.v, e.weight) for e in m.edges] == [("v0=v1", "v2", 3)]


def test_suppress_bivalent_fuses_interior_vertex():
    # v1 = v0 + v2 sits inside the cone of its neighbours
    g = graph([(1, 0, 0), (1, 1, 0), (0, 1, 0)], [(0, 1, 2), (1, 2, 2)])
    s = suppress_bivalent(g)
    assert [v.id for v in s.vertices] == ["v0", "v2"]
    assert [(e.u, e.v, e.weight) for e in s.edges] == [("v0", "v2", 2)]
    # unequal weights keep the vertex
    g2 = graph([(1, 0, 0), (1, 1, 0), (0, 1, 0)], [(0, 1, 2), (1, 2, 1)])
    assert len(suppress_bivalent(g2).vertices) == 3
    # outside the cone keeps the vertex
    g3 = graph([(1, 0, 0), (-1, -1, 0), (0, 1, 0)], [(0, 1, 1), (1, 2, 1)])
    assert len(suppress_bivalent(g3).vertices) == 3


def test_suppression_preserves_fan():
    g = graph([(1, 0, 0), (1, 1, 0), (0, 1, 0), (0, 0, 1)], [(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)])
    assert fans_equal(make_fan2d(g), make_fan2d(suppress_bivalent(g)))


def test_f_vector_empty_graph():
    assert f_vector(TropicalGraph((), ())) == (0, 0)


def test_make_fan_rejects_parallel_endpoints():
    g = graph([(1, 0, 0), (2, 0, 0)], [(0, 1, 1)])
    with pytest.raises(ParallelEndpointsError):
        make_fan2d(g)


def test_zero_flagged_edges_are_not_cones():
    verts = (Vertex("a", "A", (1, 0, 0), "toric"), Vertex("b", "B", (2, 0, 0), "toric"))
    g = TropicalGraph(verts, (Edge("a", "b", Fraction(0), zero=True),))
    assert make_fan2d(g).cones == ()


def test_graph_dict_round_trip():
    g = graph([(1, 0, 0), (0, 1, 0)], [(0, 1, "3/2")])
    assert TropicalGraph.from_dict(g.to_dict()) == g
    fan = plane_fan(2)
    assert fans_equal(WeightedFan.from_dict(fan.to_dict()), fan)
