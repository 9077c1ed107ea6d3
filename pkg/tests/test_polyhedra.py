import random
from fractions import Fraction
from itertools import combinations, product

import pytest
from conftest import cone
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import is_extreme_lp
from randgen import random_pointed_tail, random_polyhedron

from orbitspace import (
    Cone,
    GeometryError,
    NotAVertex,
    Polyhedron,
    UnboundedSupport,
    common_interior_point,
    dual_cone,
    evaluate_support,
    intersect_cones,
    is_vertex_of_sum,
    minkowski_sum,
    normal_cone_at_vertex,
    normal_quasifan,
    quasifan_contains,
    reduce_to_vertices,
)


def test_evaluate_support(deltas):
    d1 = deltas[1]
    assert evaluate_support(d1, (1, 1)) == 0
    assert evaluate_support(d1, (1, 5)) == -3
    with pytest.raises(UnboundedSupport):
        evaluate_support(d1, (-1, 0))


def test_normal_cones(deltas, sigma):
    assert normal_cone_at_vertex(deltas[2], (-1, 1)) == dual_cone(sigma) == cone((1, 1), (1, 5))
    assert normal_cone_at_vertex(deltas[1], (0, 0)) == cone((1, 1), (1, 2))
    assert normal_cone_at_vertex(deltas[1], (2, -1)) == cone((1, 2), (1, 5))
    with pytest.raises(NotAVertex):
        normal_cone_at_vertex(deltas[1], (1, 0))


def test_reduce_to_vertices(sigma):
    square = reduce_to_vertices([(0, 0), (1, 0), (0, 1), (1, 1)], Cone.zero(2))
    assert square.vertices == ((0, 0), (0, 1), (1, 0), (1, 1))
    p = reduce_to_vertices([(0, 0), (2, -1), (3, -1), (5, -2)], sigma)
    assert p.vertices == ((0, 0), (2, -1), (5, -2))
    seg = reduce_to_vertices([(0, 0), (1, 1), (2, 2)], Cone.zero(2))
    assert seg.vertices == ((0, 0), (2, 2))


def test_non_pointed_tail_rejected():
    with pytest.raises(GeometryError):
        reduce_to_vertices([(0, 0)], cone((1, 0), (-1, 0)))
    with pytest.raises(GeometryError):
        Polyhedron([(0, 0)], Cone.full(2))


def test_polyhedron_rejects_non_vertex(sigma):
    with pytest.raises(NotAVertex):
        Polyhedron([(0, 0), (2, -1), (3, -1), (5, -2)], sigma)
    with pytest.raises(GeometryError):
        Polyhedron([], sigma)


def test_minkowski_sum(deltas):
    s = minkowski_sum([deltas[1], deltas[3]])
    assert s.vertices == ((0, 0), (2, -1), (5, -2))
    e1 = Polyhedron([(0, 0), (1, 0)], Cone.zero(2))
    e2 = Polyhedron([(0, 0), (0, 1)], Cone.zero(2))
    assert minkowski_sum([e1, e2]).vertices == ((0, 0), (0, 1), (1, 0), (1, 1))
    w = Polyhedron([(Fraction(1, 2), 3)], deltas[1].tail)
    assert minkowski_sum([deltas[1], w]) == deltas[1].translate((Fraction(1, 2), 3))


def test_minkowski_sum_edge_cases(deltas, sigma):
    assert minkowski_sum([], tail=sigma).vertices == ((0, 0),)
    with pytest.raises(GeometryError):
        minkowski_sum([deltas[1], Polyhedron([(0, 0)], Cone.zero(2))])


def test_is_vertex_of_sum(deltas):
    assert not is_vertex_of_sum([deltas[1], deltas[3]], [(0, 0), (3, -1)])
    assert is_vertex_of_sum([deltas[1], deltas[3]], [(2, -1), (3, -1)])
    for v in deltas[1].vertices:
        assert is_vertex_of_sum([deltas[1]], [v])


def test_normal_quasifan(deltas):
    assert normal_quasifan(deltas[2]).maximal_cones == {(-1, 1): cone((1, 1), (1, 5))}
    assert normal_quasifan(deltas[1]).maximal_cones == {
        (0, 0): cone((1, 1), (1, 2)),
        (2, -1): cone((1, 2), (1, 5)),
    }
    qf = normal_quasifan(minkowski_sum([deltas[1], deltas[3]]))
    assert sorted(qf.maximal_cones.values()) == sorted(
        [cone((1, 1), (1, 2)), cone((1, 2), (1, 3)), cone((1, 3), (1, 5))]
    )


def test_quasifan_contains(deltas):
    d = minkowski_sum([deltas[1], deltas[3]])
    qf = normal_quasifan(d)
    assert quasifan_contains(qf, cone((1, 2), (1, 3)))
    assert not quasifan_contains(qf, cone((1, 1), (1, 3)))
    for v in d.vertices:
        assert quasifan_contains(qf, normal_cone_at_vertex(d, v))
    # lower-dimensional members: the breakpoint rays, the boundary rays, the origin
    for r in [(1, 2), (1, 3), (1, 1), (1, 5)]:
        assert quasifan_contains(qf, cone(r))
    assert quasifan_contains(qf, Cone.zero(2))
    assert not quasifan_contains(qf, cone((2, 5)))
    assert not quasifan_contains(qf, cone((1, 0)))  # outside the weight cone


# -- properties on seeded random polyhedra ----------------------------------

def _instances(seed, count, max_points=5):
    rng = random.Random(seed)
    for _ in range(count):
        rank = rng.randint(1, 3)
        tail = random_pointed_tail(rng, rank)
        yield rng, tail, [random_polyhedron(rng, tail, max_points) for _ in range(rng.randint(1, 3))]


def test_extreme_points_agree_with_lp_oracle():
    rng = random.Random(11)
    for _ in range(150):
        rank = rng.randint(1, 3)
        tail = random_pointed_tail(rng, rank)
        pts = [tuple(rng.randint(-3, 3) for _ in range(rank)) for _ in range(rng.randint(1, 7))]
        p = reduce_to_vertices(pts, tail)
        for q in set(pts):
            assert (tuple(Fraction(x) for x in q) in p.vertices) == is_extreme_lp(q, pts, tail.rays)


def test_support_consistency_and_covering():
    for rng, tail, ps in _instances(3, 60):
        p = ps[0]
        omega = dual_cone(tail)
        gens = omega.generators
        for _ in range(20):
            u = [0] * tail.rank
            for g in gens:
                c = rng.randint(0, 3)
                u = [a + c * b for a, b in zip(u, g)]
            val = evaluate_support(p, u)
            assert val == min(sum(a * b for a, b in zip(u, v)) for v in p.vertices)
            attaining = [v for v in p.vertices if sum(a * b for a, b in zip(u, v)) == val]
            assert any(p.normal_cone(v).contains(u) for v in attaining)


def test_interior_disjointness():
    for _, _, ps in _instances(4, 60):
        p = ps[0]
        for v, w in combinations(p.vertices, 2):
            assert common_interior_point([p.normal_cone(v), p.normal_cone(w)]) is None


def test_refinement_is_coarsest_common_refinement():
    for _, tail, ps in _instances(5, 40):
        if len(ps) < 2:
            continue
        a, b = ps[0], ps[1]
        expected = set()
        for v, w in product(a.vertices, b.vertices):
            meet = intersect_cones([a.normal_cone(v), b.normal_cone(w)])
            if meet.is_full_dimensional:
                expected.add(meet)
        assert set(normal_quasifan(minkowski_sum([a, b])).maximal_cones.values()) == expected


def test_lemma_matches_brute_force_and_lp():
    for _, tail, ps in _instances(6, 60, max_points=4):
        total = minkowski_sum(ps)
        sums = {}
        for vs in product(*(p.vertices for p in ps)):
            s = tuple(sum(c) for c in zip(*vs))
            sums[vs] = s
        all_points = set(sums.values())
        for vs, s in sums.items():
            lemma = is_vertex_of_sum(ps, vs)
            assert lemma == (s in total.vertices)
            assert lemma == is_extreme_lp(s, all_points, tail.rays)


vec2 = st.tuples(st.integers(-4, 4), st.integers(-4, 4))


@settings(max_examples=60, deadline=None)
@given(st.lists(vec2, min_size=1, max_size=6), st.lists(vec2, min_size=1, max_size=6))
def test_quasifan_partitions_weight_cone(pts1, pts2):
    tail = Cone.from_generators([(1, 0), (1, 1)], 2)
    p = reduce_to_vertices(pts1, tail)
    qf = normal_quasifan(minkowski_sum([p, reduce_to_vertices(pts2, tail)]))
    omega = dual_cone(tail)
    for u in product(range(-4, 5), repeat=2):
        covered = any(c.contains(u) for c in qf.maximal_cones.values())
        assert covered == omega.contains(u)
