import itertools

import pytest
from conftest import polygons, unimodular_matrices
from hypothesis import given
from hypothesis import strategies as st

import oracles
from latticemix.exactgeom import (
    LatticePolygon,
    UnimodularMap,
    apply_unimodular,
    convex_hull,
    dilate,
    edge_normals,
    lattice_length,
    map_direction_to_e2,
    minkowski_sum,
    minkowski_sum_hull,
    normalized_area,
    normalized_normals,
    support_value,
)
from latticemix.mixedarea import lattice_width

SQUARE = LatticePolygon.unit_square()
Q_EX = LatticePolygon([(0, 0), (0, 2), (3, 3)])


def test_canonical_square():
    P = LatticePolygon([(0, 0), (1, 0), (0, 1), (1, 1), (0, 0)])
    assert P.vertices == ((0, 0), (1, 0), (1, 1), (0, 1))


def test_collinear_points_give_segment():
    assert LatticePolygon([(0, 0), (2, 2), (1, 1)]).vertices == ((0, 0), (2, 2))


def test_interior_point_dropped():
    P = LatticePolygon([(0, 0), (3, 1), (1, 3), (1, 1)])
    assert set(P.vertices) == oracles.hull_vertices([(0, 0), (3, 1), (1, 3), (1, 1)])
    assert len(P) == 3


def test_empty_and_non_integer_rejected():
    with pytest.raises(ValueError):
        LatticePolygon([])
    with pytest.raises(TypeError):
        LatticePolygon([(0.5, 1)])


@given(st.lists(st.tuples(st.integers(-6, 6), st.integers(-6, 6)), min_size=1, max_size=9))
def test_hull_matches_oracle(pts):
    P = LatticePolygon(pts)
    assert set(P.vertices) == oracles.hull_vertices(pts)
    assert P.vertices[0] == min(P.vertices)
    # counterclockwise, strictly convex
    vs = P.vertices
    if len(vs) >= 3:
        for i in range(len(vs)):
            a, b, c = vs[i], vs[(i + 1) % len(vs)], vs[(i + 2) % len(vs)]
            assert (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]) > 0


@given(polygons())
def test_canonicalization_idempotent(P):
    assert LatticePolygon(P.vertices) == P
    assert LatticePolygon(reversed(P.vertices)) == P


def test_minkowski_examples():
    assert SQUARE + SQUARE == LatticePolygon.rectangle(2, 2)
    assert LatticePolygon.segment((1, 0)) + LatticePolygon.segment((0, 1)) == SQUARE


def test_square_plus_example_triangle():
    # the hull of the 12 vertex sums is a hexagon of normalized area 20
    S = SQUARE + Q_EX
    sums = oracles.minkowski_points(SQUARE.vertices, Q_EX.vertices)
    assert set(S.vertices) == oracles.hull_vertices(sums)
    assert len(S) == 6
    assert normalized_area(S) == 20 == oracles.area2(sums)


@given(polygons(), polygons())
def test_minkowski_edge_merge_equals_hull(P, Q):
    assert minkowski_sum(P, Q) == minkowski_sum_hull(P, Q)
    assert minkowski_sum(P, Q) == minkowski_sum(Q, P)


@given(polygons(), st.integers(0, 4))
def test_dilation(P, k):
    kP = dilate(P, k)
    assert normalized_area(kP) == k * k * normalized_area(P)
    if k:
        acc = P
        for _ in range(k - 1):
            acc = acc + P
        assert acc == kP


def test_dilate_negative():
    with pytest.raises(ValueError):
        dilate(SQUARE, -1)


@pytest.mark.parametrize("P,area", [
    (LatticePolygon.standard_simplex(), 1),
    (LatticePolygon.segment((0, 0), (5, 3)), 0),
    (Q_EX, 6),
])
def test_normalized_area_examples(P, area):
    assert normalized_area(P) == area


@given(polygons())
def test_area_oracle(P):
    assert normalized_area(P) == oracles.area2(P.vertices)


@pytest.mark.parametrize("S,n", [
    (LatticePolygon.segment((0, 0), (3, 3)), 3),
    (LatticePolygon.segment((0, 0), (2, 5)), 1),
    (LatticePolygon.point(7, -4), 0),
])
def test_lattice_length(S, n):
    assert lattice_length(S) == n


def test_lattice_length_rejects_2d():
    with pytest.raises(ValueError):
        lattice_length(SQUARE)


@pytest.mark.parametrize("u,h", [((-1, 3), 3), ((-2, 0), 0), ((0, 0), 0)])
def test_support_examples(u, h):
    assert support_value(SQUARE, u) == h


def test_example_normals():
    assert sorted(normalized_normals(Q_EX)) == sorted([(-2, 0), (-1, 3), (3, -3)])
    fan = edge_normals(SQUARE)
    assert sorted(fan.normals) == [(-1, 0), (0, -1), (0, 1), (1, 0)] and set(fan.lengths) == {1}
    fan2 = edge_normals(dilate(LatticePolygon.standard_simplex(), 2))
    assert sorted(fan2.normals) == [(-1, 0), (0, -1), (1, 1)] and fan2.lengths == (2, 2, 2)


def test_edge_normals_rejects_degenerate():
    with pytest.raises(ValueError):
        edge_normals(LatticePolygon.segment((1, 1)))


@given(polygons())
def test_normal_fan_closes(P):
    ns = normalized_normals(P)
    assert sum(n[0] for n in ns) == 0 and sum(n[1] for n in ns) == 0
    if P.dim == 2:
        fan = edge_normals(P)
        assert fan.edge_vectors() == P.edges()
        assert fan.normalized() == ns


def test_unimodular_examples():
    assert apply_unimodular(UnimodularMap(), SQUARE) == SQUARE
    shear = UnimodularMap(((1, 1), (0, 1)))
    Pg = apply_unimodular(shear, SQUARE)
    assert len(Pg) == 4 and normalized_area(Pg) == 2
    with pytest.raises(ValueError):
        UnimodularMap(((2, 0), (0, 1)))


@given(polygons(), unimodular_matrices, st.tuples(st.integers(-5, 5), st.integers(-5, 5)))
def test_unimodular_preserves_area_and_inverts(P, A, t):
    F = UnimodularMap(A, t)
    FP = apply_unimodular(F, P)
    assert normalized_area(FP) == normalized_area(P)
    assert apply_unimodular(F.inverse(), FP) == P
    assert F.compose(F.inverse())((3, -7)) == (3, -7)


@given(polygons(), st.tuples(st.integers(-9, 9), st.integers(-9, 9)))
def test_map_direction_to_e2_transports_width(P, u):
    if u == (0, 0) or __import__("math").gcd(*u) != 1:
        return
    F = map_direction_to_e2(u)
    assert abs(F.determinant) == 1
    assert lattice_width(apply_unimodular(F, P), (0, 1)) == lattice_width(P, u) == oracles.width(P.vertices, u)


def test_convex_hull_fraction_and_small_inputs():
    from fractions import Fraction as Fr
    assert convex_hull([(Fr(1, 2), 0), (0, 0), (Fr(1, 4), 0)]) == [(0, 0), (Fr(1, 2), 0)]
    assert convex_hull([(1, 1)] * 3) == [(1, 1)]


def test_edges_of_point_and_segment():
    assert LatticePolygon.point().edges() == []
    assert LatticePolygon.segment((2, 1)).edges() == [(2, 1), (-2, -1)]
    assert list(itertools.islice(iter(SQUARE), 2)) == [(0, 0), (1, 0)]
