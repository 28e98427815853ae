import pytest
from conftest import polygons, unimodular_matrices
from hypothesis import given
from hypothesis import strategies as st

import oracles
from latticemix.exactgeom import LatticePolygon, UnimodularMap, apply_unimodular, dilate, normalized_area
from latticemix.mixedarea import (
    KernelMismatchError,
    UnitPairClass,
    classify_unit_pair,
    lattice_width,
    mixed_area,
    mixed_area_polarization,
    mixed_area_support,
    mixed_area_value,
    segment_mixed_area,
    simplex_distance,
    verify_minkowski_inequality,
)

SQUARE = LatticePolygon.unit_square()
SIMPLEX = LatticePolygon.standard_simplex()
Q_EX = LatticePolygon([(0, 0), (0, 2), (3, 3)])


def seg(x, y):
    return LatticePolygon.segment((x, y))


def test_example_pair():
    r = mixed_area(SQUARE, Q_EX)
    assert r.to_json() == {"value": 6, "agreement": True, "polarization": 6, "support": 6}
    # one support value per normalized normal of Q: 0 + 3 + 3
    from latticemix.exactgeom import normalized_normals, support_value
    terms = {n: support_value(SQUARE, n) for n in normalized_normals(Q_EX)}
    assert terms == {(-2, 0): 0, (-1, 3): 3, (3, -3): 3}
    assert mixed_area_value(SQUARE, Q_EX) == 6


@pytest.mark.parametrize("P,Q,v", [
    (SIMPLEX, SIMPLEX, 1),
    (seg(2, 1), seg(1, 2), 3),
    (SQUARE, LatticePolygon.point(4, 4), 0),
    (seg(2, 4), seg(1, 2), 0),
])
def test_examples(P, Q, v):
    assert mixed_area_polarization(P, Q) == mixed_area_support(P, Q) == v


@given(polygons(), polygons())
def test_kernels_agree_with_oracle(P, Q):
    r = mixed_area(P, Q)
    assert r.method_agreement
    assert r.value == oracles.mixed_area(P.vertices, Q.vertices)


@given(polygons(), polygons(), polygons())
def test_bilinear_and_symmetric(P, P2, Q):
    assert mixed_area(P, Q).value == mixed_area(Q, P).value
    assert mixed_area(P + P2, Q).value == mixed_area(P, Q).value + mixed_area(P2, Q).value


@given(polygons(), polygons(), unimodular_matrices, st.tuples(st.integers(-4, 4), st.integers(-4, 4)))
def test_unimodular_invariance(P, Q, A, t):
    F = UnimodularMap(A, t)
    assert mixed_area(apply_unimodular(F, P), apply_unimodular(F, Q)).value == mixed_area(P, Q).value


@given(polygons(), st.integers(0, 3))
def test_diagonal_and_homogeneity(P, k):
    assert mixed_area(P, P).value == normalized_area(P)
    assert mixed_area(dilate(P, k), SQUARE).value == k * mixed_area(P, SQUARE).value


@given(polygons(), polygons())
def test_minkowski_inequality(P, Q):
    assert verify_minkowski_inequality(P, Q)


@given(polygons(), polygons())
def test_monotone_under_inclusion(P, Q):
    # P is contained in P + (segment), so V grows
    big = P + seg(1, 1)
    assert mixed_area(big, Q).value >= mixed_area(P, Q).value


def test_width_examples():
    assert lattice_width(Q_EX, (0, 1)) == 3
    assert lattice_width(LatticePolygon.point(2, 3), (5, 7)) == 0
    P = LatticePolygon([(0, 0), (3, 30), (1, 11), (0, 1)])
    assert lattice_width(P, (0, 1)) == 30
    with pytest.raises(ValueError):
        lattice_width(SQUARE, (2, 4))


@given(polygons(), st.tuples(st.integers(-5, 5), st.integers(-5, 5)))
def test_width_oracle(P, u):
    if __import__("math").gcd(*u) == 1:
        assert lattice_width(P, u) == oracles.width(P.vertices, u)


def test_segment_mixed_area_examples():
    assert segment_mixed_area(SQUARE, seg(0, 3)) == 3
    assert segment_mixed_area(seg(2, 1), seg(1, 2)) == 3
    assert segment_mixed_area(Q_EX, LatticePolygon.point(1, 1)) == 0
    with pytest.raises(ValueError):
        segment_mixed_area(SQUARE, SQUARE)


@given(polygons(), st.tuples(st.integers(-6, 6), st.integers(-6, 6)))
def test_segment_formula(P, ab):
    I = LatticePolygon.segment(ab)
    assert segment_mixed_area(P, I) == mixed_area(P, I).value


@pytest.mark.parametrize("P,d", [
    (SIMPLEX, 1),
    (LatticePolygon([(0, 0), (2, 0), (0, 1)]), 2),
    (SQUARE, 2),
])
def test_simplex_distance_examples(P, d):
    assert simplex_distance(P) == d == mixed_area(P, SIMPLEX).value


@given(polygons())
def test_simplex_distance_is_fitting_dilate(P):
    d = simplex_distance(P)
    x0 = min(x for x, _ in P.vertices)
    y0 = min(y for _, y in P.vertices)
    # the translate anchored at the axes fits in d * simplex but not in (d - 1) * simplex
    assert max(x - x0 + y - y0 for x, y in P.vertices) == d


def test_unit_pair_examples():
    assert classify_unit_pair(SIMPLEX, SIMPLEX) is UnitPairClass.SHARED_UNIMODULAR_TRIANGLE
    assert classify_unit_pair(seg(1, 0), SIMPLEX) is UnitPairClass.PRIMITIVE_SEGMENT_FIRST
    assert classify_unit_pair(SIMPLEX, seg(0, 1)) is UnitPairClass.PRIMITIVE_SEGMENT_SECOND
    assert classify_unit_pair(dilate(SIMPLEX, 2), SIMPLEX) is UnitPairClass.NOT_UNIT


@given(polygons(0, 3, 4), polygons(0, 3, 4))
def test_unit_pairs_always_classified(P, Q):
    # never raises: mixed area one has only the three known shapes
    c = classify_unit_pair(P, Q)
    assert (c is UnitPairClass.NOT_UNIT) == (mixed_area(P, Q).value != 1)


def test_kernel_mismatch_is_assertion():
    assert issubclass(KernelMismatchError, AssertionError)
