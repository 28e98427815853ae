import itertools
import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from latticemix.exactgeom import LatticePolygon, dilate
from latticemix.mixedarea import KernelMismatchError, mixed_area
from latticemix.pluecker import (
    PlueckerVector,
    RealizabilityStatus,
    ScalingVector,
    StatusKind,
    certify_nonrealizable,
    classify_realizability,
    inverse_perm,
    k4_reduce,
    make_witness,
    permute,
    permute_polygons,
    pluecker_status,
    realize_boundary,
    realize_triple,
    realize_two_ones,
    scale,
    two_ones_family,
)


def seg(x, y):
    return LatticePolygon.segment((x, y))


def areas(polys):
    return tuple(mixed_area(polys[i], polys[j]).value for i, j in itertools.combinations(range(len(polys)), 2))


perms = st.permutations([1, 2, 3, 4]).map(tuple)
small_vec = st.tuples(*[st.integers(0, 6)] * 6)


def test_vector_validation():
    with pytest.raises(ValueError):
        PlueckerVector(1, 1, 1, 1, 1, -1)
    with pytest.raises(TypeError):
        PlueckerVector(1, 1, 1, 1, 1, 1.5)
    with pytest.raises(ValueError):
        PlueckerVector.of([1, 2, 3])
    v = PlueckerVector.of([1, 2, 3, 4, 5, 6])
    assert v[2, 1] == 1 and v[3, 4] == 6 and list(v) == [1, 2, 3, 4, 5, 6]


@pytest.mark.parametrize("v,kind,eq", [
    ((1, 1, 1, 1, 1, 1), StatusKind.INTERIOR, ()),
    ((1, 2, 3, 1, 4, 5), StatusKind.BOUNDARY, (2,)),
    ((0, 0, 0, 1, 1, 1), StatusKind.BOUNDARY, (1, 2, 3)),
    ((5, 1, 1, 1, 1, 1), StatusKind.VIOLATES, ()),
])
def test_status_examples(v, kind, eq):
    st_ = pluecker_status(v)
    assert st_.kind is kind and st_.equalities == eq


def test_permute_examples():
    v = (1, 2, 3, 4, 5, 6)
    assert permute((1, 2, 3, 4), v).as_tuple() == v
    assert permute((2, 1, 3, 4), v).as_tuple() == (1, 4, 5, 2, 3, 6)
    with pytest.raises(ValueError):
        permute((1, 1, 2, 3), v)


@given(small_vec, perms, perms)
def test_permute_is_an_action(v, s, t):
    sv = permute(s, v)
    assert sorted(sv.products()) == sorted(PlueckerVector(*v).products())
    assert pluecker_status(sv).kind is pluecker_status(v).kind
    ts = tuple(t[s[i] - 1] for i in range(4))  # t after s
    assert permute(s, permute(t, v)) == permute(ts, v)
    assert permute(inverse_perm(s), sv).as_tuple() == v


def test_scale_examples():
    assert scale((1, 1, 1, 1), (3, 1, 4, 1, 5, 9)).as_tuple() == (3, 1, 4, 1, 5, 9)
    assert scale((2, 1, 1, 1), (1,) * 6).as_tuple() == (2, 2, 2, 1, 1, 1)
    assert scale((2, 1, 2, 3), (1, 1, 1, 4, 4, 1)).as_tuple() == (2, 4, 6, 8, 12, 6)
    with pytest.raises(ValueError):
        ScalingVector((1, 0, 1, 1))


def test_k4_reduce_examples():
    lam, v = k4_reduce((2, 4, 6, 8, 12, 6))
    assert lam.lambdas == (2, 1, 2, 3) and v.as_tuple() == (1, 1, 1, 4, 4, 1)
    lam, v = k4_reduce((1, 1, 1, 4, 4, 1))
    assert lam.lambdas == (1, 1, 1, 1) and v.as_tuple() == (1, 1, 1, 4, 4, 1)
    with pytest.raises(ValueError):
        k4_reduce((0, 0, 0, 1, 1, 1))


@given(st.tuples(*[st.integers(0, 40)] * 6))
def test_k4_reduce_round_trip(w):
    w = PlueckerVector(*w)
    assume(all(w.node_gcd(i) for i in range(1, 5)))
    lam, v = k4_reduce(w)
    assert scale(lam, v) == w and v.is_k4_primitive()


def test_realize_triple_examples():
    P1, P2, P3 = realize_triple(4, 6, 5).polygons
    assert (P1, P2, P3) == (seg(2, 0), seg(1, 2), seg(-1, 3))
    P1, P2, P3 = realize_triple(0, 0, 7).polygons
    assert P1.is_point and P2 == seg(1, 0) and P3 == seg(0, 7)
    assert areas(realize_triple(0, 0, 0).polygons) == (0, 0, 0)


@given(st.integers(0, 50), st.integers(0, 50), st.integers(0, 50))
def test_realize_triple_property(a, b, c):
    w = realize_triple(a, b, c)
    assert w.ok and areas(w.polygons) == (a, b, c)


def test_realize_boundary_examples():
    w = realize_boundary((1, 2, 3, 1, 4, 5))
    assert w.polygons == (seg(1, 0), seg(2, 1), seg(3, 2), seg(2, 3))
    w = realize_boundary((0, 0, 0, 1, 1, 1))
    assert w.polygons[0].is_point and w.polygons[1:] == realize_triple(1, 1, 1).polygons
    w = realize_boundary((1, 1, 0, 1, 2, 2))
    assert w.polygons[3] == seg(2, 0) and w.ok
    with pytest.raises(ValueError):
        realize_boundary((1, 1, 1, 1, 1, 1))


segment_vec = st.tuples(st.integers(-6, 6), st.integers(-6, 6))


@given(st.tuples(segment_vec, segment_vec, segment_vec, segment_vec))
def test_segments_give_boundary_points_and_are_recovered(ends):
    # any four segments have a boundary mixed-area vector
    v = areas([LatticePolygon.segment(e) for e in ends])
    assert pluecker_status(v).kind is StatusKind.BOUNDARY
    w = realize_boundary(v)
    assert w.ok and areas(w.polygons) == v


def test_two_ones_examples():
    w = realize_two_ones((1, 1, 1, 3, 3, 2))
    assert two_ones_family((1, 1, 1, 3, 3, 2)) == ("L", 2)
    assert w.polygons[3] == LatticePolygon([(0, 0), (1, 0), (2, 1), (3, 1)])
    w = realize_two_ones((1, 1, 1, 3, 2, 2))
    assert two_ones_family((1, 1, 1, 3, 2, 2)) == ("M", 2)
    assert w.polygons[3] == LatticePolygon([(0, 0), (1, 1), (2, 1)])
    w = realize_two_ones((1, 1, 1, 1, 1, 1))
    assert two_ones_family((1, 1, 1, 1, 1, 1)) == ("M", 1) and w.ok
    with pytest.raises(ValueError):
        realize_two_ones((1, 2, 3, 1, 4, 5))
    with pytest.raises(ValueError):
        realize_two_ones((2, 2, 2, 2, 2, 2))


@given(perms, st.integers(1, 4), st.integers(1, 4), st.integers(0, 14), st.integers(0, 14))
def test_two_ones_after_relabelling(s, v14, v23, x, y):
    v = (1, 1, v14, v23, x, y)
    assume(pluecker_status(v).kind is StatusKind.INTERIOR)
    u = permute(s, v)
    w = realize_two_ones(u)
    assert areas(w.polygons) == u.as_tuple()


def test_certificate_example():
    c = certify_nonrealizable((1, 4, 6, 8, 12, 1))
    assert c.unit_edge == (1, 2)
    assert c.escape == ((4, 6), (8, 12))
    assert [tuple(g.triple) for g in c.gap_exclusions] == [(4, 1, 6), (8, 1, 12)]
    assert [g.bounds.alpha for g in c.gap_exclusions] == [2, 2]
    assert c.check()


def test_no_certificate_cases():
    assert certify_nonrealizable((1, 1, 1, 1, 1, 1)) is None
    assert certify_nonrealizable((2, 3, 4, 5, 6, 7)) is None
    # unit edge but the two nodes look alike: the triangle escape is open
    assert certify_nonrealizable((1, 4, 6, 4, 6, 1)) is None


@given(perms)
def test_certificate_equivariant(s):
    u = permute(s, (1, 4, 6, 8, 12, 1))
    c = certify_nonrealizable(u)
    assert c is not None and c.check()


def test_tampered_certificate_fails():
    from dataclasses import replace
    c = certify_nonrealizable((1, 4, 6, 8, 12, 1))
    assert not replace(c, v=PlueckerVector(1, 4, 6, 8, 12, 2)).check()
    assert not replace(c, escape=((4, 6), (4, 6))).check()


def test_make_witness_rejects_wrong_target():
    with pytest.raises(KernelMismatchError):
        make_witness([seg(1, 0), seg(0, 1), seg(1, 1), seg(2, 1)], (1, 1, 1, 1, 1, 1))


@pytest.mark.parametrize("v,status,method", [
    ((1, 2, 3, 1, 4, 5), RealizabilityStatus.REALIZED, "boundary"),
    ((1, 4, 6, 8, 12, 1), RealizabilityStatus.NON_REALIZABLE, "certificate"),
    ((5, 1, 1, 1, 1, 1), RealizabilityStatus.IMPOSSIBLE, "inequalities"),
    ((1, 1, 1, 3, 3, 2), RealizabilityStatus.REALIZED, "two-ones"),
    ((2, 2, 2, 2, 2, 2), RealizabilityStatus.REALIZED, "two-ones after reduction"),
    ((2, 3, 3, 3, 3, 2), RealizabilityStatus.REALIZED, "search"),
])
def test_classify_examples(v, status, method):
    r = classify_realizability(v)
    assert r.status is status and r.method == method
    if status is RealizabilityStatus.REALIZED:
        assert r.witness.ok and areas(r.witness.polygons) == v


def test_unknown_carries_budget():
    r = classify_realizability((2, 3, 3, 3, 3, 2), budget=1)
    assert r.status is RealizabilityStatus.UNKNOWN
    assert r.search_budget == {"box": [1, 1], "vertexCap": 4}


@given(st.tuples(*[st.integers(0, 4)] * 6), perms)
def test_verdict_equivariant(v, s):
    a = classify_realizability(v, budget=2)
    b = classify_realizability(permute(s, v), budget=2)
    assert a.status is b.status


@given(st.tuples(*[st.integers(1, 3)] * 4), st.tuples(*[st.integers(0, 4)] * 6))
def test_scaling_lifts_witnesses(lam, v):
    r = classify_realizability(v, budget=2)
    assume(r.status is RealizabilityStatus.REALIZED)
    polys = [dilate(P, l) for P, l in zip(r.witness.polygons, lam)]
    assert areas(polys) == scale(lam, v).as_tuple()


def test_permute_polygons_matches_vector_action():
    w = realize_boundary((1, 2, 3, 1, 4, 5))
    for s in itertools.permutations((1, 2, 3, 4)):
        assert areas(permute_polygons(s, w.polygons)) == permute(s, (1, 2, 3, 1, 4, 5)).as_tuple()


def test_family_of_nonrealizable_points():
    for a, b in itertools.product(range(2, 13), repeat=2):
        d = math.gcd(a, b)
        for c in (2, 3):
            for r in range(1, min(a // d, b // d, d)):
                v = (1, a, b, a * c, b * c, r)
                assert pluecker_status(v).kind is StatusKind.INTERIOR
                assert certify_nonrealizable(v) is not None
