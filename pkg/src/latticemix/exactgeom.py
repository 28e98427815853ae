"""Exact integer geometry for planar lattice polygons.

Everything here works on Python ints, so coordinates have unbounded
magnitude and no tolerance is ever involved.  A polygon may be degenerate:
a single point or a segment is a perfectly good ``LatticePolygon``.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Iterable, NamedTuple, Sequence

from .numth import gcd_ext

Point = tuple[int, int]


def cross(o, a, b):
    """z-component of (a - o) x (b - o); works for ints and Fractions."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def det(u, v):
    return u[0] * v[1] - u[1] * v[0]


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1]


def convex_hull(points: Iterable) -> list:
    """Strictly convex hull, counterclockwise from the lexicographic minimum.

    Andrew's monotone chain.  Collinear points are dropped, so a set of
    collinear points gives its two extreme points and a single repeated
    point gives a one-element list.  Coordinates may be ints or Fractions.
    """
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _as_point(p) -> Point:
    x, y = p
    try:
        return (operator.index(x), operator.index(y))
    except TypeError:
        raise TypeError(f"lattice coordinates must be integers, got {p!r}") from None


@dataclass(frozen=True)
class LatticePolygon:
    """Convex hull of finitely many lattice points, in canonical form.

    The stored ``vertices`` run counterclockwise without collinear triples
    and start at the lexicographically smallest vertex, so two polygons are
    equal exactly when their vertex tuples are.  Any iterable of integer
    points is accepted and canonicalized.
    """

    vertices: tuple[Point, ...]

    def __post_init__(self):
        pts = [_as_point(p) for p in self.vertices]
        if not pts:
            raise ValueError("a lattice polygon needs at least one point")
        object.__setattr__(self, "vertices", tuple(convex_hull(pts)))

    @classmethod
    def point(cls, x: int = 0, y: int = 0) -> LatticePolygon:
        return cls([(x, y)])

    @classmethod
    def segment(cls, a: Sequence[int], b: Sequence[int] = (0, 0)) -> LatticePolygon:
        return cls([tuple(a), tuple(b)])

    @classmethod
    def standard_simplex(cls) -> LatticePolygon:
        return cls([(0, 0), (1, 0), (0, 1)])

    @classmethod
    def unit_square(cls) -> LatticePolygon:
        return cls([(0, 0), (1, 0), (1, 1), (0, 1)])

    @classmethod
    def rectangle(cls, a: int, b: int) -> LatticePolygon:
        return cls([(0, 0), (a, 0), (a, b), (0, b)])

    @property
    def dim(self) -> int:
        return min(len(self.vertices) - 1, 2)

    @property
    def is_point(self) -> bool:
        return len(self.vertices) == 1

    @property
    def is_segment(self) -> bool:
        return len(self.vertices) == 2

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __add__(self, other: LatticePolygon) -> LatticePolygon:
        return minkowski_sum(self, other)

    def __rmul__(self, k: int) -> LatticePolygon:
        return dilate(self, k)

    def translate(self, t: Sequence[int]) -> LatticePolygon:
        return LatticePolygon([(x + t[0], y + t[1]) for x, y in self.vertices])

    def normalized(self) -> LatticePolygon:
        """Lattice translate whose first (lexicographically minimal) vertex is 0."""
        x0, y0 = self.vertices[0]
        return self.translate((-x0, -y0))

    def edges(self) -> list[Point]:
        """Edge vectors in counterclockwise order.

        A segment contributes both orientations, a point has no edges.
        """
        vs = self.vertices
        if len(vs) == 1:
            return []
        return [(vs[(i + 1) % len(vs)][0] - vs[i][0], vs[(i + 1) % len(vs)][1] - vs[i][1])
                for i in range(len(vs))]

    def __repr__(self):
        return f"LatticePolygon({list(self.vertices)})"


def canonicalize(points: Iterable[Sequence[int]]) -> LatticePolygon:
    return LatticePolygon(list(points))


def dilate(P: LatticePolygon, k: int) -> LatticePolygon:
    if k < 0:
        raise ValueError("dilation factor must be non-negative")
    if k == 0:
        return LatticePolygon.point(0, 0)
    return LatticePolygon([(k * x, k * y) for x, y in P.vertices])


def _half(e: Point) -> int:
    # 0 for directions in (-90deg, 90deg], 1 for (90deg, 270deg]
    return 0 if e[0] > 0 or (e[0] == 0 and e[1] > 0) else 1


def _angle_cmp(a: Point, b: Point) -> int:
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return ha - hb
    c = det(a, b)
    return -1 if c > 0 else (1 if c < 0 else 0)


def minkowski_sum_hull(P: LatticePolygon, Q: LatticePolygon) -> LatticePolygon:
    """Minkowski sum as the hull of all pairwise vertex sums."""
    return LatticePolygon([(p[0] + q[0], p[1] + q[1]) for p in P.vertices for q in Q.vertices])


def minkowski_sum(P: LatticePolygon, Q: LatticePolygon) -> LatticePolygon:
    """Minkowski sum, by merging edge sequences when both operands are 2-dimensional."""
    if P.dim < 2 or Q.dim < 2:
        return minkowski_sum_hull(P, Q)
    start = (P.vertices[0][0] + Q.vertices[0][0], P.vertices[0][1] + Q.vertices[0][1])
    edges = sorted(P.edges() + Q.edges(), key=cmp_to_key(_angle_cmp))
    pts = [start]
    x, y = start
    for ex, ey in edges[:-1]:
        x += ex
        y += ey
        pts.append((x, y))
    return LatticePolygon(pts)


def normalized_area(P: LatticePolygon) -> int:
    """Twice the Euclidean area (the shoelace sum)."""
    vs = P.vertices
    if len(vs) < 3:
        return 0
    n = len(vs)
    return sum(vs[i][0] * vs[(i + 1) % n][1] - vs[(i + 1) % n][0] * vs[i][1] for i in range(n))


def lattice_length(S: LatticePolygon) -> int:
    """Number of lattice points on a segment minus one (0 for a point)."""
    if S.dim == 2:
        raise ValueError("lattice_length is defined for points and segments only")
    if S.is_point:
        return 0
    (x0, y0), (x1, y1) = S.vertices
    return math.gcd(x1 - x0, y1 - y0)


def support_value(P: LatticePolygon, u: Sequence[int]) -> int:
    """h_P(u) = max of <x, u> over P."""
    return max(x * u[0] + y * u[1] for x, y in P.vertices)


def is_primitive(u: Sequence[int]) -> bool:
    return math.gcd(u[0], u[1]) == 1


class NormalFan2D(NamedTuple):
    """Primitive outer normals with the lattice lengths of their sides, counterclockwise."""

    normals: tuple[Point, ...]
    lengths: tuple[int, ...]

    def normalized(self) -> list[Point]:
        return [(k * n[0], k * n[1]) for n, k in zip(self.normals, self.lengths)]

    def edge_vectors(self) -> list[Point]:
        # rotating an outer normal by +90deg gives the CCW edge direction
        return [(-k * n[1], k * n[0]) for n, k in zip(self.normals, self.lengths)]


def normalized_normals(Q: LatticePolygon) -> list[Point]:
    """Lattice length times primitive outer normal, one entry per side.

    A segment is treated as two oppositely oriented sides; a point has none.
    """
    return [(ey, -ex) for ex, ey in Q.edges()]


def edge_normals(Q: LatticePolygon) -> NormalFan2D:
    if Q.dim < 2:
        raise ValueError("edge_normals needs a 2-dimensional polygon")
    normals, lengths = [], []
    for nx, ny in normalized_normals(Q):
        g = math.gcd(nx, ny)
        normals.append((nx // g, ny // g))
        lengths.append(g)
    return NormalFan2D(tuple(normals), tuple(lengths))


@dataclass(frozen=True)
class UnimodularMap:
    """Affine map x -> A x + t with integer A, |det A| = 1 (points are columns)."""

    matrix: tuple[tuple[int, int], tuple[int, int]] = ((1, 0), (0, 1))
    translation: Point = (0, 0)

    def __post_init__(self):
        (a, b), (c, d) = self.matrix
        object.__setattr__(self, "matrix", ((int(a), int(b)), (int(c), int(d))))
        object.__setattr__(self, "translation", _as_point(self.translation))
        if abs(a * d - b * c) != 1:
            raise ValueError(f"matrix {self.matrix} is not unimodular")

    @property
    def determinant(self) -> int:
        (a, b), (c, d) = self.matrix
        return a * d - b * c

    def __call__(self, p: Sequence[int]) -> Point:
        (a, b), (c, d) = self.matrix
        return (a * p[0] + b * p[1] + self.translation[0],
                c * p[0] + d * p[1] + self.translation[1])

    def inverse(self) -> UnimodularMap:
        (a, b), (c, d) = self.matrix
        D = self.determinant
        inv = ((d * D, -b * D), (-c * D, a * D))
        tx, ty = self.translation
        return UnimodularMap(inv, (-(inv[0][0] * tx + inv[0][1] * ty),
                                   -(inv[1][0] * tx + inv[1][1] * ty)))

    def compose(self, other: UnimodularMap) -> UnimodularMap:
        """self after other."""
        (a, b), (c, d) = self.matrix
        (e, f), (g, h) = other.matrix
        m = ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))
        return UnimodularMap(m, self(other.translation))

    def transpose_apply(self, u: Sequence[int]) -> Point:
        """A^T u: the direction whose width on P equals the width of F(P) along u."""
        (a, b), (c, d) = self.matrix
        return (a * u[0] + c * u[1], b * u[0] + d * u[1])


def apply_unimodular(F: UnimodularMap, P: LatticePolygon) -> LatticePolygon:
    return LatticePolygon([F(p) for p in P.vertices])


def map_direction_to_e2(u: Sequence[int]) -> UnimodularMap:
    """A linear unimodular F with width_{e2}(F(P)) = width_u(P) for every P.

    Since <F x, e2> = <x, A^T e2>, it suffices to make the second row of A
    equal to u; the first row comes from a Bezout identity.
    """
    u1, u2 = u
    if not is_primitive(u):
        raise ValueError(f"direction {tuple(u)} is not primitive")
    r = gcd_ext(u1, u2)
    # rows (-b, a) and (u1, u2): det = -b*u2 - a*u1 = -(a*u1 + b*u2) = -1
    return UnimodularMap(((-r.b, r.a), (u1, u2)))
