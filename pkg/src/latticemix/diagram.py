"""The discrete diagram (width_u(P), V(P, Q), width_u(Q)) and its sections.

All constructions are carried out for u = e2 and transported to another
primitive direction by a unimodular change of coordinates when asked.

Sections with one width equal to zero are handled separately: a polygon of
width 0 along u is a segment (or point) orthogonal to u, so its mixed area
with Q is lattice_length * width_u(Q) and the section is the set of
multiples of the other width.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence

from .exactgeom import (
    LatticePolygon,
    apply_unimodular,
    convex_hull,
    det,
    dot,
    map_direction_to_e2,
)
from .mixedarea import KernelMismatchError, lattice_width, mixed_area, mixed_area_value
from .numth import gcd_ext

E2 = (0, 1)
Pair = tuple[LatticePolygon, LatticePolygon]


class DiagramTriple(NamedTuple):
    w1: int
    v: int
    w2: int


def _mod(a: int, b: int) -> int:
    return a if b == 0 else a % b


@dataclass(frozen=True)
class SectionBounds:
    w1: int
    w2: int
    d: int
    alpha: int
    beta: int
    generators: tuple[int, int]

    def is_gap(self, v: int) -> bool:
        return 0 < v < self.alpha

    def semigroup_decomposition(self, v: int) -> Optional[tuple[int, int]]:
        """(m1, m2) with m1*g1 + m2*g2 = v, smallest m1 first, or None."""
        g1, g2 = self.generators
        if v < 0:
            return None
        if g1 == 0 or g2 == 0:
            g = g1 or g2
            if v % g:
                return None
            return (0, v // g) if g1 == 0 else (v // g, 0)
        for m1 in range(v // g1 + 1):
            rest = v - m1 * g1
            if rest % g2 == 0:
                return (m1, rest // g2)
        return None

    def in_semigroup(self, v: int) -> bool:
        return self.semigroup_decomposition(v) is not None

    def to_json(self) -> dict:
        return {"d": self.d, "alpha": self.alpha, "beta": self.beta}


def section_bounds(w1: int, w2: int) -> SectionBounds:
    if w1 < 0 or w2 < 0 or w1 + w2 == 0:
        raise ValueError("widths must be non-negative and not both zero")
    d = math.gcd(w1, w2)
    return SectionBounds(
        w1, w2, d,
        alpha=min(d, w1 // d, w2 // d),
        beta=min(_mod(w1, w2), _mod(w2, w1)),
        generators=(w1 // d, w2 // d),
    )


# -- witnesses ---------------------------------------------------------------

def verify_witness(P: LatticePolygon, Q: LatticePolygon, w1: int, w2: int, v: int,
                   direction: Sequence[int] = E2) -> None:
    """Re-check widths and mixed area (with both kernels); raise on mismatch."""
    got = DiagramTriple(lattice_width(P, direction), mixed_area(P, Q).value,
                        lattice_width(Q, direction))
    if got != (w1, v, w2):
        raise KernelMismatchError(f"witness {P}, {Q} gives {tuple(got)}, expected {(w1, v, w2)}")


def _transport(pair: Pair, direction: Sequence[int]) -> Pair:
    if tuple(direction) == E2:
        return pair
    F = map_direction_to_e2(direction).inverse()
    # width_{e2}(G P) = width_u(P) for G = map_direction_to_e2(u), so use G^-1
    return apply_unimodular(F, pair[0]), apply_unimodular(F, pair[1])


def _zero_width_pair(w1: int, w2: int, v: int) -> Pair:
    w = w1 or w2
    if v % w:
        raise ValueError(f"({w1}, {v}, {w2}) is not in the diagram: with a zero width "
                         f"the mixed area is a multiple of {w}")
    flat = LatticePolygon.segment((v // w, 0)) if v else LatticePolygon.point()
    tall = LatticePolygon.segment((0, w))
    return (flat, tall) if w1 == 0 else (tall, flat)


def semigroup_witness(w1: int, w2: int, m1: int, m2: int,
                      direction: Sequence[int] = E2) -> Pair:
    """Polygons with widths (w1, w2) and V = m1*w1/d + m2*w2/d.

    Uses the triangles P0 = conv{0, (w1/d, w1), (w1/d, w1 - r2)} and
    Q0 = conv{0, (0, r1), (w2/d, w2)} with m_i = q_i d + r_i, then adds
    q2 and q1 copies of the horizontal unit segment.
    """
    if min(w1, w2, m1, m2) < 0 or w1 + w2 == 0:
        raise ValueError("arguments must be non-negative with w1 + w2 > 0")
    b = section_bounds(w1, w2)
    d = b.d
    g1, g2 = b.generators
    v = m1 * g1 + m2 * g2
    if w1 == 0 or w2 == 0:
        pair = _zero_width_pair(w1, w2, v)
    else:
        q1, r1 = divmod(m1, d)
        q2, r2 = divmod(m2, d)
        unit = LatticePolygon.segment((1, 0))
        P0 = LatticePolygon([(0, 0), (g1, w1), (g1, w1 - r2)])
        Q0 = LatticePolygon([(0, 0), (0, r1), (g2, w2)])
        pair = (P0 + q2 * unit, Q0 + q1 * unit)
    pair = _transport(pair, direction)
    verify_witness(*pair, w1, w2, v, direction)
    return pair


def saturation_witness(w1: int, w2: int, v: int, direction: Sequence[int] = E2) -> Pair:
    """Polygons with widths (w1, w2) and mixed area v, for v >= beta.

    P is the primitive segment conv{0, (1, min(w1, w2))}; Q is a triangle
    (v < min width) or a triangle plus copies of the unit segment.
    """
    if min(w1, w2, v) < 0 or w1 + w2 == 0:
        raise ValueError("arguments must be non-negative with w1 + w2 > 0")
    if w1 == 0 or w2 == 0:
        pair = _transport(_zero_width_pair(w1, w2, v), direction)
        verify_witness(*pair, w1, w2, v, direction)
        return pair
    beta = section_bounds(w1, w2).beta
    if v < beta:
        raise ValueError(f"v = {v} is below the saturation bound {beta}")
    if w1 > w2:
        Q, P = saturation_witness(w2, w1, v)
        pair = _transport((P, Q), direction)
        verify_witness(*pair, w1, w2, v, direction)
        return pair
    q2, r2 = divmod(w2, w1)
    P = LatticePolygon.segment((1, w1))
    if v < w1:
        Q = LatticePolygon([(0, 0), (q2, w2), (q2, w2 - v)])
    else:
        q, r = divmod(v, w1)
        Q = LatticePolygon([(0, 0), (q2, w2), (q2 + 1, w2 - r)]) + (q - 1) * LatticePolygon.segment((1, 0))
    pair = _transport((P, Q), direction)
    verify_witness(*pair, w1, w2, v, direction)
    return pair


# -- exhaustive structured search ---------------------------------------------

def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _points_in_window(height: int, top_x: int, other_top_x: int, other_height: int,
                      g_other: int, lo: int, hi: int, bx: int) -> list[tuple[int, int]]:
    """Lattice points (x, y), 0 <= y <= height, with lo <= <(x, y), u> <= hi.

    Here u = (-other_height, other_top_x) / g_other is the primitive normal of
    the other polygon's spanning segment.  Points that would break the
    normalization (origin = lowest-leftmost vertex, (top_x, height) =
    highest-leftmost vertex) are skipped.
    """
    out = []
    for y in range(height + 1):
        base = other_top_x * y
        x_lo = _ceil_div(base - g_other * hi, other_height)
        x_hi = (base - g_other * lo) // other_height
        for x in range(max(x_lo, -bx), min(x_hi, bx) + 1):
            if y == 0 and x <= 0:
                continue
            if y == height and x <= top_x:
                continue
            out.append((x, y))
    return out


def _candidate_polygons(anchor_top: tuple[int, int], points: list, vertex_cap: int) -> list[LatticePolygon]:
    seen = set()
    out = []
    for k in range(0, max(vertex_cap - 2, 0) + 1):
        for extra in itertools.combinations(points, k):
            poly = LatticePolygon([(0, 0), anchor_top, *extra])
            if len(poly) > vertex_cap or poly.vertices in seen:
                continue
            seen.add(poly.vertices)
            out.append(poly)
    return out


def search_pair(w1: int, w2: int, v: int, box: Optional[int] = None,
                vertex_cap: int = 4) -> Optional[Pair]:
    """Search for P, Q with e2-widths (w1, w2), V(P, Q) = v and at most
    ``vertex_cap`` vertices each.

    Pairs are enumerated up to independent translations and a common shear
    (x, y) -> (x + k y, y), both of which preserve widths and mixed area.
    With P normalized to have lowest-leftmost vertex 0 and highest-leftmost
    vertex (xP, w1), 0 <= xP < w1, and Q likewise with top (xQ, w2):

    * V >= |det((xP, w1), (xQ, w2))| bounds xQ;
    * V >= gcd(xQ, w2) * width of P orthogonal to Q's spanning segment, and
      symmetrically, which confines all vertices to thin strips.

    Inside these limits the enumeration is exhaustive, so ``None`` means no
    such pair exists with vertex x-coordinates in [-box, box].  The first hit
    in enumeration order is returned, which makes the answer deterministic.
    """
    if w1 < 1 or w2 < 1:
        raise ValueError("search_pair needs positive widths")
    bx = v + w1 * w2 if box is None else box
    for xP in range(w1):
        gP = math.gcd(xP, w1)
        xq_lo = _ceil_div(xP * w2 - v, w1)
        xq_hi = (xP * w2 + v) // w1
        for xQ in range(xq_lo, xq_hi + 1):
            gQ = math.gcd(xQ, w2)
            D = xP * w2 - xQ * w1
            WP, WQ = v // gQ, v // gP
            tp = -D // gQ  # <(xP, w1), uQ>
            tq = D // gP   # <(xQ, w2), uP>
            if abs(tp) > WP or abs(tq) > WQ:
                continue
            p_pts = _points_in_window(w1, xP, xQ, w2, gQ, max(0, tp) - WP, min(0, tp) + WP, bx)
            q_pts = _points_in_window(w2, xQ, xP, w1, gP, max(0, tq) - WQ, min(0, tq) + WQ, bx)
            Ps = _candidate_polygons((xP, w1), p_pts, vertex_cap)
            Qs = _candidate_polygons((xQ, w2), q_pts, vertex_cap)
            for P in Ps:
                for Q in Qs:
                    if mixed_area_value(P, Q) == v:
                        verify_witness(P, Q, w1, w2, v)
                        return P, Q
    return None


def brute_force_section(w1: int, w2: int, vmax: int, box: Optional[int] = None,
                        vertex_cap: int = 4) -> dict[int, Optional[Pair]]:
    """For each 0 <= v <= vmax, a verified witness pair or None.

    ``None`` only says nothing was found within the bounds; it is not a
    proof that v is missing from the section.
    """
    if w1 < 1 or w2 < 1 or vmax < 0 or vertex_cap < 2:
        raise ValueError("brute_force_section needs w1, w2 >= 1, vmax >= 0, vertex_cap >= 2")
    bx = vmax + w1 * w2 if box is None else box
    return {v: search_pair(w1, w2, v, bx, vertex_cap) for v in range(vmax + 1)}


# -- classification -------------------------------------------------------------

class SectionStatus(enum.Enum):
    EXCLUDED_BY_GAP = "ExcludedByGap"
    EXCLUDED_BY_ZERO_WIDTH = "ExcludedByZeroWidth"
    REALIZED_SEMIGROUP = "RealizedSemigroup"
    REALIZED_SATURATION = "RealizedSaturation"
    REALIZED_SEARCH = "RealizedSearch"
    UNKNOWN_WITHIN_BOUNDS = "UnknownWithinBounds"

    @property
    def realized(self) -> bool:
        return self.value.startswith("Realized")

    @property
    def excluded(self) -> bool:
        return self.value.startswith("Excluded")


@dataclass(frozen=True)
class SectionVerdict:
    triple: DiagramTriple
    status: SectionStatus
    witness: Optional[Pair] = None
    bounds: Optional[SectionBounds] = None
    search: Optional[dict] = field(default=None, compare=False)


def classify_value(w1: int, w2: int, v: int, box: Optional[int] = None,
                   vertex_cap: int = 4) -> SectionVerdict:
    """Decide whether v lies in the section at widths (w1, w2), with a witness if so."""
    if min(w1, w2, v) < 0 or w1 + w2 == 0:
        raise ValueError("arguments must be non-negative with w1 + w2 > 0")
    triple = DiagramTriple(w1, v, w2)
    b = section_bounds(w1, w2)
    if w1 == 0 or w2 == 0:
        try:
            pair = semigroup_witness(w1, w2, *b.semigroup_decomposition(v))
        except (TypeError, ValueError):
            return SectionVerdict(triple, SectionStatus.EXCLUDED_BY_ZERO_WIDTH, bounds=b)
        return SectionVerdict(triple, SectionStatus.REALIZED_SEMIGROUP, pair, b)
    if b.is_gap(v):
        return SectionVerdict(triple, SectionStatus.EXCLUDED_BY_GAP, bounds=b)
    m = b.semigroup_decomposition(v)
    if m is not None:
        return SectionVerdict(triple, SectionStatus.REALIZED_SEMIGROUP, semigroup_witness(w1, w2, *m), b)
    if v >= b.beta:
        return SectionVerdict(triple, SectionStatus.REALIZED_SATURATION, saturation_witness(w1, w2, v), b)
    bx = v + w1 * w2 if box is None else box
    params = {"box": bx, "vertexCap": vertex_cap}
    pair = search_pair(w1, w2, v, bx, vertex_cap)
    if pair is not None:
        return SectionVerdict(triple, SectionStatus.REALIZED_SEARCH, pair, b, params)
    return SectionVerdict(triple, SectionStatus.UNKNOWN_WITHIN_BOUNDS, None, b, params)


# -- width-level polygons -------------------------------------------------------

Rational = tuple[Fraction, Fraction]


def _frac_point(p) -> Rational:
    return (Fraction(p[0]), Fraction(p[1]))


@dataclass(frozen=True)
class BoundaryPiece:
    """origin + t * direction for t in [t_min, t_max]; None marks an infinite end."""

    origin: Rational
    direction: Rational
    t_min: Optional[Fraction]
    t_max: Optional[Fraction]

    def at(self, t: Fraction) -> Rational:
        return (self.origin[0] + t * self.direction[0], self.origin[1] + t * self.direction[1])

    def contains_param(self, t: Fraction) -> bool:
        return (self.t_min is None or t >= self.t_min) and (self.t_max is None or t <= self.t_max)


@dataclass(frozen=True)
class WidthLevelPolygon:
    """R = {u : |<x - x', u>| <= w for all vertices x, x' of P}.

    Integer points u of R are the directions with width_u(P) <= w, and
    primitive points on its boundary are those with width exactly w.
    """

    source: LatticePolygon
    w: int
    directions: tuple[tuple[int, int], ...]

    def width(self, u: Sequence[int]) -> Fraction:
        return max((abs(dot(d, u)) for d in self.directions), default=Fraction(0))

    def contains(self, u) -> bool:
        return self.width(u) <= self.w

    def on_boundary(self, u) -> bool:
        return self.width(u) == self.w

    def is_interior(self, u) -> bool:
        return self.width(u) < self.w

    @property
    def bounded(self) -> bool:
        return any(det(self.directions[0], d) != 0 for d in self.directions[1:])

    def vertices(self) -> list[Rational]:
        """Vertices of R, counterclockwise (bounded case only)."""
        if not self.bounded:
            raise ValueError("width-level set of a segment is an unbounded strip")
        halfplanes = [(d, s) for d in self.directions for s in (1, -1)]
        pts = set()
        for (d1, s1), (d2, s2) in itertools.combinations(halfplanes, 2):
            n1 = (s1 * d1[0], s1 * d1[1])
            n2 = (s2 * d2[0], s2 * d2[1])
            D = det(n1, n2)
            if D == 0:
                continue
            u = (Fraction(self.w * n2[1] - self.w * n1[1], D), Fraction(n1[0] * self.w - n2[0] * self.w, D))
            if self.contains(u):
                pts.add(u)
        return convex_hull(pts)

    def irredundant_constraints(self) -> list[tuple[int, int]]:
        """Directions d (up to sign) whose constraint |<d, u>| <= w supports an edge of R."""
        if not self.bounded:
            return list(self.directions)
        vs = self.vertices()
        keep = []
        for d in self.directions:
            if sum(1 for v in vs if dot(d, v) == self.w) >= 2:
                keep.append(d)
        return keep

    def boundary_pieces(self) -> list[BoundaryPiece]:
        if self.bounded:
            vs = self.vertices()
            n = len(vs)
            return [BoundaryPiece(vs[i], (vs[(i + 1) % n][0] - vs[i][0], vs[(i + 1) % n][1] - vs[i][1]),
                                  Fraction(0), Fraction(1)) for i in range(n)]
        d = self.directions[0]
        dd = dot(d, d)
        along = (Fraction(-d[1]), Fraction(d[0]))
        return [BoundaryPiece((Fraction(s * self.w * d[0], dd), Fraction(s * self.w * d[1], dd)),
                              along, None, None) for s in (1, -1)]


def width_level_polygon(P: LatticePolygon, w: int) -> WidthLevelPolygon:
    if P.is_point:
        raise ValueError("a point has width 0 in every direction")
    if w <= 0:
        raise ValueError("target width must be positive")
    dirs = []
    for a, b in itertools.combinations(P.vertices, 2):
        d = (b[0] - a[0], b[1] - a[1])
        if d < (0, 0):
            d = (-d[0], -d[1])
        if d not in dirs:
            dirs.append(d)
    return WidthLevelPolygon(P, w, tuple(sorted(dirs)))


@dataclass(frozen=True)
class BoundaryIntersection:
    points: tuple[Rational, ...]
    segments: tuple[tuple[Rational, Rational], ...]
    primitive: tuple[tuple[int, int], ...]


def _intersect(a: BoundaryPiece, b: BoundaryPiece):
    """None, ('point', p) or ('segment', p, q)."""
    D = det(a.direction, b.direction)
    diff = (b.origin[0] - a.origin[0], b.origin[1] - a.origin[1])
    if D != 0:
        t = Fraction(det(diff, b.direction)) / D
        s = Fraction(det(diff, a.direction)) / D
        if a.contains_param(t) and b.contains_param(s):
            return ("point", a.at(t))
        return None
    if det(diff, a.direction) != 0:
        return None
    # collinear: express b's extent in a's parameter
    ee = dot(a.direction, a.direction)
    t0 = Fraction(dot(diff, a.direction)) / ee
    k = Fraction(dot(b.direction, a.direction)) / ee
    ends = []
    for s in (b.t_min, b.t_max):
        ends.append(None if s is None else t0 + k * s)
    if k < 0:
        ends.reverse()
    lo_b, hi_b = ends
    lo = a.t_min if lo_b is None else (lo_b if a.t_min is None else max(a.t_min, lo_b))
    hi = a.t_max if hi_b is None else (hi_b if a.t_max is None else min(a.t_max, hi_b))
    if lo is None or hi is None:
        raise ValueError("boundaries share an unbounded piece: infinitely many common points")
    if lo > hi:
        return None
    if lo == hi:
        return ("point", a.at(lo))
    return ("segment", a.at(lo), a.at(hi))


def _lattice_points_on_segment(p: Rational, q: Rational) -> list[tuple[int, int]]:
    e = (q[0] - p[0], q[1] - p[1])
    den = math.lcm(e[0].denominator, e[1].denominator)
    ex, ey = int(e[0] * den), int(e[1] * den)
    g = math.gcd(ex, ey)
    ex, ey = ex // g, ey // g
    # integer points z on the line satisfy -ey*zx + ex*zy = c
    c = -ey * p[0] + ex * p[1]
    if c.denominator != 1:
        return []
    r = gcd_ext(-ey, ex)
    z0 = (r.a * int(c), r.b * int(c))
    # z = z0 + k*(ex, ey); keep k with z between p and q
    ee = ex * ex + ey * ey
    k_p = Fraction(dot((p[0] - z0[0], p[1] - z0[1]), (ex, ey)), ee)
    k_q = Fraction(dot((q[0] - z0[0], q[1] - z0[1]), (ex, ey)), ee)
    lo, hi = min(k_p, k_q), max(k_p, k_q)
    return [(z0[0] + k * ex, z0[1] + k * ey) for k in range(math.ceil(lo), math.floor(hi) + 1)]


def boundary_intersection(RP: WidthLevelPolygon, RQ: WidthLevelPolygon) -> BoundaryIntersection:
    """Exact intersection of the two boundaries plus the primitive lattice points on it."""
    points, segments = set(), set()
    for a in RP.boundary_pieces():
        for b in RQ.boundary_pieces():
            hit = _intersect(a, b)
            if hit is None:
                continue
            if hit[0] == "point":
                points.add(hit[1])
            else:
                segments.add(tuple(sorted(hit[1:])))
    # drop isolated points that already lie on an overlap segment
    lone = []
    for p in sorted(points):
        if not any(det((p[0] - s[0][0], p[1] - s[0][1]), (s[1][0] - s[0][0], s[1][1] - s[0][1])) == 0
                   and min(s[0], s[1]) <= p <= max(s[0], s[1]) for s in segments):
            lone.append(p)
    lattice = set()
    for p in lone:
        if p[0].denominator == 1 and p[1].denominator == 1:
            lattice.add((int(p[0]), int(p[1])))
    for s in segments:
        lattice.update(_lattice_points_on_segment(*s))
    primitive = sorted(z for z in lattice if math.gcd(*z) == 1)
    return BoundaryIntersection(tuple(lone), tuple(sorted(segments)), tuple(primitive))


def common_boundary_primitive_points(RP: WidthLevelPolygon, RQ: WidthLevelPolygon) -> list[tuple[int, int]]:
    return list(boundary_intersection(RP, RQ).primitive)
