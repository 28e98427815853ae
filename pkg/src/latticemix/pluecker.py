"""Pairwise mixed areas of four lattice polygons and the discrete Plücker set.

A candidate is a 6-tuple ``v = (v12, v13, v14, v23, v24, v34)`` of
non-negative integers, read as edge weights of the complete graph on the
nodes 1..4.  Nodes are labelled 1..4 throughout the public API, and a
permutation is written as the tuple of images ``(s(1), s(2), s(3), s(4))``.

The three opposite-edge products are ``p1 = v12*v34``, ``p2 = v13*v24`` and
``p3 = v14*v23``.  Mixed areas of four polygons always satisfy the three
triangle-type inequalities between them.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .diagram import DiagramTriple, SectionBounds, section_bounds
from .exactgeom import LatticePolygon, dilate
from .mixedarea import KernelMismatchError, mixed_area
from .numth import CongruenceSystem, crt_pair, gcd_ext, mod_inverse

PAIRS = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))
IDENTITY = (1, 2, 3, 4)


@dataclass(frozen=True)
class PlueckerVector:
    v12: int
    v13: int
    v14: int
    v23: int
    v24: int
    v34: int

    def __post_init__(self):
        for name, x in zip(("v12", "v13", "v14", "v23", "v24", "v34"), self.as_tuple()):
            if not isinstance(x, int) or isinstance(x, bool):
                raise TypeError(f"{name} must be an integer, got {x!r}")
            if x < 0:
                raise ValueError(f"{name} must be non-negative, got {x}")

    @classmethod
    def of(cls, values: Sequence[int]) -> PlueckerVector:
        values = [int(x) if not isinstance(x, int) and float(x).is_integer() else x for x in values]
        if len(values) != 6:
            raise ValueError(f"need six coordinates, got {len(values)}")
        return cls(*values)

    def as_tuple(self) -> tuple[int, ...]:
        return (self.v12, self.v13, self.v14, self.v23, self.v24, self.v34)

    def __iter__(self) -> Iterator[int]:
        return iter(self.as_tuple())

    def __getitem__(self, pair: tuple[int, int]) -> int:
        i, j = sorted(pair)
        return self.as_tuple()[PAIRS.index((i, j))]

    def products(self) -> tuple[int, int, int]:
        return (self.v12 * self.v34, self.v13 * self.v24, self.v14 * self.v23)

    def node_gcd(self, i: int) -> int:
        return math.gcd(*(self[i, j] for j in range(1, 5) if j != i))

    def is_k4_primitive(self) -> bool:
        return all(self.node_gcd(i) == 1 for i in range(1, 5))

    def __repr__(self):
        return f"PlueckerVector{self.as_tuple()}"


def _vec(v) -> PlueckerVector:
    return v if isinstance(v, PlueckerVector) else PlueckerVector.of(v)


class StatusKind(enum.Enum):
    VIOLATES = "ViolatesInequalities"
    BOUNDARY = "Boundary"
    INTERIOR = "Interior"


@dataclass(frozen=True)
class PlueckerStatus:
    kind: StatusKind
    products: tuple[int, int, int]
    equalities: tuple[int, ...] = ()
    """Indices k in 1..3 with p_k equal to the sum of the other two."""


def pluecker_status(v) -> PlueckerStatus:
    v = _vec(v)
    p = v.products()
    total = sum(p)
    if any(2 * pk > total for pk in p):
        return PlueckerStatus(StatusKind.VIOLATES, p)
    eq = tuple(k + 1 for k, pk in enumerate(p) if 2 * pk == total)
    return PlueckerStatus(StatusKind.BOUNDARY if eq else StatusKind.INTERIOR, p, eq)


# -- group actions -----------------------------------------------------------------

def _check_perm(sigma: Sequence[int]) -> tuple[int, ...]:
    sigma = tuple(sigma)
    if sorted(sigma) != [1, 2, 3, 4]:
        raise ValueError(f"{sigma} is not a permutation of 1..4")
    return sigma


def permute(sigma: Sequence[int], v) -> PlueckerVector:
    """(sigma . v)_ij = v_{sigma(i) sigma(j)}."""
    sigma, v = _check_perm(sigma), _vec(v)
    return PlueckerVector(*(v[sigma[i - 1], sigma[j - 1]] for i, j in PAIRS))


def inverse_perm(sigma: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * 4
    for i, s in enumerate(sigma, start=1):
        inv[s - 1] = i
    return tuple(inv)


def permute_polygons(sigma: Sequence[int], polygons: Sequence[LatticePolygon]) -> tuple[LatticePolygon, ...]:
    """Polygons realizing sigma . v, given polygons realizing v."""
    return tuple(polygons[s - 1] for s in sigma)


@dataclass(frozen=True)
class ScalingVector:
    lambdas: tuple[int, int, int, int]

    def __post_init__(self):
        lam = tuple(self.lambdas)
        if len(lam) != 4 or any(not isinstance(x, int) or x <= 0 for x in lam):
            raise ValueError(f"scaling factors must be four positive integers, got {lam}")
        object.__setattr__(self, "lambdas", lam)

    def __iter__(self):
        return iter(self.lambdas)


def scale(lam, v) -> PlueckerVector:
    lam = lam if isinstance(lam, ScalingVector) else ScalingVector(tuple(lam))
    v = _vec(v)
    l = lam.lambdas
    return PlueckerVector(*(l[i - 1] * l[j - 1] * v[i, j] for i, j in PAIRS))


def k4_reduce(w) -> tuple[ScalingVector, PlueckerVector]:
    """Write w = lambda . v with v K4-primitive (gcd cascade over the nodes)."""
    w = _vec(w)
    for i in range(1, 5):
        if w.node_gcd(i) == 0:
            raise ValueError(f"node {i} of {w.as_tuple()} has three zero coordinates")
    l1 = math.gcd(w.v12, w.v13, w.v14)
    l2 = math.gcd(w.v12 // l1, w.v23, w.v24)
    l3 = math.gcd(w.v13 // l1, w.v23 // l2, w.v34)
    l4 = math.gcd(w.v14 // l1, w.v24 // l2, w.v34 // l3)
    lam = (l1, l2, l3, l4)
    vals = []
    for i, j in PAIRS:
        q, r = divmod(w[i, j], lam[i - 1] * lam[j - 1])
        assert r == 0
        vals.append(q)
    v = PlueckerVector(*vals)
    assert scale(lam, v) == w and v.is_k4_primitive()
    return ScalingVector(lam), v


# -- witnesses --------------------------------------------------------------------

@dataclass(frozen=True)
class RealizationWitness:
    """Polygons P1..Pn together with the values they were built to realize."""

    polygons: tuple[LatticePolygon, ...]
    target: tuple[int, ...]
    verified: tuple[bool, ...] = field(default=())

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return list(itertools.combinations(range(1, len(self.polygons) + 1), 2))

    def mixed_areas(self) -> tuple[int, ...]:
        return tuple(mixed_area(self.polygons[i - 1], self.polygons[j - 1]).value for i, j in self.pairs)

    @property
    def ok(self) -> bool:
        return len(self.verified) == len(self.target) and all(self.verified)


def make_witness(polygons: Sequence[LatticePolygon], target: Sequence[int]) -> RealizationWitness:
    """Build a witness, re-checking every mixed area with both kernels."""
    w = RealizationWitness(tuple(polygons), tuple(target))
    got = w.mixed_areas()
    flags = tuple(g == t for g, t in zip(got, w.target))
    if not all(flags):
        raise KernelMismatchError(f"polygons {w.polygons} give {got}, expected {w.target}")
    return RealizationWitness(w.polygons, w.target, flags)


def _seg(x: int, y: int) -> LatticePolygon:
    return LatticePolygon.segment((x, y))


def _bezout_pair(p: int, q: int, rhs: int) -> tuple[int, int]:
    """Integers (a, b) with a*p - b*q = rhs, gcd(p, q) = 1, smallest |a| (ties a >= 0)."""
    r = gcd_ext(p, q)
    a, b = r.a * rhs, -r.b * rhs
    if q:
        k = a // q
        a, b = a - k * q, b - k * p
        if 2 * a > q:
            a, b = a - q, b - p
    elif p:
        # a is forced; b is free, pick 0
        b = 0
    return a, b


def realize_triple(v12: int, v13: int, v23: int) -> RealizationWitness:
    """Three lattice segments (or a point and two segments) with the given mixed areas."""
    if min(v12, v13, v23) < 0:
        raise ValueError("mixed areas must be non-negative")
    if v12 == v13 == 0:
        polys = (LatticePolygon.point(), _seg(1, 0), _seg(0, v23) if v23 else LatticePolygon.point())
        return make_witness(polys, (v12, v13, v23))
    d = math.gcd(v12, v13)
    a, b = _bezout_pair(v13 // d, v12 // d, v23)
    polys = (_seg(d, 0), _seg(a, v12 // d), _seg(b, v13 // d))
    return make_witness(polys, (v12, v13, v23))


def _normal_form_perm(v: PlueckerVector) -> tuple[int, ...]:
    for sigma in itertools.permutations(IDENTITY):
        u = permute(sigma, v)
        p1, p2, p3 = u.products()
        if p2 == p1 + p3:
            return sigma
    raise ValueError(f"{v.as_tuple()} is not a boundary point")


def _realize_reduced_boundary(u: PlueckerVector) -> tuple[LatticePolygon, ...]:
    """Four segments for a K4-primitive u with v13 v24 = v14 v23 + v12 v34."""
    v12, v13, v14, v23, v24, v34 = u.as_tuple()
    if v14 == 0:
        # v13 v24 = v12 v34 with gcd(v12, v13) = 1
        c = v24 // v12 if v12 else v34 // v13
        a, b = _bezout_pair(v13, v12, v23)
        return (_seg(1, 0), _seg(a, v12), _seg(b, v13), _seg(c, 0) if c else LatticePolygon.point())
    congruences = []
    for v1i, vi4 in ((v12, v24), (v13, v34)):
        g = math.gcd(v1i, v14)
        m, u1, (ui4, rem) = v14 // g, v1i // g, divmod(vi4, g)
        if rem:
            raise KernelMismatchError(f"{vi4} not divisible by gcd({v1i}, {v14}) = {g}")
        congruences.append(((-mod_inverse(u1 % m, m) * ui4) % m, m))
    (r2, m2), (r3, m3) = congruences
    c = crt_pair(CongruenceSystem(r2, m2, r3, m3))
    a, ra = divmod(c * v12 + v24, v14)
    b, rb = divmod(c * v13 + v34, v14)
    if ra or rb:
        raise KernelMismatchError(f"CRT solution c = {c} does not clear the denominators for {u}")
    return (_seg(1, 0), _seg(a, v12), _seg(b, v13), _seg(c, v14))


def realize_boundary(v) -> RealizationWitness:
    """Four lattice segments (possibly points) realizing a boundary point."""
    v = _vec(v)
    if pluecker_status(v).kind is not StatusKind.BOUNDARY:
        raise ValueError(f"{v.as_tuple()} is not a boundary point")
    sigma = _normal_form_perm(v)
    u = permute(sigma, v)
    polys: list[LatticePolygon]
    zero_node = next((i for i in range(1, 5) if u.node_gcd(i) == 0), None)
    if zero_node is not None:
        others = [j for j in range(1, 5) if j != zero_node]
        a, b, c = others
        tri = realize_triple(u[a, b], u[a, c], u[b, c]).polygons
        polys = [None] * 4
        polys[zero_node - 1] = LatticePolygon.point()
        for node, poly in zip(others, tri):
            polys[node - 1] = poly
    else:
        lam, reduced = k4_reduce(u)
        base = _realize_reduced_boundary(reduced)
        polys = [dilate(P, l) for P, l in zip(base, lam)]
    return make_witness(permute_polygons(inverse_perm(sigma), polys), v.as_tuple())


def _two_ones_perm(v: PlueckerVector) -> Optional[tuple[int, ...]]:
    for sigma in itertools.permutations(IDENTITY):
        u = permute(sigma, v)
        if u.v12 == 1 and u.v13 == 1:
            return sigma
    return None


def two_ones_family(v) -> tuple[str, int]:
    """('L' or 'M', k) for an interior point with v12 = v13 = 1."""
    v = _vec(v)
    x, y, s = v.v24, v.v34, v.v14 * v.v23
    if (y - x - s) % 2 == 0:
        return "L", (s - (y - x)) // 2
    return "M", (s + 1 - (y - x)) // 2


def realize_two_ones(v) -> RealizationWitness:
    """Realize an interior point having two adjacent coordinates equal to 1."""
    v = _vec(v)
    if pluecker_status(v).kind is not StatusKind.INTERIOR:
        raise ValueError(f"{v.as_tuple()} is not an interior point")
    sigma = _two_ones_perm(v)
    if sigma is None:
        raise ValueError(f"{v.as_tuple()} has no two adjacent coordinates equal to 1")
    u = permute(sigma, v)
    x, v14, v23 = u.v24, u.v14, u.v23
    family, k = two_ones_family(u)
    K1, K2, K3 = _seg(1, 0), _seg(0, 1), _seg(v23, 1)
    if family == "L":
        K4 = (x - k) * K1 + _seg(k, v14)
    else:
        K4 = LatticePolygon([(0, 0), (k - 1, v14), (x, v14), (x - k, 0)])
    polys = permute_polygons(inverse_perm(sigma), (K1, K2, K3, K4))
    return make_witness(polys, v.as_tuple())


# -- non-realizability ----------------------------------------------------------------

@dataclass(frozen=True)
class GapExclusion:
    triple: DiagramTriple
    bounds: SectionBounds

    def holds(self) -> bool:
        b = section_bounds(self.triple.w1, self.triple.w2)
        return b == self.bounds and 0 < self.triple.v < b.alpha


@dataclass(frozen=True)
class NonRealizabilityCertificate:
    """Arithmetic reasons why no four polygons realize ``v``.

    With v_ij = 1, either P_i or P_j is a primitive segment, or both are
    translates of one unimodular triangle.  The triangle case forces the two
    nodes to see the remaining polygons identically, which ``escape`` refutes.
    A primitive segment P_i turns (v_ik, v_kl, v_il) into a diagram triple,
    and each such triple sits in the gap of its section.
    """

    v: PlueckerVector
    unit_edge: tuple[int, int]
    escape: tuple[tuple[int, int], tuple[int, int]]
    gap_exclusions: tuple[GapExclusion, GapExclusion]

    def check(self) -> bool:
        i, j = self.unit_edge
        k, l = (n for n in range(1, 5) if n not in self.unit_edge)
        v = self.v
        return (v[i, j] == 1
                and self.escape == ((v[i, k], v[i, l]), (v[j, k], v[j, l]))
                and self.escape[0] != self.escape[1]
                and self.gap_exclusions[0].triple == (v[i, k], v[k, l], v[i, l])
                and self.gap_exclusions[1].triple == (v[j, k], v[k, l], v[j, l])
                and all(g.holds() for g in self.gap_exclusions))


def _gap(triple: DiagramTriple) -> Optional[GapExclusion]:
    if triple.w1 == triple.w2 == 0:
        return None
    b = section_bounds(triple.w1, triple.w2)
    return GapExclusion(triple, b) if b.is_gap(triple.v) else None


def certify_nonrealizable(v) -> Optional[NonRealizabilityCertificate]:
    """A certificate built from a unit coordinate, or None if none applies.

    None does not mean the point is realizable.
    """
    v = _vec(v)
    for i, j in PAIRS:
        if v[i, j] != 1:
            continue
        k, l = (n for n in range(1, 5) if n not in (i, j))
        escape = ((v[i, k], v[i, l]), (v[j, k], v[j, l]))
        if escape[0] == escape[1]:
            continue
        gi = _gap(DiagramTriple(v[i, k], v[k, l], v[i, l]))
        gj = _gap(DiagramTriple(v[j, k], v[k, l], v[j, l]))
        if gi and gj:
            cert = NonRealizabilityCertificate(v, (i, j), escape, (gi, gj))
            assert cert.check()
            return cert
    return None


# -- driver ------------------------------------------------------------------------

class RealizabilityStatus(enum.Enum):
    IMPOSSIBLE = "Impossible"
    REALIZED = "Realized"
    NON_REALIZABLE = "NonRealizable"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class RealizabilityVerdict:
    v: PlueckerVector
    status: RealizabilityStatus
    witness: Optional[RealizationWitness] = None
    certificate: Optional[NonRealizabilityCertificate] = None
    search_budget: Optional[dict] = None
    method: str = ""


DEFAULT_BUDGET = 3


def classify_realizability(v, budget: int = DEFAULT_BUDGET, vertex_cap: int = 4) -> RealizabilityVerdict:
    """Decide realizability where the implemented theory reaches, search otherwise.

    ``budget`` is the side length of the box [0, budget]^2 used by the final
    exhaustive polygon search; an Unknown verdict records it.
    """
    from .search import search_realization

    v = _vec(v)
    st = pluecker_status(v)
    if st.kind is StatusKind.VIOLATES:
        return RealizabilityVerdict(v, RealizabilityStatus.IMPOSSIBLE, method="inequalities")
    if st.kind is StatusKind.BOUNDARY:
        return RealizabilityVerdict(v, RealizabilityStatus.REALIZED, realize_boundary(v), method="boundary")
    if _two_ones_perm(v) is not None:
        return RealizabilityVerdict(v, RealizabilityStatus.REALIZED, realize_two_ones(v), method="two-ones")
    lam, reduced = k4_reduce(v)
    if _two_ones_perm(reduced) is not None:
        base = realize_two_ones(reduced).polygons
        polys = [dilate(P, l) for P, l in zip(base, lam)]
        return RealizabilityVerdict(v, RealizabilityStatus.REALIZED, make_witness(polys, v.as_tuple()),
                                    method="two-ones after reduction")
    cert = certify_nonrealizable(v)
    if cert is not None:
        return RealizabilityVerdict(v, RealizabilityStatus.NON_REALIZABLE, certificate=cert, method="certificate")
    params = {"box": [budget, budget], "vertexCap": vertex_cap}
    candidates = [(reduced, lam)] if reduced == v else [(reduced, lam), (v, ScalingVector((1, 1, 1, 1)))]
    for target, lam_t in candidates:
        polys = search_realization(target.as_tuple(), (budget, budget), vertex_cap)
        if polys is not None:
            polys = [dilate(P, l) for P, l in zip(polys, lam_t)]
            return RealizabilityVerdict(v, RealizabilityStatus.REALIZED, make_witness(polys, v.as_tuple()),
                                        search_budget=params, method="search")
    return RealizabilityVerdict(v, RealizabilityStatus.UNKNOWN, search_budget=params, method="search")
