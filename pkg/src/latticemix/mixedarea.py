"""Normalized mixed area of two lattice polygons, computed two independent ways.

``mixed_area_polarization`` goes through the area of the Minkowski sum,
``mixed_area_support`` sums support values over the normalized outer normals
of the second polygon.  ``mixed_area`` runs both and refuses to answer when
they disagree.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .exactgeom import (
    LatticePolygon,
    is_primitive,
    lattice_length,
    minkowski_sum,
    normalized_area,
    normalized_normals,
    support_value,
)


class KernelMismatchError(AssertionError):
    """The two mixed-area kernels disagreed; always a bug."""


@dataclass(frozen=True)
class MixedAreaReport:
    value: int
    polarization_value: int
    support_value: int

    @property
    def method_agreement(self) -> bool:
        return self.polarization_value == self.support_value == self.value

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "agreement": self.method_agreement,
            "polarization": self.polarization_value,
            "support": self.support_value,
        }


def mixed_area_polarization(P: LatticePolygon, Q: LatticePolygon) -> int:
    twice = normalized_area(minkowski_sum(P, Q)) - normalized_area(P) - normalized_area(Q)
    if twice % 2:
        raise KernelMismatchError(f"odd polarization numerator {twice} for {P}, {Q}")
    return twice // 2


def mixed_area_support(P: LatticePolygon, Q: LatticePolygon) -> int:
    """Sum of h_P over the normalized outer normals of Q.

    A segment Q counts as two opposite sides, which reproduces
    length(Q) * width of P orthogonal to Q.
    """
    return sum(support_value(P, n) for n in normalized_normals(Q))


def mixed_area(P: LatticePolygon, Q: LatticePolygon) -> MixedAreaReport:
    a = mixed_area_polarization(P, Q)
    b = mixed_area_support(P, Q)
    if a != b:
        raise KernelMismatchError(f"polarization {a} != support {b} for {P}, {Q}")
    return MixedAreaReport(a, a, b)


def mixed_area_value(P: LatticePolygon, Q: LatticePolygon) -> int:
    """Single-kernel value for hot loops; results are re-verified separately."""
    return mixed_area_support(P, Q)


def lattice_width(P: LatticePolygon, u: Sequence[int]) -> int:
    if not is_primitive(u):
        raise ValueError(f"direction {tuple(u)} is not primitive")
    return support_value(P, u) + support_value(P, (-u[0], -u[1]))


def orthogonal_primitive(S: LatticePolygon) -> tuple[int, int]:
    (x0, y0), (x1, y1) = S.vertices
    g = lattice_length(S)
    return (-(y1 - y0) // g, (x1 - x0) // g)


def segment_mixed_area(P: LatticePolygon, I: LatticePolygon) -> int:
    """V(P, I) = width of P orthogonal to I times the lattice length of I."""
    if I.dim == 2:
        raise ValueError("segment_mixed_area needs a segment or a point as second argument")
    if I.is_point:
        return 0
    return lattice_width(P, orthogonal_primitive(I)) * lattice_length(I)


def simplex_distance(P: LatticePolygon) -> int:
    """V(P, standard simplex): the least d such that a translate of P fits in d * simplex."""
    return support_value(P, (1, 1)) + support_value(P, (-1, 0)) + support_value(P, (0, -1))


def verify_minkowski_inequality(P: LatticePolygon, Q: LatticePolygon) -> bool:
    return normalized_area(P) * normalized_area(Q) <= mixed_area(P, Q).value ** 2


class UnitPairClass(enum.Enum):
    PRIMITIVE_SEGMENT_FIRST = "PrimitiveSegmentFirst"
    PRIMITIVE_SEGMENT_SECOND = "PrimitiveSegmentSecond"
    SHARED_UNIMODULAR_TRIANGLE = "SharedUnimodularTriangle"
    NOT_UNIT = "NotUnit"


def _is_primitive_segment(S: LatticePolygon) -> bool:
    return S.is_segment and lattice_length(S) == 1


def classify_unit_pair(P: LatticePolygon, Q: LatticePolygon) -> UnitPairClass:
    """Which of the possible shapes a pair of mixed area one takes.

    Raises ``KernelMismatchError`` if V(P, Q) = 1 but neither polygon is a
    primitive segment and they are not translates of one unimodular triangle.
    """
    if mixed_area(P, Q).value != 1:
        return UnitPairClass.NOT_UNIT
    if _is_primitive_segment(P):
        return UnitPairClass.PRIMITIVE_SEGMENT_FIRST
    if _is_primitive_segment(Q):
        return UnitPairClass.PRIMITIVE_SEGMENT_SECOND
    if (len(P) == 3 and normalized_area(P) == 1 and P.normalized() == Q.normalized()):
        return UnitPairClass.SHARED_UNIMODULAR_TRIANGLE
    raise KernelMismatchError(f"mixed area 1 without a recognized shape: {P}, {Q}")
