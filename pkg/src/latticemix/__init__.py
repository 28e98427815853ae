"""Exact mixed areas of lattice polygons, the width/mixed-area diagram and
the discrete Plücker set of four polygons."""

from .diagram import (
    DiagramTriple,
    SectionBounds,
    SectionStatus,
    SectionVerdict,
    boundary_intersection,
    brute_force_section,
    classify_value,
    common_boundary_primitive_points,
    saturation_witness,
    search_pair,
    section_bounds,
    semigroup_witness,
    verify_witness,
    width_level_polygon,
)
from .exactgeom import (
    LatticePolygon,
    NormalFan2D,
    UnimodularMap,
    apply_unimodular,
    canonicalize,
    convex_hull,
    dilate,
    edge_normals,
    lattice_length,
    map_direction_to_e2,
    minkowski_sum,
    minkowski_sum_hull,
    normalized_area,
    support_value,
)
from .mixedarea import (
    KernelMismatchError,
    MixedAreaReport,
    UnitPairClass,
    classify_unit_pair,
    lattice_width,
    mixed_area,
    mixed_area_polarization,
    mixed_area_support,
    segment_mixed_area,
    simplex_distance,
    verify_minkowski_inequality,
)
from .numth import BezoutResult, CongruenceSystem, crt_pair, gcd_ext, mod_inverse
from .pluecker import (
    NonRealizabilityCertificate,
    PlueckerStatus,
    PlueckerVector,
    RealizabilityStatus,
    RealizabilityVerdict,
    RealizationWitness,
    ScalingVector,
    StatusKind,
    certify_nonrealizable,
    classify_realizability,
    k4_reduce,
    permute,
    pluecker_status,
    realize_boundary,
    realize_triple,
    realize_two_ones,
    scale,
)

__version__ = "0.1.0"
