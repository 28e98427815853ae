"""Mixed areas of lattice polygons, computed two ways.

Run:  python3 tutorials/01_mixed_areas.py
"""

from latticemix import LatticePolygon, minkowski_sum, mixed_area, normalized_area
from latticemix.exactgeom import UnimodularMap, apply_unimodular, normalized_normals, support_value

square = LatticePolygon.unit_square()
tri = LatticePolygon([(0, 0), (0, 2), (3, 3)])

# Normalized area is twice the Euclidean area, so it is always an integer.
print("Vol(square) =", normalized_area(square))
print("Vol(tri)    =", normalized_area(tri))

# The Minkowski sum is built by merging edge sequences.
s = minkowski_sum(square, tri)
print("square + tri =", s.vertices, " Vol =", normalized_area(s))

# Polarization: V(P,Q) = Vol(P+Q) - Vol(P) - Vol(Q), halved.
# Support form: sum of h_P over Q's edge normals scaled by edge length.
r = mixed_area(square, tri)
print(f"V(square, tri) = {r.value}  (polarization {r.polarization_value}, support {r.support_value})")
for n in normalized_normals(tri):
    print(f"  h_square{n} = {support_value(square, n)}")

# Both kernels are invariant under lattice-preserving maps.
shear = UnimodularMap(((1, 3), (0, 1)), (5, -2))
r2 = mixed_area(apply_unimodular(shear, square), apply_unimodular(shear, tri))
print("after a shear and a shift:", r2.value)
