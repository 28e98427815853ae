"""Which mixed areas occur for two polygons of prescribed lattice widths?

Run:  python3 tutorials/02_width_diagram.py
"""

from latticemix.diagram import (
    SectionStatus,
    classify_value,
    saturation_witness,
    section_bounds,
    semigroup_witness,
)
from latticemix.mixedarea import lattice_width, mixed_area

w1, w2 = 30, 50
b = section_bounds(w1, w2)
print(f"widths ({w1}, {w2}): d = {b.d}, alpha = {b.alpha}, beta = {b.beta}")
print("generators of the semigroup:", b.generators)

# Small positive values below alpha never occur.
for v in range(0, 12):
    r = classify_value(w1, w2, v)
    print(f"  v = {v:2d}: {r.status.value}")

# Semigroup values have a closed-form witness: one triangle pair per generator combination.
P, Q = semigroup_witness(w1, w2, 2, 1)
print("semigroup witness for 11:", P.vertices, Q.vertices, "->", mixed_area(P, Q).value)

# From beta on, every value is realized.
P, Q = saturation_witness(w1, w2, 23)
print("saturation witness for 23: widths",
      lattice_width(P, (0, 1)), lattice_width(Q, (0, 1)), "mixed area", mixed_area(P, Q).value)

# Other values between alpha and beta go to a bounded search.  A miss is
# reported as unknown, never as excluded.  A hit is
# verified by both kernels before it is returned.
r = classify_value(w1, w2, 7)
assert r.status is SectionStatus.REALIZED_SEARCH
print("search witness for 7:", r.witness[0].vertices, r.witness[1].vertices)
