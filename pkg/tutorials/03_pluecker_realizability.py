"""Pairwise mixed areas of four polygons: realize them, or prove they cannot occur.

Run:  python3 tutorials/03_pluecker_realizability.py
"""

from latticemix.pluecker import (
    certify_nonrealizable,
    classify_realizability,
    k4_reduce,
    pluecker_status,
    realize_boundary,
)

# A vector lists V(P_i, P_j) for ij = 12, 13, 14, 23, 24, 34.
v = (1, 2, 3, 1, 4, 5)
st = pluecker_status(v)
print(v, "products", st.products, "->", st.kind.value, "equalities", st.equalities)

# Boundary points come from four segments.
w = realize_boundary(v)
for i, P in enumerate(w.polygons, 1):
    print(f"  P{i} = {P.vertices}")

# Node-wise scaling divides out common factors.
lam, red = k4_reduce((2, 4, 6, 8, 12, 6))
print("(2,4,6,8,12,6) = scale", lam.lambdas, "of", red.as_tuple())

# Some interior vectors are provably out of reach: a unit edge forces a
# segment or a shared triangle, and each option runs into a section gap.
c = certify_nonrealizable((1, 4, 6, 8, 12, 1))
print("certificate: unit edge", c.unit_edge, "escape", c.escape)
for g in c.gap_exclusions:
    print("  triple", tuple(g.triple), "alpha =", g.bounds.alpha)
print("re-checks:", c.check())

# The driver chains every method and reports which one settled the question.
for v in [(1, 1, 1, 3, 3, 2), (2, 2, 2, 2, 2, 2), (2, 3, 3, 3, 3, 2), (5, 1, 1, 1, 1, 1)]:
    r = classify_realizability(v)
    print(v, "->", r.status.value, "via", r.method)
