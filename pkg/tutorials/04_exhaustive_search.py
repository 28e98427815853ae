"""Exhaustive search over small polygons, and what "Unknown" means.

Run:  python3 tutorials/04_exhaustive_search.py
"""

import time

from latticemix.pluecker import classify_realizability
from latticemix.search import get_zoo, search_realization

for box in [(1, 1), (2, 2), (3, 3)]:
    t = time.perf_counter()
    zoo = get_zoo(box)
    print(f"box {box}: {len(zoo)} polygons up to translation ({time.perf_counter() - t:.2f}s)")

v = (2, 3, 3, 3, 3, 2)
print("in box (1,1):", search_realization(v, box=(1, 1)))
found = search_realization(v, box=(2, 2))
print("in box (2,2):", [P.vertices for P in found])

# With too small a budget the driver refuses to guess.
r = classify_realizability(v, budget=1)
print(r.status.value, r.search_budget)
