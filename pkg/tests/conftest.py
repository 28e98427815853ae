import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from latticemix import LatticePolygon  # noqa: E402

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

coord = st.integers(0, 8)
point = st.tuples(coord, coord)


@st.composite
def polygons(draw, lo=0, hi=8, max_points=6):
    pts = draw(st.lists(st.tuples(st.integers(lo, hi), st.integers(lo, hi)), min_size=1, max_size=max_points))
    return LatticePolygon(pts)


unimodular_matrices = st.sampled_from([
    ((1, 0), (0, 1)), ((0, 1), (1, 0)), ((1, 1), (0, 1)), ((1, 0), (1, 1)),
    ((2, 1), (1, 1)), ((1, -1), (0, 1)), ((0, -1), (1, 0)), ((3, 2), (1, 1)),
    ((-1, 0), (0, 1)), ((1, 2), (1, 3)),
])


ACCEPTANCE_RESULTS: dict[int, tuple[str, bool]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        title, ok = ACCEPTANCE_RESULTS[n]
        terminalreporter.write_line(f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {title}")


@pytest.fixture
def record_acceptance():
    return ACCEPTANCE_RESULTS
