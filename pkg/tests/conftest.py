import math

import numpy as np
import pytest
from hypothesis import HealthCheck, settings, strategies as st

from hankelbounds.caratheodory import HerglotzMeasure, coeffs_from_measure

settings.register_profile("default", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def measures(draw, max_atoms=6):
    m = draw(st.integers(1, max_atoms))
    raw = draw(st.lists(st.floats(0.01, 1.0), min_size=m, max_size=m))
    angles = draw(st.lists(st.floats(0.0, 2 * math.pi, exclude_max=True), min_size=m, max_size=m))
    w = np.array(raw) / math.fsum(raw)
    return HerglotzMeasure.from_arrays(w / math.fsum(w), angles)


@st.composite
def feasible_p(draw, N=4):
    return coeffs_from_measure(draw(measures()), N)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
