import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

# the canonical non-commuting pair of rank-one projections in the plane
P = np.diag([1.0, 0.0])
Q = 0.5 * np.ones((2, 2))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def pq():
    return P.copy(), Q.copy()


# one line per acceptance criterion, printed after the run
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, title, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} -- {detail}")
