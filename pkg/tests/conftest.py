import numpy as np
import pytest

from geoent.linalg import RandomSource
from geoent.product_opt import OptConfig

# cheap optimizer settings for tests that run many states
FAST = OptConfig(n_starts=16, max_iters=100)


@pytest.fixture
def src():
    return RandomSource(1234)


def random_matrix(g, n, m=None):
    m = n if m is None else m
    return g.standard_normal((n, m)) + 1j * g.standard_normal((n, m))


def invertible_local(g, d=2, smin=0.3):
    """U diag(s) V with singular values in [smin, 1]."""
    from scipy.stats import unitary_group

    s = g.uniform(smin, 1.0, d)
    u = unitary_group.rvs(d, random_state=g)
    v = unitary_group.rvs(d, random_state=g)
    return u @ np.diag(s) @ v


# one line per acceptance criterion, shown in the terminal summary
ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
