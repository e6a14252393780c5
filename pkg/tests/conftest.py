"""Shared spaces for the test modules.

Session scope keeps construction costs down; every fixture is small
enough that holding all of them at once stays well under typical CI
memory.  Heavy sweeps live in the acceptance module, not here.
"""

import numpy as np
import pytest

from ringcap import (
    build_double_cone,
    build_euclidean_grid,
    build_glued_balls,
    build_heisenberg_grid,
)


def origin_node(space):
    """Id of the node nearest the coordinate origin."""
    return space.nearest_node(np.zeros(space.coords.shape[1]))


# Filled by the acceptance module; echoed after the run so the scorecard
# is visible even when every criterion passes.
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance scorecard")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def line3():
    """Three nodes at -1, 0, 1 with unit cells."""
    return build_euclidean_grid(1, 1.0, 1.0)


@pytest.fixture(scope="session")
def line_fine():
    return build_euclidean_grid(1, 1.2, 0.01)


@pytest.fixture(scope="session")
def grid2():
    return build_euclidean_grid(2, 1.05, 0.05)


@pytest.fixture(scope="session")
def grid2_fine():
    return build_euclidean_grid(2, 1.05, 0.01)


@pytest.fixture(scope="session")
def grid3():
    return build_euclidean_grid(3, 0.85, 0.05)


@pytest.fixture(scope="session")
def weighted2():
    return build_euclidean_grid(2, 1.05, 0.05, alpha=1.0)


@pytest.fixture(scope="session")
def cone2():
    return build_double_cone(2, 1.3, 0.02)


@pytest.fixture(scope="session")
def glued2():
    return build_glued_balls(2, 0.05, 1.0)


@pytest.fixture(scope="session")
def heis_probe():
    """Vertex-only gauge-metric sample of the group, for ball counting."""
    return build_heisenberg_grid(0.66, 0.03, t_half_extent=0.12,
                                 t_step=0.0012, with_edges=False)


@pytest.fixture(scope="session")
def heis_graph():
    """Small connected horizontal-edge graph on the group."""
    return build_heisenberg_grid(0.4, 0.05, with_edges=True)
