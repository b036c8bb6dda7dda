"""Shared fixtures: the small worked matrices used throughout the suite."""

import numpy as np
import pytest


@pytest.fixture
def phi_basic():
    # 2x3 frame whose analysis / frame operator / Gram are known in closed form
    return np.array([[1.0, 0.0, 0.0], [0.0, 1.0, 1.0]])


@pytest.fixture
def gram_tight():
    # Gram of a 1-tight 2x3 frame; spectrum {0, +-i}
    return np.array([[0.0, 0.0, -2.0], [0.0, 0.0, 1.0], [2.0, -1.0, 0.0]]) / np.sqrt(5.0)


@pytest.fixture
def conf4():
    # normalized order-4 skew conference matrix
    return np.array(
        [
            [0, 1, 1, 1],
            [-1, 0, -1, 1],
            [-1, 1, 0, -1],
            [-1, -1, 1, 0],
        ],
        dtype=np.int64,
    )


@pytest.fixture
def core3(conf4):
    # its core: the Seidel matrix of the 3-cycle
    return conf4[1:, 1:].copy()
