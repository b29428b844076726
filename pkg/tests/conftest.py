import numpy as np
import pytest

from curvedh import oracle


@pytest.fixture(scope="session", autouse=True)
def warm_numba():
    # compile the sturm kernel once so timed tests see steady-state speed
    d = oracle.build(0.0, 0, 32, 10.0)
    oracle.sturm_count(d, -1.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20260824)
