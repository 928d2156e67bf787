import numpy as np
import pytest

from imbq.oracle import oracle_norm_series
from imbq.presets import get_preset


@pytest.fixture(scope="session")
def gaussian_1d():
    return get_preset("gaussian", 1)


@pytest.fixture(scope="session")
def gaussian_2d():
    return get_preset("gaussian", 2)


@pytest.fixture(scope="session")
def gaussian_3d():
    return get_preset("gaussian", 3)


@pytest.fixture(scope="session")
def bump_1d():
    return get_preset("bump", 1)


@pytest.fixture(scope="session")
def oracle_series_by_dim(gaussian_1d, gaussian_2d, gaussian_3d):
    """Default oracle sweeps per dimension (the expensive shared artifact)."""
    windows = {1: 1e5, 2: 1e6, 3: 1e6}
    presets = {1: gaussian_1d, 2: gaussian_2d, 3: gaussian_3d}
    return {
        dim: oracle_norm_series(presets[dim], np.geomspace(1e2, windows[dim], 64))
        for dim in (1, 2, 3)
    }
