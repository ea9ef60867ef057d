import math

import numpy as np
import pytest

from relax_core.lab.spectral import Field, PeriodicGrid
from relax_core.lab.state import FluidState, Params


@pytest.fixture
def grid():
    return PeriodicGrid(n=64)


@pytest.fixture
def pressureless():
    return Params(c_p=0.0, c_k=-1.0, alpha=0.5, epsilon=0.1)


@pytest.fixture
def uniform(grid):
    return FluidState(rho=Field.constant(grid, 1 / grid.volume), m=Field.zeros_vector(grid))


@pytest.fixture
def bump_density(grid):
    return Field(grid=grid, values=(1 + 0.5 * np.cos(grid.axis_nodes)) / (2 * math.pi))


__all__ = [
    bump_density,
    grid,
    pressureless,
    uniform,
]
