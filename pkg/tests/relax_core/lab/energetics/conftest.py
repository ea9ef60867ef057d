import math

import numpy as np
import pytest

from relax_core.lab.solvers import Trajectory
from relax_core.lab.spectral import Field, PeriodicGrid
from relax_core.lab.state import FluidState, LimitState, limit_velocity

TIMES = [0.0, 0.25, 0.5, 0.75]


def matched_pair(params, grid=None):
    """Euler-Riesz and limit trajectories whose snapshots coincide."""
    grid = grid or PeriodicGrid(n=64)
    er, limit = [], []
    for t in TIMES:
        rho = Field(grid=grid, values=(1 + 0.4 * math.exp(-t) * np.cos(grid.axis_nodes)) / grid.volume)
        u = limit_velocity(rho, params)
        er.append(FluidState(rho=rho, m=u * rho, time=t))
        limit.append(LimitState(rho=rho, time=t))
    return (
        Trajectory(kind="er", params=params, times=TIMES, snapshots=er),
        Trajectory(kind="fpme", params=params, times=TIMES, snapshots=limit),
    )


@pytest.fixture
def pair_factory():
    return matched_pair


__all__ = [
    pair_factory,
]
