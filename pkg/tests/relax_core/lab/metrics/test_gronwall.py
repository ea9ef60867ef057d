import math

import numpy as np
import pytest

from relax_core.lab.metrics import lemma_d2_check, lipschitz_constant
from relax_core.lab.solvers import Trajectory
from relax_core.lab.spectral import Field, PeriodicGrid
from relax_core.lab.state import FluidState, LimitState, Params, limit_velocity

TIMES = [0.0, 0.1, 0.2]
PARAMS = Params(c_p=0.0, c_k=-1.0, alpha=0.5, epsilon=0.1)


def density(grid, t, phase=0.0):
    return Field(grid=grid, values=(1 + 0.3 * math.exp(-t) * np.cos(grid.axis_nodes - phase)) / grid.volume)


def pair(phase=0.0):
    grid = PeriodicGrid(n=32)
    er, limit = [], []
    for t in TIMES:
        rho = density(grid, t, phase)
        er.append(FluidState(rho=rho, m=limit_velocity(rho, PARAMS) * rho, time=t))
        limit.append(LimitState(rho=density(grid, t), time=t))
    return (
        Trajectory(kind="er", params=PARAMS, times=TIMES, snapshots=er),
        Trajectory(kind="fpme", params=PARAMS, times=TIMES, snapshots=limit),
    )


def test_lipschitz_constant():
    grid = PeriodicGrid(n=32)
    u = Field(grid=grid, values=np.sin(grid.nodes))

    assert lipschitz_constant(u) == pytest.approx(1.0, abs=1e-12)


def test_identical_trajectories_pass():
    report = lemma_d2_check(*pair())

    assert report.passed
    assert report.max_ratio == 0.0
    assert report.times == TIMES
    assert max(report.relative_kinetic) == pytest.approx(0.0, abs=1e-20)


def test_initial_ratio_is_one_half():
    report = lemma_d2_check(*pair(phase=0.2))

    assert report.lhs[0] > 0
    assert report.rhs[0] == pytest.approx(2 * report.lhs[0])
    assert report.lipschitz > 0
