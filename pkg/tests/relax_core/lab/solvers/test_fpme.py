import math

import numpy as np
import pytest

from relax_core.lab.errors import BoundaryError
from relax_core.lab.solvers import limit_acceleration, rhs_fpme, run_fpme, step_fpme
from relax_core.lab.spectral import Field, PeriodicGrid
from relax_core.lab.state import LimitState, PhysicalConstants, limit_velocity

HEAT = PhysicalConstants(c_p=1.0, c_k=0.0, gamma=1.0, alpha=0.5)


def single_mode(grid, amplitude=0.1):
    return Field(grid=grid, values=(1 + amplitude * np.cos(grid.axis_nodes)) / (2 * math.pi))


@pytest.mark.parametrize(
    "params",
    [HEAT, PhysicalConstants(c_k=-1.0, alpha=0.5), PhysicalConstants(c_p=1.0, c_k=0.1, gamma=2.0, alpha=0.5)],
)
def test_constant_density_is_a_fixed_point(grid, params):
    rho = Field.constant(grid, 1 / grid.volume)

    assert rhs_fpme(rho, params).max_abs() < 1e-13
    assert np.max(np.abs(step_fpme(rho, 0.01, params).values - rho.values)) < 1e-13


def test_heat_tendency(grid):
    tendency = rhs_fpme(single_mode(grid), HEAT)

    assert np.max(np.abs(tendency.values + 0.1 * np.cos(grid.axis_nodes) / (2 * math.pi))) < 1e-13


def test_heat_mode_decay():
    grid = PeriodicGrid(n=32)
    traj = run_fpme(single_mode(grid), HEAT, t_end=0.5)

    for time, rho in zip(traj.times, traj.densities(), strict=True):
        amplitude = 2 * rho.spectral[1].real
        assert amplitude == pytest.approx(0.1 / (2 * math.pi) * math.exp(-time), abs=1e-8)


def test_pressureless_tendency_matches_finite_differences(grid):
    params = PhysicalConstants(c_k=-1.0, alpha=0.5)
    rho = single_mode(grid, 0.5)
    tendency = rhs_fpme(rho, params)

    # rho grad Lambda^{-1/2} rho with a single mode has closed-form divergence
    x = grid.axis_nodes
    a = 0.5 / (2 * math.pi)
    flux = (1 / (2 * math.pi) + a * np.cos(x)) * (-a * np.sin(x))
    divergence = -a / (2 * math.pi) * np.cos(x) - a**2 * np.cos(2 * x)
    assert np.allclose(np.gradient(flux, grid.h)[5:-5], divergence[5:-5], atol=1e-3)
    assert np.max(np.abs(tendency.values - divergence)) < 1e-12


def test_rk4_self_convergence(grid):
    params = PhysicalConstants(c_k=-1.0, alpha=0.5)
    rho = single_mode(grid, 0.5)

    def advance(dt, count):
        current = rho
        for _ in range(count):
            current = step_fpme(current, dt, params)
        return current.values

    reference = advance(0.005, 40)
    coarse = np.max(np.abs(advance(0.02, 10) - reference))
    fine = np.max(np.abs(advance(0.01, 20) - reference))

    assert math.log2(coarse / fine) > 3.5


def test_mass_is_conserved(grid):
    params = PhysicalConstants(c_p=1.0, c_k=0.1, gamma=2.0, alpha=0.5)
    traj = run_fpme(single_mode(grid, 0.5), params, t_end=0.2)

    assert max(abs(state.mass - 1) for state in traj.snapshots) < 1e-10


def test_run_accepts_limit_state(grid):
    params = PhysicalConstants(c_k=-1.0, alpha=0.5)
    traj = run_fpme(LimitState(rho=single_mode(grid), time=0.0), params, t_end=0.1)

    assert traj.kind == "fpme"
    assert traj.times[-1] == pytest.approx(0.1)


def test_uniform_limit_has_no_acceleration(grid):
    params = PhysicalConstants(c_k=-1.0, alpha=0.5)
    traj = run_fpme(Field.constant(grid, 1 / grid.volume), params, t_end=0.1)

    assert limit_acceleration(traj, 10).max_abs() < 1e-12


def test_heat_acceleration_matches_analytic_derivative():
    grid = PeriodicGrid(n=64)
    traj = run_fpme(single_mode(grid, 0.5), HEAT, times=list(np.linspace(0.0, 0.2, 81)))
    index = 40
    x, t = grid.axis_nodes, traj.times[index]

    def u(time):
        decay = 0.5 * math.exp(-time)
        return decay * np.sin(x) / (1 + decay * np.cos(x))

    delta = 1e-5
    du = (u(t + delta) - u(t - delta)) / (2 * delta)
    b = 0.5 * math.exp(-t)
    ux = b * (np.cos(x) + b) / (1 + b * np.cos(x)) ** 2
    acceleration = limit_acceleration(traj, index)

    assert np.allclose(limit_velocity(traj.snapshots[index].rho, HEAT).values[0], u(t), atol=1e-7)
    assert np.max(np.abs(acceleration.values[0] - (du + u(t) * ux))) < 1e-4


def test_acceleration_at_endpoint(grid):
    traj = run_fpme(single_mode(grid), HEAT, t_end=0.1)

    with pytest.raises(BoundaryError):
        limit_acceleration(traj, 0)
    assert limit_acceleration(traj, 0, allow_one_sided=True).is_vector
