import numpy as np
import pytest
from pydantic import ValidationError

from relax_core.lab.errors import BoundaryError, GridMismatchError
from relax_core.lab.solvers import StepPolicy, centered_time_derivative, output_times, run_fpme
from relax_core.lab.spectral import Field, PeriodicGrid
from relax_core.lab.state import PhysicalConstants


def test_default_output_times():
    times = output_times(1.0)

    assert len(times) == 50
    assert times[0] == 0.0
    assert times[-1] == 1.0


def test_output_every():
    assert output_times(1.0, 0.25) == pytest.approx([0.0, 0.25, 0.5, 0.75, 1.0])


def test_output_every_must_divide_horizon():
    with pytest.raises(ValueError):
        output_times(1.0, 0.3)


def test_zero_horizon():
    assert output_times(0.0) == [0.0]


def test_step_policy_bounds():
    with pytest.raises(ValidationError):
        StepPolicy(dt_min=0.1, dt_max=0.01)


def test_centered_difference_is_exact_for_quadratics():
    times = [0.0, 0.1, 0.3, 0.4]
    values = [np.array([t**2]) for t in times]

    assert centered_time_derivative(values, times, 0)[0] == pytest.approx(0.0, abs=1e-12)
    assert centered_time_derivative(values, times, 3)[0] == pytest.approx(0.8, abs=1e-12)


def test_centered_difference_needs_three_instants():
    with pytest.raises(BoundaryError):
        centered_time_derivative([np.zeros(1), np.zeros(1)], [0.0, 1.0], 0)


def test_snapshots_land_on_output_times(bump_density):
    params = PhysicalConstants(c_k=-1.0, alpha=0.5)
    times = [0.0, 0.013, 0.05, 0.1]
    traj = run_fpme(bump_density, params, times=times)

    assert [snapshot.time for snapshot in traj.snapshots] == times
    assert traj.steps >= len(times) - 1


def test_incompatible_trajectories(bump_density):
    params = PhysicalConstants(c_k=-1.0, alpha=0.5)
    coarse = run_fpme(bump_density, params, t_end=0.0)
    other_grid = PeriodicGrid(n=32)
    other = run_fpme(Field.constant(other_grid, 1 / other_grid.volume), params, t_end=0.0)

    with pytest.raises(GridMismatchError):
        coarse.check_compatible(other)
