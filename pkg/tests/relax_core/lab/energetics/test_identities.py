import math

import numpy as np
import pytest

from relax_core.lab.energetics import (
    energy_identity_residual,
    interaction_derivative_constant,
    internal_derivative_residual,
    modulated_energy_terms,
    modulated_inequality_constant,
)
from relax_core.lab.errors import BoundaryError
from relax_core.lab.solvers import run_er, run_fpme
from relax_core.lab.spectral import Field, PeriodicGrid
from relax_core.lab.state import AnalyticProfile, FluidState, LimitState, Params, initial_state


def test_energy_identity_at_equilibrium():
    grid = PeriodicGrid(n=32)
    params = Params(c_p=1.0, c_k=-0.5, gamma=2.0, alpha=0.5, epsilon=0.1)
    state = FluidState(rho=Field.constant(grid, 1 / grid.volume), m=Field.zeros_vector(grid))
    traj = run_er(state, params, times=[0.0, 0.1, 0.2])

    assert max(abs(r) for r in energy_identity_residual(traj, params)) < 1e-12


def test_energy_identity_converges_with_output_spacing():
    grid = PeriodicGrid(n=64)
    params = Params(c_p=0.0, c_k=-1.0, alpha=0.5, epsilon=0.2)
    initial = initial_state(grid, params, AnalyticProfile(), "rest")

    def worst(count):
        traj = run_er(initial, params, times=list(np.linspace(0.0, 0.2, count + 1)))
        return max(abs(r) for r in energy_identity_residual(traj, params))

    assert worst(8) > 3 * worst(16)


def test_modulated_terms_vanish_on_identical_trajectories(pair_factory):
    params = Params(c_p=1.0, c_k=-0.5, gamma=2.0, alpha=0.5, epsilon=0.1)
    er, limit = pair_factory(params)
    terms = modulated_energy_terms(er, limit, params)

    assert max(terms.relaxation_energy) == pytest.approx(0.0, abs=1e-14)
    assert max(abs(r) for r in terms.internal_residual) < 1e-12
    assert terms.inequality_constant == pytest.approx(0.0, abs=1e-10)
    assert terms.interaction_constant == 0.0
    assert len(terms.forcing) == len(terms.times) - 2


@pytest.mark.parametrize("c_k", [-0.5, 0.0])
def test_interaction_constant_is_zero_without_a_density_gap(pair_factory, c_k):
    params = Params(c_p=1.0, c_k=c_k, gamma=2.0, alpha=0.5, epsilon=0.1)
    er, limit = pair_factory(params)

    assert interaction_derivative_constant(er, limit, params) == 0.0


def test_identity_checks_need_three_times():
    grid = PeriodicGrid(n=32)
    params = Params(c_k=-1.0, alpha=0.5, epsilon=0.1)
    rho = Field.constant(grid, 1 / grid.volume)
    er = run_er(FluidState(rho=rho, m=Field.zeros_vector(grid)), params, times=[0.0, 0.1])
    limit = run_fpme(LimitState(rho=rho), params, times=[0.0, 0.1])

    with pytest.raises(BoundaryError):
        internal_derivative_residual(er, limit, params)


@pytest.mark.integration
def test_modulated_inequality_constant_on_a_run():
    grid = PeriodicGrid(n=64)
    params = Params(c_p=1.0, c_k=0.1, gamma=2.0, alpha=0.5, epsilon=0.05)
    initial = initial_state(grid, params, AnalyticProfile())
    times = list(np.linspace(0.0, 0.3, 31))
    er = run_er(initial, params, times=times)
    limit = run_fpme(initial.rho, params, times=times)

    constant = modulated_inequality_constant(er, limit, params)
    assert math.isfinite(constant)
    assert constant >= 0
