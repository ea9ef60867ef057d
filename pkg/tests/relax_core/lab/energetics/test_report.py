import math

import numpy as np
import pytest

from relax_core.lab.energetics import csv_columns, energy_report
from relax_core.lab.metrics import DEFAULT_HOOKS
from relax_core.lab.spectral import Field, PeriodicGrid
from relax_core.lab.state import FluidState, LimitState, Params, PhysicalConstants


@pytest.fixture
def grid():
    return PeriodicGrid(n=64)


def test_csv_header_one_dimension():
    assert ",".join(csv_columns(1)) == (
        "t,mass,momentum_x,kinetic,internal,interaction,free,total,mod_kinetic,mod_internal,"
        "mod_interaction,neg_sobolev_sq,lgamma_err_sq,l1_momentum_err_sq,d2_sq,dbl_momentum_sq"
    )


def test_csv_header_two_dimensions():
    assert csv_columns(2)[2:4] == ["momentum_x", "momentum_y"]


def test_uniform_equilibrium_report(grid):
    params = Params(c_p=1.0, c_k=0.1, gamma=2.0, alpha=0.5, epsilon=0.1)
    rho = Field.constant(grid, 1 / grid.volume)
    report = energy_report(FluidState(rho=rho, m=Field.zeros_vector(grid)), params)

    assert report.mass == pytest.approx(1.0)
    assert report.kinetic == 0.0
    assert report.internal == pytest.approx(1 / (2 * math.pi))
    assert report.interaction == pytest.approx(0.0, abs=1e-15)
    assert report.total == pytest.approx(report.free / params.epsilon)
    assert report.theta_norm is not None
    assert report.d2_sq is None


def test_absent_quantities_are_empty_cells(grid):
    params = PhysicalConstants(c_k=-1.0, alpha=0.5)
    rho = Field(grid=grid, values=(1 + 0.5 * np.cos(grid.axis_nodes)) / grid.volume)
    row = energy_report(LimitState(rho=rho, time=0.5), params).row(1)

    assert len(row) == len(csv_columns(1))
    assert row[0] == "0.5"
    assert row[2] == ""
    assert row[csv_columns(1).index("kinetic")] == ""
    assert row[csv_columns(1).index("total")] == ""
    assert all(cell == "" for cell in row[-8:])


def test_error_block_against_limit(grid):
    params = Params(c_p=0.0, c_k=-1.0, gamma=2.0, alpha=0.5, epsilon=0.1)
    x = grid.axis_nodes
    rho = Field(grid=grid, values=(1 + 0.5 * np.cos(x)) / grid.volume)
    limit = LimitState(rho=Field.constant(grid, 1 / grid.volume))
    report = energy_report(FluidState(rho=rho, m=Field.zeros_vector(grid)), params, limit, DEFAULT_HOOKS)

    difference_sq = 0.25 * math.pi / grid.volume**2
    assert report.lgamma_err_sq == pytest.approx(difference_sq, rel=1e-12)
    assert report.neg_sobolev_sq == pytest.approx(difference_sq, rel=1e-12)
    assert report.mod_interaction == pytest.approx(difference_sq / 2, rel=1e-12)
    assert report.mod_kinetic == pytest.approx(0.0, abs=1e-20)
    assert report.d2_sq > 0
    assert report.dbl_momentum_sq == pytest.approx(0.0, abs=1e-12)
    assert all(cell != "" for cell in report.row(1))
