import numpy as np
import pytest

from relax_core.lab.errors import GridMismatchError
from relax_core.lab.inequalities import random_measure
from relax_core.lab.metrics import (
    GridMeasure,
    adjacency_edges,
    bounded_lipschitz,
    bounded_lipschitz_vector,
    wasserstein2_torus_1d,
)
from relax_core.lab.schema import Geometry
from relax_core.lab.spectral import Field, PeriodicGrid


def point_mass(grid, node, mass=1.0, geometry=Geometry.LINE_SEGMENT):
    masses = np.zeros(grid.n)
    masses[node] = mass
    return GridMeasure.from_masses(grid, masses, geometry=geometry)


def test_two_points():
    grid = PeriodicGrid(n=20, length=2.0)
    result = bounded_lipschitz(point_mass(grid, 5), point_mass(grid, 8))

    assert result.value == pytest.approx(0.3, abs=1e-8)
    assert np.max(np.abs(result.potential)) <= 1.0
    assert result.gap <= 1e-6


def test_far_points_saturate_at_two():
    grid = PeriodicGrid(n=40, length=8.0)

    assert bounded_lipschitz(point_mass(grid, 0), point_mass(grid, 39)).value == pytest.approx(2.0, abs=1e-8)


def test_mass_mismatch():
    grid = PeriodicGrid(n=20, length=2.0)

    assert bounded_lipschitz(point_mass(grid, 5, mass=2.0), point_mass(grid, 5)).value == pytest.approx(1.0, abs=1e-8)


def test_identical_measures():
    grid = PeriodicGrid(n=16)
    mu = point_mass(grid, 3)
    result = bounded_lipschitz(mu, mu)

    assert result.value == 0.0
    assert result.gap == 0.0


def test_below_wasserstein():
    rng = np.random.default_rng(5)
    grid = PeriodicGrid(n=16)
    for _ in range(10):
        mu, nu = (random_measure(grid, rng, Geometry.TORUS) for _ in range(2))

        assert bounded_lipschitz(mu, nu).value <= wasserstein2_torus_1d(mu, nu) + 1e-8


@pytest.mark.parametrize("d, n", [(1, 32), (2, 8)])
@pytest.mark.parametrize("geometry", [Geometry.LINE_SEGMENT, Geometry.TORUS])
def test_dual_bound_brackets_value(d, n, geometry):
    rng = np.random.default_rng(13)
    grid = PeriodicGrid(d=d, n=n, length=3.0)
    for _ in range(5):
        mu, nu = (random_measure(grid, rng, geometry) for _ in range(2))
        result = bounded_lipschitz(mu, nu)

        assert result.value <= result.upper_bound
        assert result.gap == pytest.approx(result.upper_bound - result.value, abs=1e-15)
        assert result.gap <= 1e-6
        assert result.upper_bound <= np.sum(np.abs(mu.masses - nu.masses)) + 1e-12


@pytest.mark.parametrize(
    "geometry, edges",
    [
        (Geometry.LINE_SEGMENT, 7),
        (Geometry.TORUS, 8),
    ],
)
def test_adjacency_edges(geometry, edges):
    heads, tails = adjacency_edges(point_mass(PeriodicGrid(n=8), 0, geometry=geometry))

    assert len(heads) == len(tails) == edges


def test_vector_distance_is_root_sum_square():
    grid = PeriodicGrid(n=20, length=2.0)
    a = Field.zeros_vector(grid)
    values = np.zeros((1, grid.n))
    values[0, 5] = 1 / grid.h
    b = Field(grid=grid, values=values)

    assert bounded_lipschitz_vector(a, b, Geometry.LINE_SEGMENT) == pytest.approx(1.0, abs=1e-8)


def test_grids_must_match():
    with pytest.raises(GridMismatchError):
        bounded_lipschitz(point_mass(PeriodicGrid(n=8), 0), point_mass(PeriodicGrid(n=16), 0))
