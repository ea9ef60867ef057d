import math

import numpy as np
import pytest

from relax_core.lab.spectral import Field, PeriodicGrid, transform_forward, transform_inverse


@pytest.mark.parametrize("n", [16, 32, 64])
@pytest.mark.parametrize("d", [1, 2])
def test_grid_tables(d, n):
    grid = PeriodicGrid(d=d, n=n)

    assert grid.shape == (n,) * d
    assert grid.size == n**d
    assert np.count_nonzero(grid.kmag == 0) == 1
    assert np.allclose(np.diff(grid.axis_nodes), grid.h)
    assert grid.nodes.shape == (d, *grid.shape)


@pytest.mark.parametrize("n", [15, 8, 0])
def test_grid_rejects_odd_or_small_n(n):
    with pytest.raises(ValueError):
        PeriodicGrid(n=n)


def test_constant_has_only_zero_mode():
    grid = PeriodicGrid(n=32)
    coefficients = transform_forward(Field.constant(grid, 1.0))

    assert coefficients[0] == pytest.approx(1.0)
    assert np.max(np.abs(coefficients[1:])) < 1e-14


def test_cosine_has_half_coefficients():
    grid = PeriodicGrid(n=32)
    coefficients = transform_forward(Field(grid=grid, values=np.cos(grid.axis_nodes)))

    assert coefficients[1] == pytest.approx(0.5, abs=1e-14)
    assert coefficients[-1] == pytest.approx(0.5, abs=1e-14)
    others = np.delete(coefficients, [1, grid.n - 1])
    assert np.max(np.abs(others)) < 1e-14


def test_forward_matches_direct_summation():
    grid = PeriodicGrid(n=16, length=3.0)
    rng = np.random.default_rng(0)
    values = rng.normal(size=grid.n)
    x = grid.axis_nodes
    xi = grid.wavenumbers[0]
    direct = np.array([np.sum(values * np.exp(-1j * k * x)) for k in xi]) / grid.n

    assert np.allclose(transform_forward(Field(grid=grid, values=values)), direct, atol=1e-13)


@pytest.mark.parametrize("d", [1, 2])
def test_round_trip(d):
    grid = PeriodicGrid(d=d, n=32)
    values = np.random.default_rng(1).normal(size=grid.shape)
    back = transform_inverse(grid.forward(values), grid).values

    assert np.max(np.abs(back - values)) < 1e-12 * np.max(np.abs(values))


def test_mean_is_zero_mode():
    grid = PeriodicGrid(n=64, length=5.0)
    f = Field(grid=grid, values=2.0 + np.sin(grid.axis_nodes * grid.fundamental_wavenumber))

    assert f.mean() == pytest.approx(f.spectral[0].real, rel=1e-12)
    assert f.integral() == pytest.approx(2.0 * grid.volume, rel=1e-12)


def test_field_rejects_wrong_shape():
    grid = PeriodicGrid(n=16)
    with pytest.raises(ValueError):
        Field(grid=grid, values=np.zeros(17))


def test_field_arithmetic_requires_matching_grids():
    a = Field.constant(PeriodicGrid(n=16), 1.0)
    b = Field.constant(PeriodicGrid(n=32), 1.0)
    with pytest.raises(ValueError):
        a + b


def test_field_values_are_frozen():
    f = Field.constant(PeriodicGrid(n=16), 1.0)
    with pytest.raises(ValueError):
        f.values[0] = 2.0


def test_default_length_is_two_pi():
    assert PeriodicGrid(n=16).length == pytest.approx(2 * math.pi)


@pytest.mark.parametrize("d", [1, 2])
def test_parseval_on_random_fields(d):
    grid = PeriodicGrid(d=d, n=32, length=3.0)
    rng = np.random.default_rng(7)
    for _ in range(100):
        values = rng.normal(size=grid.shape)
        coefficients = transform_forward(Field(grid=grid, values=values))

        nodal = grid.integrate(values**2)
        spectral = grid.volume * np.sum(np.abs(coefficients) ** 2)
        assert nodal == pytest.approx(spectral, rel=1e-12)
