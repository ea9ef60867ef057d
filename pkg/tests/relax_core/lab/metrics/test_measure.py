import numpy as np
import pytest
from pydantic import ValidationError

from relax_core.lab.errors import MassMismatchError
from relax_core.lab.metrics import GridMeasure, geodesic_difference
from relax_core.lab.schema import Geometry
from relax_core.lab.spectral import Field, PeriodicGrid


def test_masses_scale_by_cell_volume():
    grid = PeriodicGrid(n=8, length=4.0)
    measure = GridMeasure.from_field(Field.constant(grid, 0.25))

    assert measure.masses.sum() == pytest.approx(1.0)
    assert np.allclose(GridMeasure.from_masses(grid, measure.masses).weights, 0.25)


def test_weights_are_read_only():
    grid = PeriodicGrid(n=8)
    measure = GridMeasure(grid=grid, weights=np.ones(8))

    with pytest.raises(ValueError):
        measure.weights[0] = 2.0


def test_shape_must_match_grid():
    with pytest.raises(ValidationError):
        GridMeasure(grid=PeriodicGrid(n=8), weights=np.ones(4))


def test_vector_fields_are_rejected():
    grid = PeriodicGrid(n=8)

    with pytest.raises(ValueError, match="scalar"):
        GridMeasure.from_field(Field.zeros_vector(grid))


@pytest.mark.parametrize(
    "weights, error",
    [
        ([2.0, -1e-3, 0.0, 0.0], ValueError),
        ([1.0, 1.0, 0.0, 0.0], MassMismatchError),
    ],
)
def test_probability_masses_are_checked(weights, error):
    grid = PeriodicGrid(n=4, length=4.0)

    with pytest.raises(error):
        GridMeasure(grid=grid, weights=np.array(weights)).probability_masses()


def test_roundoff_negatives_are_clipped():
    grid = PeriodicGrid(n=4, length=4.0)
    masses = GridMeasure(grid=grid, weights=np.array([1.0, -1e-16, 0.0, 0.0])).probability_masses()

    assert masses.min() == 0.0


@pytest.mark.parametrize(
    "geometry, expected",
    [
        (Geometry.LINE_SEGMENT, 0.9),
        (Geometry.TORUS, 0.1),
    ],
)
def test_geodesic_difference(geometry, expected):
    assert geodesic_difference(np.array(0.45), np.array(-0.45), geometry, 1.0) == pytest.approx(expected)
