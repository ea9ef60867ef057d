import numpy as np
import pytest
from deepdiff import DeepDiff
from pydantic import ValidationError

from relax_core.lab.metrics import DEFAULT_HOOKS, MetricHooks
from relax_core.lab.schema import Geometry, MeasureRepresentation
from relax_core.lab.spectral import Field, PeriodicGrid


def gaussian(grid, center=0.0, width=0.3):
    values = np.exp(-((grid.axis_nodes - center) ** 2) / (2 * width**2))
    return Field(grid=grid, values=values / grid.integrate(values))


def test_defaults():
    assert DEFAULT_HOOKS.geometry == Geometry.TORUS
    assert DEFAULT_HOOKS.d2_representation == MeasureRepresentation.HISTOGRAM
    assert DEFAULT_HOOKS.measure(gaussian(PeriodicGrid(n=16))).representation == MeasureRepresentation.HISTOGRAM


def test_metadata():
    hooks = MetricHooks(geometry=Geometry.LINE_SEGMENT, entropic_reg=0.1)
    expected = {
        "ground_distance": "euclidean",
        "geometry": "line_segment",
        "d2_representation": "histogram",
        "d2_solver_2d": "debiased sinkhorn, reg=0.1",
        "dbl_graph": "grid-adjacent edges",
        "dbl_momentum": "componentwise, root-sum-square",
    }

    assert not DeepDiff(hooks.metadata(), expected)


def test_unknown_fields_are_rejected():
    with pytest.raises(ValidationError):
        MetricHooks(solver="exact")


@pytest.mark.parametrize("geometry", list(Geometry))
def test_d2_squared_of_translation(geometry):
    grid = PeriodicGrid(n=64)
    hooks = MetricHooks(geometry=geometry)
    rho = gaussian(grid)
    shifted = Field(grid=grid, values=np.roll(rho.values, 3))

    assert hooks.d2_squared(rho, rho) == pytest.approx(0.0, abs=1e-14)
    assert hooks.d2_squared(rho, shifted) == pytest.approx((3 * grid.h) ** 2, rel=1e-4)


def test_d2_squared_in_two_dimensions_uses_sinkhorn():
    grid = PeriodicGrid(d=2, n=6)
    rho = Field.constant(grid, 1 / grid.volume)

    assert MetricHooks(entropic_reg=0.5).d2_squared(rho, rho) == pytest.approx(0.0, abs=1e-9)


def test_dbl_momentum_of_equal_fields():
    grid = PeriodicGrid(n=16)
    m = Field(grid=grid, values=np.sin(grid.nodes))

    assert DEFAULT_HOOKS.dbl_momentum(m, m) == 0.0
