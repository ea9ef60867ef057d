"""Grid measures: nodal weights with a geometry and a quantile representation."""

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from ..errors import MassMismatchError
from ..schema import Geometry, MeasureRepresentation
from ..spectral import Field, PeriodicGrid

NEGATIVE_WEIGHT_TOLERANCE = 1e-14
UNIT_MASS_TOLERANCE = 1e-10


class GridMeasure(BaseModel):
    """Weights are densities per node; the mass at a node is ``weight * h^d``."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    grid: PeriodicGrid
    weights: np.ndarray
    geometry: Geometry = Geometry.TORUS
    representation: MeasureRepresentation = MeasureRepresentation.ATOMIC

    @field_validator("weights", mode="before")
    @classmethod
    def _freeze(cls, weights: np.ndarray) -> np.ndarray:
        array = np.array(weights, dtype=float)
        array.setflags(write=False)
        return array

    @model_validator(mode="after")
    def _check_shape(self):
        if self.weights.shape != self.grid.shape:
            raise ValueError(f"Weights of shape {self.weights.shape!r} do not fit grid shape {self.grid.shape!r}")
        return self

    @classmethod
    def from_field(
        cls,
        field: Field,
        geometry: Geometry = Geometry.TORUS,
        representation: MeasureRepresentation = MeasureRepresentation.ATOMIC,
    ) -> "GridMeasure":
        if field.is_vector:
            raise ValueError("A grid measure needs a scalar field")
        return cls(grid=field.grid, weights=field.values, geometry=geometry, representation=representation)

    @classmethod
    def from_masses(
        cls,
        grid: PeriodicGrid,
        masses: np.ndarray,
        geometry: Geometry = Geometry.TORUS,
        representation: MeasureRepresentation = MeasureRepresentation.ATOMIC,
    ) -> "GridMeasure":
        weights = np.asarray(masses) / grid.cell_volume
        return cls(grid=grid, weights=weights, geometry=geometry, representation=representation)

    @property
    def masses(self) -> np.ndarray:
        return self.weights * self.grid.cell_volume

    def probability_masses(self) -> np.ndarray:
        """Masses of a probability measure, tiny negative weights clipped to zero."""
        minimum = float(np.min(self.weights))
        if minimum < -NEGATIVE_WEIGHT_TOLERANCE:
            raise ValueError(f"Negative weight {minimum!r} in a probability measure")
        masses = np.maximum(self.weights, 0.0) * self.grid.cell_volume
        total = float(np.sum(masses))
        if abs(total - 1) > UNIT_MASS_TOLERANCE:
            raise MassMismatchError(f"Probability measure has mass {total!r}")
        return masses


def geodesic_difference(x: np.ndarray, y: np.ndarray, geometry: Geometry, length: float) -> np.ndarray:
    """Per-axis separation, wrapped to the shortest way round on the torus."""
    delta = np.abs(x - y)
    if geometry == Geometry.TORUS:
        delta = np.minimum(delta, length - delta)
    return delta
