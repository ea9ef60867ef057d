"""Immutable nodal fields with lazily cached spectral coefficients."""

from functools import cached_property
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from .grid import PeriodicGrid


class Field(BaseModel):
    """Scalar values of shape ``grid.shape`` or vector values of shape ``(d, *grid.shape)``."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    grid: PeriodicGrid
    values: np.ndarray

    @field_validator("values", mode="before")
    @classmethod
    def _freeze(cls, values: Any) -> np.ndarray:
        array = np.array(values, dtype=float)
        array.setflags(write=False)
        return array

    @model_validator(mode="after")
    def _check_shape(self):
        vector_shape = (self.grid.d, *self.grid.shape)
        if self.values.shape not in (self.grid.shape, vector_shape):
            raise ValueError(
                f"Field values of shape {self.values.shape!r} do not fit a grid of shape {self.grid.shape!r}"
            )
        return self

    @classmethod
    def constant(cls, grid: PeriodicGrid, value: float) -> "Field":
        return cls(grid=grid, values=np.full(grid.shape, float(value)))

    @classmethod
    def zeros_vector(cls, grid: PeriodicGrid) -> "Field":
        return cls(grid=grid, values=np.zeros((grid.d, *grid.shape)))

    @property
    def is_vector(self) -> bool:
        return self.values.ndim == self.grid.d + 1

    @cached_property
    def spectral(self) -> np.ndarray:
        """Coefficients in the grid normalization, computed once."""
        return self.grid.forward(self.values)

    @property
    def spectral_cached(self) -> bool:
        return "spectral" in self.__dict__

    def with_values(self, values: np.ndarray) -> "Field":
        return Field(grid=self.grid, values=values)

    def component(self, k: int) -> "Field":
        if not self.is_vector:
            raise ValueError("component() requires a vector field")
        return self.with_values(self.values[k])

    def integral(self) -> np.ndarray | float:
        """Grid integral; one entry per component for vector fields."""
        return self.grid.integrate(self.values)

    def mean(self) -> np.ndarray | float:
        return self.integral() / self.grid.volume

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.values)))

    # --- arithmetic ---

    def _operand(self, other: Any) -> Any:
        if isinstance(other, Field):
            if not self.grid.matches(other.grid):
                raise ValueError("Fields live on different grids")
            return other.values
        return other

    def __add__(self, other: Any) -> "Field":
        return self.with_values(self.values + self._operand(other))

    def __radd__(self, other: Any) -> "Field":
        return self.__add__(other)

    def __sub__(self, other: Any) -> "Field":
        return self.with_values(self.values - self._operand(other))

    def __rsub__(self, other: Any) -> "Field":
        return self.with_values(self._operand(other) - self.values)

    def __mul__(self, other: Any) -> "Field":
        return self.with_values(self.values * self._operand(other))

    def __rmul__(self, other: Any) -> "Field":
        return self.__mul__(other)

    def __truediv__(self, other: Any) -> "Field":
        return self.with_values(self.values / self._operand(other))

    def __neg__(self) -> "Field":
        return self.with_values(-self.values)
