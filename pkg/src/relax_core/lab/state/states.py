"""Fluid and limit states and the velocity recovered from them."""

import logging

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from ..errors import MassMismatchError, VacuumError
from ..spectral import Field, PeriodicGrid

logger = logging.getLogger(__name__)

MASS_TOLERANCE = 1e-10


class FluidState(BaseModel):
    """Density and momentum ``m = rho u`` of the Euler-Riesz system."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    rho: Field
    m: Field
    time: float = 0.0

    @model_validator(mode="after")
    def _check_fields(self):
        if self.rho.is_vector or not self.m.is_vector:
            raise ValueError("FluidState expects a scalar density and a vector momentum")
        if not self.rho.grid.matches(self.m.grid):
            raise ValueError("Density and momentum live on different grids")
        return self

    @property
    def grid(self) -> PeriodicGrid:
        return self.rho.grid

    @property
    def mass(self) -> float:
        return float(self.rho.integral())

    @property
    def total_momentum(self) -> np.ndarray:
        return np.atleast_1d(self.m.integral())


class LimitState(BaseModel):
    """Density of the fractional porous-medium limit."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    rho: Field
    time: float = 0.0

    @model_validator(mode="after")
    def _check_fields(self):
        if self.rho.is_vector:
            raise ValueError("LimitState expects a scalar density")
        return self

    @property
    def grid(self) -> PeriodicGrid:
        return self.rho.grid

    @property
    def mass(self) -> float:
        return float(self.rho.integral())


def check_density(rho: Field, floor_multiple: float = 1.0) -> None:
    """Raise unless ``rho`` has unit mass and stays above ``floor_multiple`` floors."""
    mass = float(rho.integral())
    if abs(mass - 1) > MASS_TOLERANCE:
        raise MassMismatchError(f"Density has mass {mass!r}, expected 1")
    floor = floor_multiple * rho.grid.density_floor
    minimum = float(np.min(rho.values))
    if minimum < floor:
        raise VacuumError(f"Density minimum {minimum!r} is below the floor {floor!r}")


def velocity(state: FluidState) -> Field:
    """``u = m / max(rho, rho_min)``."""
    denominator = np.maximum(state.rho.values, state.grid.density_floor)
    return state.m.with_values(state.m.values / denominator)
