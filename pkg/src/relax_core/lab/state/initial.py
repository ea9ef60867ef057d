"""Initial-data library and well-prepared initialization."""

import logging
from pathlib import Path
from typing import Annotated, Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Discriminator, PositiveInt, confloat

from ..errors import VacuumError
from ..spectral import Field, PeriodicGrid, riesz_force, spectral_gradient
from .params import PhysicalConstants
from .potential import internal_derivative
from .states import FluidState, check_density

logger = logging.getLogger(__name__)

# gamma = 1 log-derivatives need this many floors of headroom
LOG_FLOOR_MULTIPLE = 10.0

# Periodic images summed when building Gaussian bumps
GAUSSIAN_IMAGES = 2


class AnalyticProfile(BaseModel):
    """Named analytic density: ``bump`` (cosine products) or ``gaussian`` (periodized)."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: Literal["analytic"] = "analytic"
    profile: Literal["bump", "gaussian"] = "bump"
    amplitude: confloat(ge=0, le=0.9) = 0.5
    mode: PositiveInt = 1


class FileProfile(BaseModel):
    """Nodal density stored as a ``.npy`` array on the run grid."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: Literal["file"] = "file"
    path: Path


InitialDataSpec = Annotated[AnalyticProfile | FileProfile, Discriminator("kind")]


def _bump(grid: PeriodicGrid, amplitude: float, mode: int) -> np.ndarray:
    k = mode * grid.fundamental_wavenumber
    return np.prod(1 + amplitude * np.cos(k * grid.nodes), axis=0) / grid.volume


def _gaussian(grid: PeriodicGrid, amplitude: float, mode: int) -> np.ndarray:
    sigma = grid.length / (8 * mode)
    shifts = grid.length * np.arange(-GAUSSIAN_IMAGES, GAUSSIAN_IMAGES + 1)
    per_axis = np.sum(np.exp(-((grid.nodes[..., None] - shifts) ** 2) / (2 * sigma**2)), axis=-1)
    bump = np.prod(per_axis, axis=0)
    bump /= grid.integrate(bump)
    return (1 - amplitude) / grid.volume + amplitude * bump


def _from_file(grid: PeriodicGrid, path: Path) -> np.ndarray:
    values = np.load(path)
    if values.shape != grid.shape:
        raise ValueError(f"Array in {str(path)!r} has shape {values.shape!r}, grid expects {grid.shape!r}")
    mass = grid.integrate(values)
    if abs(mass - 1) > 1e-10:
        logger.info(f"Renormalizing density from {str(path)!r} (mass {mass!r})")
    return values / mass


def initial_density(grid: PeriodicGrid, spec: AnalyticProfile | FileProfile) -> Field:
    if isinstance(spec, FileProfile):
        values = _from_file(grid, spec.path)
    elif spec.profile == "bump":
        values = _bump(grid, spec.amplitude, spec.mode)
    else:
        values = _gaussian(grid, spec.amplitude, spec.mode)
    rho = Field(grid=grid, values=values)
    check_density(rho)
    return rho


def limit_velocity(rho: Field, params: PhysicalConstants) -> Field:
    """Constitutive velocity ``u = -c_P grad U'(rho) + c_K grad Lambda^{alpha-d} rho``.

    With this sign the continuity equation reproduces
    ``d_t rho + c_K div(rho grad Lambda^{alpha-d} rho) = c_P Laplacian rho^gamma``.
    """
    u = Field.zeros_vector(rho.grid)
    if params.c_p > 0:
        if params.gamma == 1:
            floor = LOG_FLOOR_MULTIPLE * rho.grid.density_floor
            minimum = float(np.min(rho.values))
            if minimum < floor:
                raise VacuumError(f"Density minimum {minimum!r} below {floor!r}; log-derivative is unreliable")
        potential = rho.with_values(internal_derivative(rho.values, params.gamma))
        u = u - params.c_p * spectral_gradient(potential)
    if params.c_k != 0:
        u = u + params.c_k * riesz_force(rho, params.alpha, params.d)
    return u


def well_prepared_velocity(rho0: Field, params: PhysicalConstants) -> Field:
    """Initial velocity that removes the initial-layer terms of the error bound."""
    check_density(rho0)
    return limit_velocity(rho0, params)


def initial_state(
    grid: PeriodicGrid,
    params: PhysicalConstants,
    spec: AnalyticProfile | FileProfile,
    velocity: Literal["well_prepared", "rest"] | Field = "well_prepared",
) -> FluidState:
    rho = initial_density(grid, spec)
    if isinstance(velocity, Field):
        u = velocity
    elif velocity == "rest":
        u = Field.zeros_vector(grid)
    else:
        u = well_prepared_velocity(rho, params)
    return FluidState(rho=rho, m=u * rho, time=0.0)
