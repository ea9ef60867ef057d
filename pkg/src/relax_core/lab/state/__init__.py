"""Parameters, states and initial data."""

from .initial import (
    AnalyticProfile,
    FileProfile,
    InitialDataSpec,
    initial_density,
    initial_state,
    limit_velocity,
    well_prepared_velocity,
)
from .params import Params, PhysicalConstants, is_well_posed
from .potential import (
    internal_density,
    internal_derivative,
    pressure,
    relative_internal_density,
    relative_internal_lower_bound,
)
from .states import FluidState, LimitState, check_density, velocity

__all__ = [
    AnalyticProfile,
    FileProfile,
    FluidState,
    InitialDataSpec,
    LimitState,
    Params,
    PhysicalConstants,
    check_density,
    initial_density,
    initial_state,
    internal_density,
    internal_derivative,
    is_well_posed,
    limit_velocity,
    pressure,
    relative_internal_density,
    relative_internal_lower_bound,
    velocity,
    well_prepared_velocity,
]
