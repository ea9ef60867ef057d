from .config import RelaxConfig, load_config, parse_config
from .errors import (
    BoundaryError,
    ConfigError,
    ConvergenceError,
    DegenerateDataError,
    DiscretizationError,
    GeometryError,
    GridMismatchError,
    InstabilityError,
    MassMismatchError,
    MeanZeroError,
    RangeError,
    SolverGapError,
    VacuumError,
)
from .solvers import run_er, run_fpme
from .spectral import Field, PeriodicGrid
from .state import FluidState, LimitState, Params, PhysicalConstants

__all__ = [
    BoundaryError,
    ConfigError,
    ConvergenceError,
    DegenerateDataError,
    DiscretizationError,
    Field,
    FluidState,
    GeometryError,
    GridMismatchError,
    InstabilityError,
    LimitState,
    MassMismatchError,
    MeanZeroError,
    Params,
    PeriodicGrid,
    PhysicalConstants,
    RangeError,
    RelaxConfig,
    SolverGapError,
    VacuumError,
    load_config,
    parse_config,
    run_er,
    run_fpme,
]
