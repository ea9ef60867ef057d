"""Exceptions raised by the relaxation lab."""

from typing import Any


class ConfigError(ValueError):
    """A configuration document or parameter set failed validation."""

    def __init__(self, message: str, key: str | None = None):
        super().__init__(message)
        self.key = key


class RangeError(ValueError):
    """An exponent or parameter lies outside its supported range."""


class VacuumError(ValueError):
    """A density is too close to vacuum for a logarithmic quantity."""


class MassMismatchError(ValueError):
    """Two densities that must share their mass do not."""


class MeanZeroError(ValueError):
    """An operation defined on mean-zero fields received a field with a mean."""


class GeometryError(ValueError):
    """A metric was asked for on a geometry it does not support."""


class GridMismatchError(ValueError):
    """Two fields or trajectories live on different grids or output times."""


class BoundaryError(ValueError):
    """A centered time difference was requested at a trajectory endpoint."""


class DegenerateDataError(ValueError):
    """Rate-fit data is degenerate (too few points or non-positive values)."""


class InstabilityError(RuntimeError):
    """The blow-up guard tripped during time stepping."""

    def __init__(self, message: str, time: float | None = None):
        super().__init__(message)
        self.time = time


class ConvergenceError(RuntimeError):
    """An iterative solver stopped at its cap before meeting its tolerance."""

    def __init__(self, message: str, violation: float | None = None):
        super().__init__(message)
        self.violation = violation


class SolverGapError(RuntimeError):
    """A linear program returned a certificate with an unacceptable duality gap."""

    def __init__(self, message: str, gap: float | None = None):
        super().__init__(message)
        self.gap = gap


class DiscretizationError(RuntimeError):
    """A discretization failed its self-convergence check."""


def error_payload(error: BaseException) -> dict[str, Any]:
    """Machine-readable description of an error, as emitted by the CLI."""
    return {
        "error": type(error).__name__,
        "message": str(error),
        "key": getattr(error, "key", None),
    }
