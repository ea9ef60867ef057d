"""Step policies, output-time marching and stored trajectories."""

import logging
import math
from collections.abc import Callable, Mapping, Sequence
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, PositiveFloat, model_validator

from ..errors import BoundaryError, GridMismatchError, InstabilityError
from ..spectral import Field, PeriodicGrid
from ..state import FluidState, LimitState, PhysicalConstants, velocity

logger = logging.getLogger(__name__)

# Blow-up guard on max|u| and max rho
BLOW_UP_THRESHOLD = 1e6

DEFAULT_OUTPUT_COUNT = 50

type State = FluidState | LimitState
type Observer = Callable[[State], Mapping[str, float]]


class StepPolicy(BaseModel):
    """Adaptive time-step controls shared by both solvers."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    cfl_constant: PositiveFloat = 0.4
    epsilon_fraction: PositiveFloat = 0.25
    parabolic_constant: PositiveFloat = 0.2
    dt_min: PositiveFloat = 1e-9
    dt_max: PositiveFloat = 0.05

    @model_validator(mode="after")
    def _check_bounds(self):
        if self.dt_min > self.dt_max:
            raise ValueError(f"dt_min={self.dt_min!r} exceeds dt_max={self.dt_max!r}")
        return self


class Trajectory(BaseModel):
    """Snapshots at output instants plus observer time series."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: Literal["er", "fpme"]
    params: PhysicalConstants
    times: list[float]
    snapshots: list[FluidState] | list[LimitState]
    series: dict[str, list[float]] = {}
    steps: int = 0

    @property
    def grid(self) -> PeriodicGrid:
        return self.snapshots[0].grid

    @property
    def final(self) -> State:
        return self.snapshots[-1]

    def densities(self) -> list[Field]:
        return [snapshot.rho for snapshot in self.snapshots]

    def check_compatible(self, other: "Trajectory") -> None:
        """Raise unless both trajectories share grid and output instants."""
        if not self.grid.matches(other.grid):
            raise GridMismatchError(f"Grids differ: {self.grid!r} vs {other.grid!r}")
        if len(self.times) != len(other.times) or not np.allclose(self.times, other.times, rtol=0, atol=1e-12):
            raise GridMismatchError("Trajectories do not share output times")


def output_times(t_end: float, output_every: float | None = None, count: int = DEFAULT_OUTPUT_COUNT) -> list[float]:
    """Uniform output instants covering ``[0, t_end]`` including both ends."""
    if t_end < 0:
        raise ValueError(f"t_end must be non-negative, got {t_end!r}")
    if t_end == 0:
        return [0.0]
    if output_every is not None:
        intervals = round(t_end / output_every)
        if intervals < 1 or not math.isclose(intervals * output_every, t_end, rel_tol=1e-9):
            raise ValueError(f"output_every={output_every!r} does not divide t_end={t_end!r}")
        count = intervals + 1
    return [float(t) for t in np.linspace(0.0, t_end, count)]


def guard(state: State) -> None:
    """Raise ``InstabilityError`` on non-finite values or blow-up."""
    rho_max = float(np.max(state.rho.values))
    speed = float(np.max(np.abs(velocity(state).values))) if isinstance(state, FluidState) else 0.0
    if not (np.isfinite(rho_max) and np.isfinite(speed)) or max(rho_max, speed) > BLOW_UP_THRESHOLD:
        raise InstabilityError(
            f"Blow-up at t={state.time!r}: max rho={rho_max!r}, max |u|={speed!r}",
            time=state.time,
        )


def march[S: (FluidState, LimitState)](
    initial: S,
    times: Sequence[float],
    step: Callable[[S, float], S],
    time_step: Callable[[S], float],
    policy: StepPolicy,
    observers: Sequence[Observer] = (),
) -> tuple[list[S], dict[str, list[float]], int]:
    """Advance ``initial`` through ``times``, landing exactly on every output instant."""
    state = initial
    snapshots = [initial]
    series: dict[str, list[float]] = {}
    steps = 0

    def observe(snapshot: S) -> None:
        for observer in observers:
            for key, value in observer(snapshot).items():
                series.setdefault(key, []).append(float(value))

    observe(initial)
    for target in times[1:]:
        while state.time < target:
            remaining = target - state.time
            dt = time_step(state)
            if dt < policy.dt_min:
                raise InstabilityError(f"Step size {dt!r} fell below dt_min at t={state.time!r}", time=state.time)
            if dt >= remaining:
                dt = remaining
            elif dt > remaining / 2:
                dt = remaining / 2
            state = step(state, dt)
            if dt == remaining:
                state = state.model_copy(update={"time": target})
            steps += 1
            guard(state)
        logger.debug(f"Reached output t={target!r} after {steps} steps")
        snapshots.append(state)
        observe(state)
    return snapshots, series, steps


def centered_time_derivative(values: Sequence[np.ndarray], times: Sequence[float], index: int) -> np.ndarray:
    """Second-order difference of a stored series at ``index``; endpoints are one-sided."""
    count = len(times)
    if count < 3:
        raise BoundaryError(f"Need at least three stored instants, got {count}")
    if 0 < index < count - 1:
        return (values[index + 1] - values[index - 1]) / (times[index + 1] - times[index - 1])
    if index == 0:
        delta = times[1] - times[0]
        return (-3 * values[0] + 4 * values[1] - values[2]) / (2 * delta)
    delta = times[-1] - times[-2]
    return (3 * values[-1] - 4 * values[-2] + values[-3]) / (2 * delta)
