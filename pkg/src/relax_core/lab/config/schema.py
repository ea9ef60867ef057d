"""Run configuration document: ``[params]``, ``[grid]``, ``[initial]`` and ``[run]``."""

import math
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, PositiveFloat, PositiveInt, field_validator, model_validator

from ..schema import Geometry, MeasureRepresentation, TheoremPart
from ..solvers import StepPolicy, output_times
from ..solvers.trajectory import DEFAULT_OUTPUT_COUNT
from ..spectral import PeriodicGrid
from ..state import AnalyticProfile, InitialDataSpec, Params, PhysicalConstants

FILE_PREFIX = "file:"


class ParamsSection(PhysicalConstants):
    """Physical constants plus one relaxation parameter or a sweep list."""

    epsilon: PositiveFloat | list[PositiveFloat]

    @field_validator("epsilon")
    @classmethod
    def _check_epsilon(cls, epsilon: float | list[float]) -> float | list[float]:
        if isinstance(epsilon, list):
            if not epsilon:
                raise ValueError("epsilon list is empty")
            if any(a <= b for a, b in zip(epsilon, epsilon[1:], strict=False)):
                raise ValueError(f"epsilon list must be strictly decreasing, got {epsilon!r}")
        return epsilon

    @property
    def epsilons(self) -> list[float]:
        return list(self.epsilon) if isinstance(self.epsilon, list) else [self.epsilon]

    def constants(self) -> PhysicalConstants:
        return PhysicalConstants(c_p=self.c_p, c_k=self.c_k, gamma=self.gamma, d=self.d, alpha=self.alpha)

    def at(self, epsilon: float) -> Params:
        return Params(c_p=self.c_p, c_k=self.c_k, gamma=self.gamma, d=self.d, alpha=self.alpha, epsilon=epsilon)


class GridSection(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    n: int = 256
    length: PositiveFloat = 2 * math.pi


class RunSection(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    t_end: float = 1.0
    output_every: PositiveFloat | None = None
    dt_policy: Literal["adaptive"] | StepPolicy = "adaptive"
    velocity: Literal["well_prepared", "rest"] = "well_prepared"
    seed: int = 0
    part: TheoremPart | None = None
    geometry: Geometry = Geometry.TORUS
    d2_representation: MeasureRepresentation = MeasureRepresentation.HISTOGRAM
    resolution_gate: bool = True
    threads: PositiveInt | None = None

    @field_validator("t_end")
    @classmethod
    def _check_t_end(cls, t_end: float) -> float:
        if t_end < 0:
            raise ValueError(f"t_end must be non-negative, got {t_end!r}")
        return t_end

    @property
    def policy(self) -> StepPolicy:
        return StepPolicy() if self.dt_policy == "adaptive" else self.dt_policy

    @property
    def times(self) -> list[float]:
        return output_times(self.t_end, self.output_every, DEFAULT_OUTPUT_COUNT)


class RelaxConfig(BaseModel):
    """Validated run configuration.

    ``initial`` also accepts a bare profile name (``"bump"``) or ``"file:<path>"``.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    params: ParamsSection
    grid: GridSection = GridSection()
    initial: InitialDataSpec = AnalyticProfile()
    run: RunSection = RunSection()

    @field_validator("initial", mode="before")
    @classmethod
    def _expand_initial(cls, value: Any) -> Any:
        if isinstance(value, str):
            if value.startswith(FILE_PREFIX):
                return {"kind": "file", "path": value.removeprefix(FILE_PREFIX)}
            return {"kind": "analytic", "profile": value}
        if isinstance(value, dict) and "kind" not in value:
            return {"kind": "file" if "path" in value else "analytic", **value}
        return value

    @model_validator(mode="after")
    def _check_grid(self):
        # raises on odd or tiny n with the grid's own message
        self.build_grid()
        return self

    def build_grid(self) -> PeriodicGrid:
        return PeriodicGrid(d=self.params.d, n=self.grid.n, length=self.grid.length)

    def astuple(self) -> tuple[ParamsSection, GridSection, InitialDataSpec, RunSection]:
        return self.params, self.grid, self.initial, self.run
