"""Epsilon sweeps: one limit run, one Euler-Riesz run per epsilon, and log-log rate fits."""

import logging
import math
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..config import RelaxConfig, config_hash
from ..energetics import (
    EnergyReport,
    LGammaNorm,
    NegSobolevNorm,
    energy_report,
    internal_energy_monitor,
    l1_momentum_constant,
    modulated_energy_terms,
    norm,
    theorem_lhs,
)
from ..errors import ConfigError, DegenerateDataError
from ..metrics import MetricHooks
from ..schema import Regime, TheoremPart
from ..solvers import Trajectory, run_er, run_fpme
from ..spectral import Field, PeriodicGrid
from ..state import AnalyticProfile, FluidState, LimitState, PhysicalConstants, initial_density, initial_state

logger = logging.getLogger(__name__)

# Points whose error is below this multiple of the truncation estimate are excluded from fits
RESOLUTION_MARGIN = 10.0
MIN_FIT_POINTS = 3
# Zero errors are replaced by this before taking logarithms
ERROR_FLOOR = float(np.finfo(float).eps)


class RateFit(BaseModel):
    """Least-squares line through ``(log eps, log error)``."""

    model_config = ConfigDict(frozen=True)

    slope: float
    intercept: float
    residual: float
    points: int
    floored: bool = False


def fit_rate(pairs: Sequence[tuple[float, float]]) -> RateFit:
    """Ordinary least squares on logarithms; ``residual`` is the RMS of the log residuals."""
    if len(pairs) < MIN_FIT_POINTS:
        raise DegenerateDataError(f"A rate fit needs at least {MIN_FIT_POINTS} points, got {len(pairs)}")
    epsilons = np.array([eps for eps, _ in pairs], dtype=float)
    errors = np.array([error for _, error in pairs], dtype=float)
    if np.any(epsilons <= 0) or np.any(errors < 0) or not np.all(np.isfinite(errors)):
        raise DegenerateDataError(f"Rate-fit data must be positive and finite, got {list(pairs)!r}")
    floored = bool(np.any(errors == 0))
    if floored:
        logger.warning(f"Zero errors replaced by {ERROR_FLOOR!r} before fitting")
        errors = np.maximum(errors, ERROR_FLOOR)
    x, y = np.log(epsilons), np.log(errors)
    slope, intercept = np.polyfit(x, y, 1)
    residual = math.sqrt(float(np.mean((y - (slope * x + intercept)) ** 2)))
    return RateFit(
        slope=float(slope),
        intercept=float(intercept),
        residual=residual,
        points=len(pairs),
        floored=floored,
    )


class SweepEntry(BaseModel):
    """Everything measured at one epsilon."""

    model_config = ConfigDict(frozen=True)

    epsilon: float
    steps: int
    series: dict[str, list[float]]
    aggregates: dict[str, float]
    headline_error: float
    momentum_error: float
    inequality_constant: float | None
    interaction_constant: float | None
    coercive: bool
    resolved: bool
    monitor: dict[str, float | bool] | None = None


class SweepResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    part: TheoremPart
    epsilons: list[float]
    times: list[float]
    entries: list[SweepEntry]
    truncation_error: float | None
    fit: RateFit | None
    momentum_fit: RateFit | None
    fit_status: str
    constant_ratio: float | None
    l1_momentum_constant: float | None
    monotone: bool
    metadata: dict[str, Any]

    @property
    def healthy(self) -> bool:
        return all(entry.coercive for entry in self.entries)


def _headline(
    part: TheoremPart,
    densities: Sequence[Field],
    limits: Sequence[Field],
    constants: PhysicalConstants,
    hooks: MetricHooks,
) -> float:
    """The swept error functional between two density series."""
    pairs = list(zip(densities, limits, strict=True))
    if part == TheoremPart.LEBESGUE:
        return math.sqrt(max(norm(a - b, LGammaNorm(gamma=constants.gamma)) ** 2 for a, b in pairs))
    sobolev = NegSobolevNorm(alpha=constants.alpha, d=constants.d)
    return math.sqrt(
        max(hooks.d2_squared(a, b) for a, b in pairs) + max(norm(a - b, sobolev) ** 2 for a, b in pairs)
    )


def _subsample(rho: Field, coarse: PeriodicGrid) -> Field:
    """Restrict a density from the doubled grid to the nodes it shares with ``coarse``."""
    return Field(grid=coarse, values=rho.values[(slice(None, None, 2),) * coarse.d])


def truncation_estimate(
    config: RelaxConfig,
    limit: Trajectory,
    part: TheoremPart,
    hooks: MetricHooks,
) -> float | None:
    """Spatial truncation error of the limit run, from a rerun with ``2n`` nodes.

    File-provided initial data cannot be resampled, so no estimate is made for it.
    """
    if not isinstance(config.initial, AnalyticProfile):
        logger.warning("Resolution gate skipped: initial data read from a file")
        return None
    coarse = limit.grid
    fine = PeriodicGrid(d=coarse.d, n=2 * coarse.n, length=coarse.length)
    constants = config.params.constants()
    rerun = run_fpme(
        initial_density(fine, config.initial),
        constants,
        config.run.policy,
        times=limit.times,
    )
    restricted = [_subsample(rho, coarse) for rho in rerun.densities()]
    estimate = _headline(part, limit.densities(), restricted, constants, hooks)
    logger.info(f"Truncation estimate with n={coarse.n}: {estimate!r}")
    return estimate


def _coercive(reports: Sequence[EnergyReport], constants: PhysicalConstants) -> bool:
    """Modulated free energy non-negative, and dominated by its internal part when attractive."""
    for report in reports:
        internal, interaction = report.mod_internal or 0.0, report.mod_interaction or 0.0
        if internal + interaction < 0 or (constants.c_k > 0 and internal < abs(interaction)):
            return False
    return True


def _sweep_point(
    epsilon: float,
    config: RelaxConfig,
    initial: FluidState,
    limit: Trajectory,
    part: TheoremPart,
    hooks: MetricHooks,
) -> tuple[SweepEntry, list[EnergyReport]]:
    params = config.params.at(epsilon)
    er = run_er(initial, params, config.run.policy, times=limit.times)
    lhs = theorem_lhs(er, limit, params, hooks, part)
    reports = [
        energy_report(state, params, limit_state, hooks)
        for state, limit_state in zip(er.snapshots, limit.snapshots, strict=True)
    ]

    inequality_constant = interaction_constant = None
    if len(limit.times) >= 3:
        modulated = modulated_energy_terms(er, limit, params)
        inequality_constant, interaction_constant = modulated.inequality_constant, modulated.interaction_constant

    coercive = _coercive(reports, params)
    if not coercive:
        logger.warning(f"eps={epsilon!r}: modulated free energy lost coercivity")
    monitor = internal_energy_monitor(er, params) if params.regime == Regime.PRESSURE_ATTRACTIVE else None
    entry = SweepEntry(
        epsilon=epsilon,
        steps=er.steps,
        series=lhs.series,
        aggregates=lhs.aggregates,
        headline_error=lhs.headline_error,
        momentum_error=lhs.momentum_error,
        inequality_constant=inequality_constant,
        interaction_constant=interaction_constant,
        coercive=coercive,
        resolved=True,
        monitor=monitor,
    )
    return entry, reports


def _fit_or_none(pairs: list[tuple[float, float]]) -> RateFit | None:
    return fit_rate(pairs) if len(pairs) >= MIN_FIT_POINTS else None


def run_sweep(config: RelaxConfig, threads: int = 1) -> tuple[SweepResult, list[list[EnergyReport]]]:
    """Sweep every configured epsilon against one shared limit run.

    Results are ordered by decreasing epsilon whatever order the pool finishes in.
    """
    constants = config.params.constants()
    part = config.run.part or constants.theorem_part
    if config.run.part is not None and config.run.part != constants.theorem_part:
        raise ConfigError(
            f"Part {config.run.part.value!r} does not apply to regime {constants.regime.value!r}",
            key="run.part",
        )
    if config.run.velocity != "well_prepared":
        raise ConfigError("Sweeps need well-prepared initial velocities", key="run.velocity")
    hooks = MetricHooks(geometry=config.run.geometry, d2_representation=config.run.d2_representation)

    grid = config.build_grid()
    initial = initial_state(grid, constants, config.initial, config.run.velocity)
    limit = run_fpme(LimitState(rho=initial.rho, time=0.0), constants, config.run.policy, times=config.run.times)
    truncation = truncation_estimate(config, limit, part, hooks) if config.run.resolution_gate else None

    epsilons = config.params.epsilons
    with ThreadPoolExecutor(max_workers=threads) as pool:
        outcomes = list(pool.map(lambda eps: _sweep_point(eps, config, initial, limit, part, hooks), epsilons))

    entries, reports = [], []
    for entry, entry_reports in outcomes:
        resolved = truncation is None or entry.headline_error >= RESOLUTION_MARGIN * truncation
        if not resolved:
            logger.warning(f"eps={entry.epsilon!r}: error {entry.headline_error!r} within truncation margin")
        entries.append(entry.model_copy(update={"resolved": resolved}))
        reports.append(entry_reports)

    usable = [entry for entry in entries if entry.resolved]
    fit = _fit_or_none([(entry.epsilon, entry.headline_error) for entry in usable])
    momentum_fit = _fit_or_none([(entry.epsilon, entry.momentum_error) for entry in usable])
    if fit is not None:
        fit_status = "fitted"
    elif len(entries) < MIN_FIT_POINTS:
        fit_status = "insufficient points"
    else:
        fit_status = "refused by resolution gate"
    if fit is not None:
        logger.info(f"Fitted slope {fit.slope!r} with log residual {fit.residual!r}")
    else:
        logger.warning(f"No rate fit: {fit_status}")

    constants_seen = [entry.inequality_constant for entry in entries if entry.inequality_constant]
    constant_ratio = max(constants_seen) / min(constants_seen) if constants_seen else None
    errors = [entry.headline_error for entry in usable]
    result = SweepResult(
        part=part,
        epsilons=epsilons,
        times=limit.times,
        entries=entries,
        truncation_error=truncation,
        fit=fit,
        momentum_fit=momentum_fit,
        fit_status=fit_status,
        constant_ratio=constant_ratio,
        l1_momentum_constant=l1_momentum_constant(limit, constants) if part == TheoremPart.LEBESGUE else None,
        monotone=all(a > b for a, b in zip(errors, errors[1:], strict=False)),
        metadata={
            "config_hash": config_hash(config),
            "seed": config.run.seed,
            "grid": {"d": grid.d, "n": grid.n, "length": grid.length},
            "metrics": hooks.metadata(),
        },
    )
    return result, reports
