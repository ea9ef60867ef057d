"""Left-hand sides of the relaxation-limit error bounds along a pair of trajectories."""

import logging
import math

import numpy as np
from pydantic import BaseModel, ConfigDict
from scipy.integrate import trapezoid

from ..metrics import DEFAULT_HOOKS, MetricHooks
from ..schema import TheoremPart
from ..solvers import Trajectory
from ..state import PhysicalConstants, limit_velocity
from .functionals import internal_energy
from .norms import L1Norm, LGammaNorm, NegSobolevNorm, norm

logger = logging.getLogger(__name__)

SERIES_BY_PART = {
    TheoremPart.WASSERSTEIN: ("d2_sq", "neg_sobolev_sq", "dbl_momentum_sq"),
    TheoremPart.LEBESGUE: ("lgamma_err_sq", "l1_momentum_err_sq"),
}


class TheoremSeries(BaseModel):
    """Error series at shared output times with sup-in-time and time-integrated aggregates."""

    model_config = ConfigDict(frozen=True)

    part: TheoremPart
    times: list[float]
    series: dict[str, list[float]]

    def sup(self, key: str) -> float:
        return max(self.series[key])

    def integral(self, key: str) -> float:
        if len(self.times) < 2:
            return 0.0
        return float(trapezoid(self.series[key], self.times))

    @property
    def aggregates(self) -> dict[str, float]:
        values = {}
        for key in self.series:
            values[f"sup_{key}"] = self.sup(key)
            values[f"int_{key}"] = self.integral(key)
        return values

    @property
    def headline_error(self) -> float:
        """Quantity whose slope in epsilon is fitted: the square root of the sup terms."""
        if self.part == TheoremPart.WASSERSTEIN:
            return math.sqrt(self.sup("d2_sq") + self.sup("neg_sobolev_sq"))
        return math.sqrt(self.sup("lgamma_err_sq"))

    @property
    def momentum_error(self) -> float:
        """Square root of the time-integrated momentum term."""
        key = "dbl_momentum_sq" if self.part == TheoremPart.WASSERSTEIN else "l1_momentum_err_sq"
        return math.sqrt(self.integral(key))


def theorem_lhs(
    er_traj: Trajectory,
    fpme_traj: Trajectory,
    params: PhysicalConstants,
    hooks: MetricHooks = DEFAULT_HOOKS,
    part: TheoremPart | None = None,
) -> TheoremSeries:
    er_traj.check_compatible(fpme_traj)
    part = part or params.theorem_part
    series: dict[str, list[float]] = {key: [] for key in SERIES_BY_PART[part]}

    for state, limit in zip(er_traj.snapshots, fpme_traj.snapshots, strict=True):
        difference = state.rho - limit.rho
        limit_momentum = limit_velocity(limit.rho, params) * limit.rho
        if part == TheoremPart.WASSERSTEIN:
            series["d2_sq"].append(hooks.d2_squared(state.rho, limit.rho))
            series["neg_sobolev_sq"].append(norm(difference, NegSobolevNorm(alpha=params.alpha, d=params.d)) ** 2)
            series["dbl_momentum_sq"].append(hooks.dbl_momentum(state.m, limit_momentum) ** 2)
        else:
            series["lgamma_err_sq"].append(norm(difference, LGammaNorm(gamma=params.gamma)) ** 2)
            series["l1_momentum_err_sq"].append(norm(state.m - limit_momentum, L1Norm()) ** 2)

    logger.debug(f"Computed {part.value} series over {len(er_traj.times)} instants")
    return TheoremSeries(part=part, times=list(er_traj.times), series=series)


def l1_momentum_constant(fpme_traj: Trajectory, params: PhysicalConstants) -> float | None:
    """``|T|^{1/gamma*} sup_t ||u||_inf`` linking the L1 momentum error to the density error; ``None`` for gamma = 1."""
    if params.gamma == 1:
        return None
    speed = max(limit_velocity(rho, params).max_abs() for rho in fpme_traj.densities())
    return fpme_traj.grid.volume ** ((params.gamma - 1) / params.gamma) * speed


def internal_energy_monitor(er_traj: Trajectory, params: PhysicalConstants) -> dict[str, float | bool]:
    """Interpolation data behind uniform-in-epsilon bounds on the internal energy."""
    theta = params.theta
    return {
        "theta": theta,
        "sup_theta_norm": max(norm(rho, LGammaNorm(gamma=theta)) for rho in er_traj.densities()),
        "gamma_threshold": params.gamma_threshold,
        "gamma_meets_threshold": bool(params.gamma >= params.gamma_threshold),
        "sup_internal_energy": max(internal_energy(rho, params.gamma) for rho in er_traj.densities()),
        "mass_drift": float(np.max(np.abs(np.asarray([rho.integral() for rho in er_traj.densities()]) - 1))),
    }
