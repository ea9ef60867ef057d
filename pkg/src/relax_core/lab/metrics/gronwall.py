"""Grönwall bound on the Wasserstein error along stored trajectories."""

import logging
import math

import numpy as np
from pydantic import BaseModel, ConfigDict
from scipy.integrate import cumulative_trapezoid

from ..errors import GeometryError
from ..solvers import Trajectory, limit_velocity
from ..spectral import Field, spectral_gradient
from ..state import velocity
from .hooks import DEFAULT_HOOKS, MetricHooks

logger = logging.getLogger(__name__)

# Squared distances below this count as exact agreement
LHS_ROUNDOFF = 1e-20


class LemmaD2Report(BaseModel):
    """Both sides of ``d_2^2(t) <= 2 e^{2 sqrt(2) L t} (d_2^2(0) + 2t int_0^t D)``.

    ``D(t) = int rho_eps |u_eps - u|^2`` and ``L = sup_t ||grad u||_inf`` for the limit velocity.
    """

    model_config = ConfigDict(frozen=True)

    times: list[float]
    lhs: list[float]
    rhs: list[float]
    relative_kinetic: list[float]
    lipschitz: float
    max_ratio: float

    @property
    def passed(self) -> bool:
        return self.max_ratio <= 1.0


def lipschitz_constant(u: Field) -> float:
    """``||grad u||_inf`` over all Jacobian entries."""
    return max(spectral_gradient(u.component(i)).max_abs() for i in range(u.grid.d))


def lemma_d2_check(er_traj: Trajectory, fpme_traj: Trajectory, hooks: MetricHooks = DEFAULT_HOOKS) -> LemmaD2Report:
    er_traj.check_compatible(fpme_traj)
    if er_traj.grid.d != 1:
        raise GeometryError("The Grönwall check runs on one-dimensional trajectories")
    times = np.asarray(er_traj.times)

    lhs, dissipation, lipschitz = [], [], 0.0
    for state, limit in zip(er_traj.snapshots, fpme_traj.snapshots, strict=True):
        u = limit_velocity(limit.rho, fpme_traj.params)
        lipschitz = max(lipschitz, lipschitz_constant(u))
        slip = velocity(state) - u
        dissipation.append(float(state.rho.grid.integrate(state.rho.values * np.sum(slip.values**2, axis=0))))
        lhs.append(hooks.d2_squared(state.rho, limit.rho))

    accumulated = cumulative_trapezoid(dissipation, times, initial=0.0) if len(times) > 1 else np.zeros(1)
    rhs = 2 * np.exp(2 * math.sqrt(2) * lipschitz * times) * (lhs[0] + 2 * times * accumulated)

    ratios = [
        0.0 if left <= LHS_ROUNDOFF else left / right if right > 0 else math.inf
        for left, right in zip(lhs, rhs, strict=True)
    ]
    max_ratio = max(ratios)
    if max_ratio > 1:
        logger.warning(f"Grönwall bound exceeded: max ratio {max_ratio!r}")
    return LemmaD2Report(
        times=times.tolist(),
        lhs=lhs,
        rhs=rhs.tolist(),
        relative_kinetic=dissipation,
        lipschitz=lipschitz,
        max_ratio=max_ratio,
    )
