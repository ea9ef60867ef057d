"""Per-instant energy reports and their CSV rows."""

import logging

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..metrics import MetricHooks
from ..schema import Regime
from ..state import FluidState, LimitState, Params, PhysicalConstants, limit_velocity, velocity
from .functionals import (
    free_energy,
    interaction_energy,
    internal_energy,
    kinetic_energy,
    modulated_interaction,
    modulated_internal,
    modulated_kinetic,
)
from .norms import L1Norm, LGammaNorm, NegSobolevNorm, SecondMomentNorm, norm

logger = logging.getLogger(__name__)

ENERGY_COLUMNS = ["kinetic", "internal", "interaction", "free", "total"]
ERROR_COLUMNS = [
    "mod_kinetic",
    "mod_internal",
    "mod_interaction",
    "neg_sobolev_sq",
    "lgamma_err_sq",
    "l1_momentum_err_sq",
    "d2_sq",
    "dbl_momentum_sq",
]


class EnergyReport(BaseModel):
    """Scalar functionals of a state, and of its distance to a limit state when one is given.

    Quantities that do not apply are ``None`` and are written as empty CSV fields.
    """

    model_config = ConfigDict(frozen=True)

    time: float
    mass: float
    total_momentum: list[float] | None = None
    kinetic: float | None = None
    internal: float
    interaction: float
    free: float
    total: float | None = None
    dissipation_rate: float | None = None
    second_moment: float
    theta_norm: float | None = None
    mod_kinetic: float | None = None
    mod_internal: float | None = None
    mod_interaction: float | None = None
    neg_sobolev_sq: float | None = None
    lgamma_err_sq: float | None = None
    l1_momentum_err_sq: float | None = None
    d2_sq: float | None = None
    dbl_momentum_sq: float | None = None

    def row(self, d: int) -> list[str]:
        """CSV cells in ``csv_columns(d)`` order."""
        if self.total_momentum is None:
            momentum = [""] * d
        else:
            momentum = [_cell(value) for value in self.total_momentum]
        cells = [_cell(self.time), _cell(self.mass), *momentum]
        return cells + [_cell(getattr(self, column)) for column in ENERGY_COLUMNS + ERROR_COLUMNS]


def _cell(value: float | None) -> str:
    return "" if value is None else repr(float(value))


def csv_columns(d: int) -> list[str]:
    momentum = ["momentum_x", "momentum_y"][:d]
    return ["t", "mass", *momentum, *ENERGY_COLUMNS, *ERROR_COLUMNS]


def energy_report(
    state: FluidState | LimitState,
    params: PhysicalConstants,
    limit: LimitState | None = None,
    hooks: MetricHooks | None = None,
) -> EnergyReport:
    """Evaluate every functional at ``state``; the error block needs ``limit``, metrics need ``hooks``."""
    rho = state.rho
    grid = rho.grid
    internal = internal_energy(rho, params.gamma)
    interaction = interaction_energy(rho, rho, params.alpha, params.d)
    free = free_energy(rho, params)
    epsilon = params.epsilon if isinstance(params, Params) else None

    values: dict = {
        "time": state.time,
        "mass": state.mass,
        "internal": internal,
        "interaction": interaction,
        "free": free,
        "second_moment": norm(rho, SecondMomentNorm()),
    }
    if params.regime == Regime.PRESSURE_ATTRACTIVE:
        values["theta_norm"] = norm(rho, LGammaNorm(gamma=params.theta))

    if isinstance(state, FluidState):
        u = velocity(state)
        kinetic = kinetic_energy(state)
        values["total_momentum"] = state.total_momentum.tolist()
        values["kinetic"] = kinetic
        if epsilon is not None:
            values["total"] = kinetic + free / epsilon
            values["dissipation_rate"] = float(grid.integrate(rho.values * np.sum(u.values**2, axis=0))) / epsilon
    else:
        # free-energy dissipation of the gradient flow
        u = limit_velocity(rho, params)
        values["dissipation_rate"] = float(grid.integrate(rho.values * np.sum(u.values**2, axis=0)))

    if limit is not None:
        values.update(_error_block(state, limit, params, hooks))
    return EnergyReport(**values)


def _error_block(
    state: FluidState | LimitState,
    limit: LimitState,
    params: PhysicalConstants,
    hooks: MetricHooks | None,
) -> dict[str, float]:
    rho, rho_bar = state.rho, limit.rho
    difference = rho - rho_bar
    values = {
        "mod_internal": modulated_internal(rho, rho_bar, params.gamma, params.c_p) if params.c_p else 0.0,
        "mod_interaction": modulated_interaction(rho, rho_bar, params),
        "neg_sobolev_sq": norm(difference, NegSobolevNorm(alpha=params.alpha, d=params.d)) ** 2,
        "lgamma_err_sq": norm(difference, LGammaNorm(gamma=params.gamma)) ** 2,
    }
    if isinstance(state, FluidState):
        u_bar = limit_velocity(rho_bar, params)
        values["mod_kinetic"] = modulated_kinetic(state, u_bar)
        limit_momentum = u_bar * rho_bar
        values["l1_momentum_err_sq"] = norm(state.m - limit_momentum, L1Norm()) ** 2
        if hooks is not None:
            values["dbl_momentum_sq"] = hooks.dbl_momentum(state.m, limit_momentum) ** 2
    if hooks is not None:
        values["d2_sq"] = hooks.d2_squared(rho, rho_bar)
    return values
