"""Damped Euler-Riesz system: right-hand side and integrating-factor SSPRK3 stepping."""

import logging
import math
from collections.abc import Sequence
from typing import NamedTuple

import numpy as np
from scipy import fft

from ..spectral import Field, dealias, riesz_force, spectral_gradient
from ..state import FluidState, Params, pressure, velocity
from .trajectory import Observer, StepPolicy, Trajectory, march, output_times

logger = logging.getLogger(__name__)


class ERTendency(NamedTuple):
    """Non-stiff tendencies plus the damping rate integrated exactly."""

    drho: Field
    dm: Field
    damping_rate: float


def _flux_divergence(m: Field, u: Field) -> np.ndarray:
    """``div(m (x) u)`` row by row, with the dyad dealiased."""
    grid = m.grid
    dyad = m.values[:, None] * u.values[None, :]
    hat = fft.fftn(dyad, axes=grid.axes) * grid.dealias_mask
    return fft.ifftn(np.sum(grid.derivative_multipliers[None, :] * hat, axis=1), axes=grid.axes).real


def rhs_euler_riesz(state: FluidState, params: Params) -> ERTendency:
    """Tendencies of ``d_t rho = -div m`` and the momentum equation without damping.

    ``dm = -div(m (x) u) - (c_P/eps) grad rho^gamma + (c_K/eps) rho grad Lambda^{alpha-d} rho``.
    """
    grid = state.grid
    rho, m = state.rho, state.m
    hat_m = fft.fftn(m.values, axes=grid.axes)
    drho = -fft.ifftn(np.sum(grid.derivative_multipliers * hat_m, axis=0), axes=grid.axes).real

    dm = -_flux_divergence(m, velocity(state))
    if params.c_p > 0:
        p = dealias(rho.with_values(pressure(rho.values, params.gamma)))
        dm = dm - params.c_p / params.epsilon * spectral_gradient(p).values
    if params.c_k != 0:
        force = dealias(riesz_force(rho, params.alpha, params.d) * rho)
        dm = dm + params.c_k / params.epsilon * force.values
    return ERTendency(
        drho=rho.with_values(drho),
        dm=m.with_values(dm),
        damping_rate=1.0 / params.epsilon,
    )


def _forward_euler(state: FluidState, dt: float, params: Params) -> tuple[np.ndarray, np.ndarray]:
    tendency = rhs_euler_riesz(state, params)
    return state.rho.values + dt * tendency.drho.values, state.m.values + dt * tendency.dm.values


def step(state: FluidState, dt: float, params: Params) -> FluidState:
    """One SSPRK3 step with the damping factor ``exp(-tau/eps)`` applied over each substep.

    The stages are the Shu-Osher stages written for ``exp(t/eps) m``, so a
    uniform momentum decays exactly and total momentum follows
    ``d/dt int m = -(1/eps) int m``.
    """

    def decay(tau: float) -> float:
        return math.exp(-tau / params.epsilon)

    def make(rho: np.ndarray, m: np.ndarray) -> FluidState:
        return FluidState(rho=state.rho.with_values(rho), m=state.m.with_values(m), time=state.time + dt)

    rho0, m0 = state.rho.values, state.m.values

    rho_e, m_e = _forward_euler(state, dt, params)
    stage1 = make(rho_e, decay(dt) * m_e)

    rho_e, m_e = _forward_euler(stage1, dt, params)
    stage2 = make(
        0.75 * rho0 + 0.25 * rho_e,
        0.75 * decay(dt / 2) * m0 + 0.25 * decay(-dt / 2) * m_e,
    )

    rho_e, m_e = _forward_euler(stage2, dt, params)
    return make(
        rho0 / 3 + 2 * rho_e / 3,
        decay(dt) * m0 / 3 + 2 * decay(dt / 2) * m_e / 3,
    )


def er_time_step(state: FluidState, params: Params, policy: StepPolicy) -> float:
    """``min(cfl h / (max|u| + c_sound + c_riesz), epsilon_fraction eps, dt_max)``."""
    grid = state.grid
    rho_max = float(np.max(state.rho.values))
    speed = float(np.max(np.sqrt(np.sum(velocity(state).values ** 2, axis=0))))
    if params.c_p > 0:
        speed += math.sqrt(params.c_p * params.gamma * max(rho_max, 0.0) ** (params.gamma - 1) / params.epsilon)
    if params.c_k != 0:
        speed += math.sqrt(
            abs(params.c_k) * max(rho_max, 0.0) * grid.fundamental_wavenumber**params.riesz_order / params.epsilon
        )
    dt = min(policy.epsilon_fraction * params.epsilon, policy.dt_max)
    if speed > 0:
        dt = min(dt, policy.cfl_constant * grid.h / speed)
    return dt


def run_er(
    initial: FluidState,
    params: Params,
    policy: StepPolicy | None = None,
    t_end: float = 1.0,
    observers: Sequence[Observer] = (),
    times: Sequence[float] | None = None,
) -> Trajectory:
    """Integrate the Euler-Riesz system, storing snapshots at the output instants."""
    policy = policy or StepPolicy()
    times = list(times) if times is not None else output_times(t_end)
    logger.info(f"Euler-Riesz run: eps={params.epsilon!r}, n={initial.grid.n}, t_end={times[-1]!r}")
    snapshots, series, steps = march(
        initial,
        times,
        step=lambda state, dt: step(state, dt, params),
        time_step=lambda state: er_time_step(state, params, policy),
        policy=policy,
        observers=observers,
    )
    return Trajectory(kind="er", params=params, times=times, snapshots=snapshots, series=series, steps=steps)
