"""Fractional porous-medium limit: right-hand side, RK4 stepping and the limit acceleration."""

import logging
from collections.abc import Sequence

import numpy as np

from ..errors import BoundaryError
from ..spectral import Field, dealias, riesz_force, spectral_divergence, spectral_gradient, spectral_laplacian
from ..state import LimitState, PhysicalConstants, limit_velocity, pressure
from .trajectory import Observer, StepPolicy, Trajectory, centered_time_derivative, march, output_times

logger = logging.getLogger(__name__)

# RK4 reaches about -2.78 on the negative real axis
RK4_REAL_AXIS_MARGIN = 2.5


def rhs_fpme(rho: Field, params: PhysicalConstants) -> Field:
    """``d_t rho = -c_K div(rho grad Lambda^{alpha-d} rho) + c_P Laplacian rho^gamma``."""
    tendency = Field.constant(rho.grid, 0.0)
    if params.c_p > 0:
        p = rho.with_values(pressure(rho.values, params.gamma))
        if params.gamma != 1:
            p = dealias(p)
        tendency = tendency + params.c_p * spectral_laplacian(p)
    if params.c_k != 0:
        flux = dealias(riesz_force(rho, params.alpha, params.d) * rho)
        tendency = tendency - params.c_k * spectral_divergence(flux)
    return tendency


def step_fpme(rho: Field, dt: float, params: PhysicalConstants) -> Field:
    """Classical four-stage Runge-Kutta step."""
    k1 = rhs_fpme(rho, params)
    k2 = rhs_fpme(rho + dt / 2 * k1, params)
    k3 = rhs_fpme(rho + dt / 2 * k2, params)
    k4 = rhs_fpme(rho + dt * k3, params)
    return rho + dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4)


def fpme_time_step(rho: Field, params: PhysicalConstants, policy: StepPolicy) -> float:
    """Parabolic cap ``c h^2 / (c_P gamma max rho^{gamma-1} + |c_K| max|grad Lambda rho| h)``.

    An explicit spectral-radius cap for RK4 is applied on top, since the
    fractional transport term is an order ``2 + alpha - d`` operator.
    """
    grid = rho.grid
    rho_max = max(float(np.max(rho.values)), 0.0)
    diffusivity = params.c_p * params.gamma * rho_max ** (params.gamma - 1) if params.c_p > 0 else 0.0
    force_max = riesz_force(rho, params.alpha, params.d).max_abs() if params.c_k != 0 else 0.0
    k = grid.nyquist_wavenumber

    dt = policy.dt_max
    denominator = diffusivity + abs(params.c_k) * force_max * grid.h
    if denominator > 0:
        dt = min(dt, policy.parabolic_constant * grid.h**2 / denominator)
    spectral_radius = (
        diffusivity * k**2
        + abs(params.c_k) * rho_max * k ** (2 + params.riesz_order)
        + abs(params.c_k) * force_max * k
    )
    if spectral_radius > 0:
        dt = min(dt, RK4_REAL_AXIS_MARGIN / spectral_radius)
    return dt


def run_fpme(
    initial: Field | LimitState,
    params: PhysicalConstants,
    policy: StepPolicy | None = None,
    t_end: float = 1.0,
    observers: Sequence[Observer] = (),
    times: Sequence[float] | None = None,
) -> Trajectory:
    """Integrate the limit equation; the trajectory mirrors ``run_er``."""
    policy = policy or StepPolicy()
    state = initial if isinstance(initial, LimitState) else LimitState(rho=initial, time=0.0)
    times = list(times) if times is not None else output_times(t_end)
    logger.info(f"FPME run: n={state.grid.n}, t_end={times[-1]!r}")
    snapshots, series, steps = march(
        state,
        times,
        step=lambda s, dt: LimitState(rho=step_fpme(s.rho, dt, params), time=s.time + dt),
        time_step=lambda s: fpme_time_step(s.rho, params, policy),
        policy=policy,
        observers=observers,
    )
    return Trajectory(kind="fpme", params=params, times=times, snapshots=snapshots, series=series, steps=steps)


def convective_derivative(u: Field) -> Field:
    """``(u . grad) u`` with each product dealiased."""
    gradients = np.stack([spectral_gradient(u.component(i)).values for i in range(u.grid.d)])
    # gradients[i, j] = d_j u_i
    return dealias(u.with_values(np.sum(u.values[None, :] * gradients, axis=1)))


def limit_acceleration(traj: Trajectory, index: int, allow_one_sided: bool = False) -> Field:
    """``e = d_t u + (u . grad) u`` for the limit velocity at stored instant ``index``.

    The time derivative is a centered difference over neighbouring snapshots;
    at endpoints a second-order one-sided difference is used only when allowed.
    """
    count = len(traj.times)
    index = index % count
    endpoint = index in (0, count - 1)
    if count < 3 or (endpoint and not allow_one_sided):
        raise BoundaryError(f"No centered difference at stored index {index} of {count}")
    if endpoint:
        logger.warning(f"One-sided time difference for the limit acceleration at t={traj.times[index]!r}")

    if index == 0:
        picks = [0, 1, 2]
    elif index == count - 1:
        picks = [count - 3, count - 2, count - 1]
    else:
        picks = [index - 1, index, index + 1]
    local = picks.index(index)
    velocities = [limit_velocity(traj.snapshots[i].rho, traj.params).values for i in picks]
    du = centered_time_derivative(velocities, [traj.times[i] for i in picks], local)
    u = traj.snapshots[index].rho.with_values(velocities[local])
    return convective_derivative(u) + du
