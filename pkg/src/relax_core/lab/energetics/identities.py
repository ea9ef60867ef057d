"""Residuals and empirical constants of the energy and modulated-energy identities."""

import logging

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..errors import BoundaryError
from ..solvers import Trajectory, centered_time_derivative, limit_acceleration
from ..spectral import Field, fractional_laplacian, spectral_divergence, spectral_gradient
from ..state import (
    FluidState,
    LimitState,
    Params,
    PhysicalConstants,
    internal_derivative,
    limit_velocity,
    relative_internal_density,
    velocity,
)
from .functionals import free_energy, interaction_energy, kinetic_energy, modulated_interaction, modulated_internal

logger = logging.getLogger(__name__)

# Below this the interaction ratio is dominated by round-off
NEGLIGIBLE_INTERACTION = 1e-14


def _weighted_square(rho: Field, v: Field) -> float:
    """``int rho |v|^2``."""
    return float(rho.grid.integrate(rho.values * np.sum(v.values**2, axis=0)))


def _weighted_dot(rho: Field, a: Field, b: Field) -> float:
    """``int rho a . b``."""
    return float(rho.grid.integrate(rho.values * np.sum(a.values * b.values, axis=0)))


def energy_identity_residual(traj: Trajectory, params: Params) -> list[float]:
    """Per-interval residual of ``dE/dt = -(1/eps) int rho |u|^2`` with ``E = K + F/eps``.

    The dissipation is averaged over the interval endpoints, so the residual
    is second order in the output spacing.
    """
    energies, dissipation = [], []
    for state in traj.snapshots:
        energies.append(kinetic_energy(state) + free_energy(state.rho, params) / params.epsilon)
        dissipation.append(_weighted_square(state.rho, velocity(state)) / params.epsilon)
    residuals = []
    for i in range(len(traj.times) - 1):
        dt = traj.times[i + 1] - traj.times[i]
        residuals.append((energies[i + 1] - energies[i]) / dt + (dissipation[i] + dissipation[i + 1]) / 2)
    return residuals


class _Pair(BaseModel):
    """An Euler-Riesz snapshot and the limit snapshot at the same instant."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    rho_eps: Field
    rho: Field
    u_eps: Field
    u: Field

    @classmethod
    def of(cls, state: FluidState, limit: LimitState, params: PhysicalConstants) -> "_Pair":
        return cls(rho_eps=state.rho, rho=limit.rho, u_eps=velocity(state), u=limit_velocity(limit.rho, params))

    @property
    def slip(self) -> Field:
        return self.u_eps - self.u

    @property
    def difference(self) -> Field:
        return self.rho_eps - self.rho

    def relative_kinetic(self) -> float:
        """``(1/2) int rho_eps |u_eps - u|^2``."""
        return _weighted_square(self.rho_eps, self.slip) / 2


def _pairs(er_traj: Trajectory, fpme_traj: Trajectory, params: PhysicalConstants) -> list[_Pair]:
    er_traj.check_compatible(fpme_traj)
    if len(er_traj.times) < 3:
        raise BoundaryError(f"Identity checks need at least three output times, got {len(er_traj.times)}")
    return [
        _Pair.of(state, limit, params) for state, limit in zip(er_traj.snapshots, fpme_traj.snapshots, strict=True)
    ]


def _internal_transport(pair: _Pair, gamma: float) -> float:
    """``int rho_eps (u_eps - u) . grad(U'(rho_eps) - U'(rho)) - (gamma - 1) int U(rho_eps | rho) div u``."""
    potential_gap = pair.rho.with_values(
        internal_derivative(pair.rho_eps.values, gamma) - internal_derivative(pair.rho.values, gamma)
    )
    transport = _weighted_dot(pair.rho_eps, pair.slip, spectral_gradient(potential_gap))
    relative = relative_internal_density(pair.rho_eps.values, pair.rho.values, gamma)
    compression = (gamma - 1) * float(pair.rho.grid.integrate(relative * spectral_divergence(pair.u).values))
    return transport - compression


def _internal_residuals(pairs: list[_Pair], times: list[float], gamma: float) -> list[float]:
    relative = [modulated_internal(p.rho_eps, p.rho, gamma) for p in pairs]
    return [
        float(centered_time_derivative(relative, times, i)) - _internal_transport(pairs[i], gamma)
        for i in range(1, len(pairs) - 1)
    ]


def internal_derivative_residual(
    er_traj: Trajectory,
    fpme_traj: Trajectory,
    params: PhysicalConstants,
) -> list[float]:
    """Centered ``d/dt int U(rho_eps | rho)`` minus its transport form, at interior output times."""
    return _internal_residuals(_pairs(er_traj, fpme_traj, params), er_traj.times, params.gamma)


def _interaction_constant(pairs: list[_Pair], times: list[float], params: PhysicalConstants) -> float:
    if params.c_k == 0:
        return 0.0
    sobolev = [interaction_energy(p.difference, p.difference, params.alpha, params.d) for p in pairs]
    constant = 0.0
    for i in range(1, len(pairs) - 1):
        if sobolev[i] <= NEGLIGIBLE_INTERACTION:
            continue
        p = pairs[i]
        drift = spectral_gradient(fractional_laplacian(p.difference, params.riesz_order))
        growth = params.c_k / 2 * float(centered_time_derivative(sobolev, times, i))
        excess = growth - params.c_k * _weighted_dot(p.rho_eps, p.slip, drift)
        constant = max(constant, excess / sobolev[i])
    return constant


def interaction_derivative_constant(er_traj: Trajectory, fpme_traj: Trajectory, params: PhysicalConstants) -> float:
    """Smallest ``C >= 0`` with ``(c_K/2) dN/dt <= c_K int rho_eps (u_eps - u) . grad Lambda (rho_eps - rho) + C N``.

    ``N`` is the squared negative-order Sobolev distance.
    """
    constant = _interaction_constant(_pairs(er_traj, fpme_traj, params), er_traj.times, params)
    logger.info(f"Interaction-derivative constant: {constant!r}")
    return constant


def _inequality_constant(
    pairs: list[_Pair],
    times: list[float],
    params: Params,
    relaxation: list[float],
    mod_internal: list[float],
    sobolev: list[float],
) -> float:
    eps = params.epsilon
    constant = 0.0
    for i in range(1, len(pairs) - 1):
        growth = float(centered_time_derivative(relaxation, times, i)) + pairs[i].relative_kinetic() / eps
        budget = (params.gamma - 1) * mod_internal[i] / eps + abs(params.c_k) * sobolev[i] / eps + eps
        constant = max(constant, max(growth, 0.0) / budget)
    return constant


class ModulatedSeries(BaseModel):
    """Modulated-energy terms at shared output times; derivative-based entries exist at interior times only."""

    model_config = ConfigDict(frozen=True)

    times: list[float]
    relative_kinetic: list[float]
    mod_internal: list[float]
    mod_interaction: list[float]
    neg_sobolev_sq: list[float]
    modulated_free: list[float]
    relaxation_energy: list[float]
    forcing: list[float]
    internal_residual: list[float]
    interaction_constant: float
    inequality_constant: float


def modulated_energy_terms(er_traj: Trajectory, fpme_traj: Trajectory, params: Params) -> ModulatedSeries:
    """Relaxation energy ``Q = (1/2) int rho_eps |u_eps - u|^2 + F(rho_eps | rho) / eps`` and its companions."""
    pairs = _pairs(er_traj, fpme_traj, params)
    times = er_traj.times

    relative_kinetic = [p.relative_kinetic() for p in pairs]
    mod_internal = [modulated_internal(p.rho_eps, p.rho, params.gamma, params.c_p) for p in pairs]
    mod_interaction = [modulated_interaction(p.rho_eps, p.rho, params) for p in pairs]
    sobolev = [interaction_energy(p.difference, p.difference, params.alpha, params.d) for p in pairs]
    modulated_free = [a + b for a, b in zip(mod_internal, mod_interaction, strict=True)]
    relaxation = [k + f / params.epsilon for k, f in zip(relative_kinetic, modulated_free, strict=True)]

    forcing = [
        _weighted_dot(pairs[i].rho_eps, pairs[i].slip, limit_acceleration(fpme_traj, i))
        for i in range(1, len(pairs) - 1)
    ]
    internal_residual = _internal_residuals(pairs, times, params.gamma)

    inequality_constant = _inequality_constant(pairs, times, params, relaxation, mod_internal, sobolev)
    interaction_constant = _interaction_constant(pairs, times, params)
    logger.info(
        f"eps={params.epsilon!r}: inequality constant {inequality_constant!r}, "
        f"interaction constant {interaction_constant!r}"
    )
    return ModulatedSeries(
        times=list(times),
        relative_kinetic=relative_kinetic,
        mod_internal=mod_internal,
        mod_interaction=mod_interaction,
        neg_sobolev_sq=sobolev,
        modulated_free=modulated_free,
        relaxation_energy=relaxation,
        forcing=forcing,
        internal_residual=internal_residual,
        interaction_constant=interaction_constant,
        inequality_constant=inequality_constant,
    )


def modulated_inequality_constant(er_traj: Trajectory, fpme_traj: Trajectory, params: Params) -> float:
    """Smallest ``C`` bounding ``dQ/dt + (1/2eps) int rho_eps |u_eps - u|^2``.

    The bound is ``C ((gamma - 1) F_U / eps + |c_K| N / eps + eps)`` with ``F_U`` the modulated
    internal energy and ``N`` the squared negative-order Sobolev distance.
    """
    return modulated_energy_terms(er_traj, fpme_traj, params).inequality_constant
