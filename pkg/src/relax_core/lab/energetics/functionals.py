"""Internal, interaction, free and kinetic energies and their modulated forms."""

import numpy as np

from ..errors import MassMismatchError, VacuumError
from ..spectral import Field, check_riesz_exponent
from ..state import FluidState, PhysicalConstants, internal_density, relative_internal_density, velocity

# Tolerated net mass of a density difference
DIFFERENCE_MASS_TOLERANCE = 1e-8


def internal_energy(rho: Field, gamma: float) -> float:
    """Grid quadrature of ``U(rho)`` with ``0 ln 0 = 0``."""
    return float(rho.grid.integrate(internal_density(rho.values, gamma)))


def interaction_energy(f: Field, g: Field, alpha: float, d: int | None = None) -> float:
    """Bilinear form ``int f Lambda^{alpha-d} g``; zero modes do not contribute."""
    grid = f.grid
    d = grid.d if d is None else d
    if d != grid.d:
        raise ValueError(f"Dimension {d!r} does not match the grid dimension {grid.d!r}")
    if not grid.matches(g.grid):
        raise ValueError("Fields live on different grids")
    check_riesz_exponent(alpha, d)
    weights = grid.fractional_multiplier(alpha - d)
    return float(np.real(np.sum(weights * f.spectral * np.conj(g.spectral))) * grid.volume)


def free_energy(rho: Field, params: PhysicalConstants) -> float:
    """``F = c_P int U(rho) - (c_K / 2) int rho Lambda^{alpha-d} rho``."""
    internal = internal_energy(rho, params.gamma) if params.c_p else 0.0
    interaction = interaction_energy(rho, rho, params.alpha, params.d) if params.c_k else 0.0
    return params.c_p * internal - params.c_k / 2 * interaction


def kinetic_energy(state: FluidState) -> float:
    """``int |m|^2 / (2 rho)``."""
    u = velocity(state)
    return float(state.grid.integrate(np.sum(state.m.values * u.values, axis=0))) / 2


def modulated_kinetic(state: FluidState, u_bar: Field) -> float:
    """``(1/2) int rho |u - u_bar|^2``."""
    slip = velocity(state) - u_bar
    return float(state.grid.integrate(state.rho.values * np.sum(slip.values**2, axis=0))) / 2


def modulated_internal(rho: Field, rho_bar: Field, gamma: float, c_p: float = 1.0) -> float:
    """``c_P int U(rho | rho_bar)``, non-negative by convexity."""
    if gamma == 1:
        floor = rho.grid.density_floor
        minimum = min(float(np.min(rho.values)), float(np.min(rho_bar.values)))
        if minimum < floor:
            raise VacuumError(f"Density minimum {minimum!r} below {floor!r} in the relative entropy")
    return c_p * float(rho.grid.integrate(relative_internal_density(rho.values, rho_bar.values, gamma)))


def density_difference(rho: Field, rho_bar: Field) -> Field:
    """``rho - rho_bar``, which must carry no net mass."""
    difference = rho - rho_bar
    net = float(difference.integral())
    if abs(net) > DIFFERENCE_MASS_TOLERANCE:
        raise MassMismatchError(f"Densities differ in mass by {net!r}")
    return difference


def modulated_interaction(rho: Field, rho_bar: Field, params: PhysicalConstants) -> float:
    """``-(c_K/2) int (rho - rho_bar) Lambda^{alpha-d} (rho - rho_bar)``."""
    difference = density_difference(rho, rho_bar)
    if params.c_k == 0:
        return 0.0
    return -params.c_k / 2 * interaction_energy(difference, difference, params.alpha, params.d)
