"""Spectral differential operators, fractional powers and the Riesz force."""

import math

import numpy as np
from scipy import fft
from scipy.special import gamma as gamma_fn

from ..errors import RangeError
from .field import Field
from .grid import PeriodicGrid


def transform_forward(f: Field) -> np.ndarray:
    """Spectral coefficients of ``f`` in the grid normalization."""
    return f.spectral


def transform_inverse(coefficients: np.ndarray, grid: PeriodicGrid) -> Field:
    return Field(grid=grid, values=grid.inverse(coefficients))


def _require_scalar(f: Field, name: str) -> None:
    if f.is_vector:
        raise ValueError(f"{name} expects a scalar field")


def spectral_gradient(f: Field) -> Field:
    _require_scalar(f, "spectral_gradient")
    grid = f.grid
    hat = fft.fftn(f.values, axes=grid.axes)
    values = fft.ifftn(grid.derivative_multipliers * hat, axes=grid.axes).real
    return Field(grid=grid, values=values)


def spectral_divergence(v: Field) -> Field:
    if not v.is_vector:
        raise ValueError("spectral_divergence expects a vector field")
    grid = v.grid
    hat = fft.fftn(v.values, axes=grid.axes)
    values = fft.ifftn(np.sum(grid.derivative_multipliers * hat, axis=0), axes=grid.axes).real
    return Field(grid=grid, values=values)


def spectral_laplacian(f: Field) -> Field:
    """Componentwise Laplacian, multiplier ``-|xi|^2``."""
    return f.with_values(f.grid.apply_multiplier(f.values, -(f.grid.kmag**2)))


def check_fractional_order(s: float) -> None:
    if not -2 < s < 2:
        raise RangeError(f"Fractional order {s!r} outside the supported range (-2, 2)")


def fractional_laplacian(f: Field, s: float) -> Field:
    """``Lambda^s f`` with multiplier ``|xi|^s``; negative orders drop the zero mode."""
    check_fractional_order(s)
    return f.with_values(f.grid.apply_multiplier(f.values, f.grid.fractional_multiplier(s)))


def check_riesz_exponent(alpha: float, d: int) -> None:
    if not max(0, d - 2) < alpha < d:
        raise RangeError(f"Riesz exponent alpha={alpha!r} outside ({max(0, d - 2)}, {d}) for d={d}")


def riesz_force(rho: Field, alpha: float, d: int | None = None) -> Field:
    """``grad Lambda^{alpha-d} rho``; each component has zero mean."""
    _require_scalar(rho, "riesz_force")
    d = rho.grid.d if d is None else d
    if d != rho.grid.d:
        raise ValueError(f"Dimension {d!r} does not match the grid dimension {rho.grid.d!r}")
    check_riesz_exponent(alpha, d)
    return spectral_gradient(fractional_laplacian(rho, alpha - d))


def dealias(f: Field) -> Field:
    """Two-thirds rule: zero every mode with some ``|k_j| > n/3``."""
    return f.with_values(f.grid.apply_multiplier(f.values, f.grid.dealias_mask))


def dealiased_product(a: Field, b: Field) -> Field:
    """Nodal product followed by the two-thirds filter (vector times scalar broadcasts)."""
    return dealias(a * b)


def riesz_kernel_constant(alpha: float, d: int) -> float:
    """Whole-space constant ``c`` with ``Lambda^{alpha-d} f = c |x|^{-alpha} * f``.

    Standard Riesz normalization:
    ``c = Gamma(alpha/2) / (2^{d-alpha} pi^{d/2} Gamma((d-alpha)/2))``.
    """
    check_riesz_exponent(alpha, d)
    return float(gamma_fn(alpha / 2) / (2 ** (d - alpha) * math.pi ** (d / 2) * gamma_fn((d - alpha) / 2)))
