"""Periodic grids, fields and spectral operators."""

from .field import Field
from .grid import PeriodicGrid
from .operators import (
    check_fractional_order,
    check_riesz_exponent,
    dealias,
    dealiased_product,
    fractional_laplacian,
    riesz_force,
    riesz_kernel_constant,
    spectral_divergence,
    spectral_gradient,
    spectral_laplacian,
    transform_forward,
    transform_inverse,
)

__all__ = [
    Field,
    PeriodicGrid,
    check_fractional_order,
    check_riesz_exponent,
    dealias,
    dealiased_product,
    fractional_laplacian,
    riesz_force,
    riesz_kernel_constant,
    spectral_divergence,
    spectral_gradient,
    spectral_laplacian,
    transform_forward,
    transform_inverse,
]
