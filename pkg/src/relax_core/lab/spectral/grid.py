"""Uniform periodic grids and their Fourier tables."""

import math
from functools import cached_property
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, PositiveFloat, field_validator
from scipy import fft

# Relative positivity floor; the absolute floor is this over the domain volume.
DENSITY_FLOOR_FACTOR = 1e-10


class PeriodicGrid(BaseModel):
    """Uniform grid on the torus [-length/2, length/2)^d.

    Coefficients use the normalization
    ``c(xi) = n^{-d} * sum_x f(x) exp(-i xi.x)`` with physical node coordinates,
    so ``cos(x)`` has coefficient 1/2 at ``xi = +-1`` whatever the grid offset.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    d: Literal[1, 2] = 1
    n: int
    length: PositiveFloat = 2 * math.pi

    @field_validator("n")
    @classmethod
    def _check_n(cls, n: int) -> int:
        if n < 16 or n % 2:
            raise ValueError(f"n must be even and at least 16, got {n!r}")
        return n

    def matches(self, other: "PeriodicGrid") -> bool:
        """Whether both grids carry the same nodes."""
        return (self.d, self.n, self.length) == (other.d, other.n, other.length)

    @property
    def h(self) -> float:
        return self.length / self.n

    @property
    def volume(self) -> float:
        return self.length**self.d

    @property
    def cell_volume(self) -> float:
        return self.h**self.d

    @property
    def shape(self) -> tuple[int, ...]:
        return (self.n,) * self.d

    @property
    def size(self) -> int:
        return self.n**self.d

    @property
    def axes(self) -> tuple[int, ...]:
        """Spatial axes of a nodal array (trailing, so vector components lead)."""
        return tuple(range(-self.d, 0))

    @property
    def density_floor(self) -> float:
        return DENSITY_FLOOR_FACTOR / self.volume

    @property
    def fundamental_wavenumber(self) -> float:
        return 2 * math.pi / self.length

    @property
    def nyquist_wavenumber(self) -> float:
        return self.fundamental_wavenumber * self.n / 2

    # --- nodes ---

    @cached_property
    def axis_nodes(self) -> np.ndarray:
        return -self.length / 2 + self.h * np.arange(self.n)

    @cached_property
    def nodes(self) -> np.ndarray:
        """Node coordinates, shape ``(d, n, ..., n)``."""
        return np.stack(np.meshgrid(*([self.axis_nodes] * self.d), indexing="ij"))

    # --- frequency tables ---

    @cached_property
    def axis_modes(self) -> np.ndarray:
        """Integer frequencies along one axis, in FFT order."""
        return np.rint(fft.fftfreq(self.n, d=1.0 / self.n)).astype(int)

    @cached_property
    def wavenumbers(self) -> np.ndarray:
        """Wave vectors ``xi``, shape ``(d, n, ..., n)``."""
        axis = self.axis_modes * self.fundamental_wavenumber
        return np.stack(np.meshgrid(*([axis] * self.d), indexing="ij"))

    @cached_property
    def kmag(self) -> np.ndarray:
        return np.sqrt(np.sum(self.wavenumbers**2, axis=0))

    @cached_property
    def phase(self) -> np.ndarray:
        """``exp(-i xi.x0)`` for the node offset ``x0 = -length/2``."""
        offset = -self.length / 2
        return np.exp(-1j * offset * np.sum(self.wavenumbers, axis=0))

    @cached_property
    def derivative_multipliers(self) -> np.ndarray:
        """``i xi_k`` per axis with the Nyquist mode of that axis zeroed."""
        modes = np.stack(np.meshgrid(*([self.axis_modes] * self.d), indexing="ij"))
        nyquist = np.abs(modes) == self.n // 2
        return np.where(nyquist, 0.0, 1j * self.wavenumbers)

    @cached_property
    def dealias_mask(self) -> np.ndarray:
        """True where every integer frequency component satisfies ``|k| <= n/3``."""
        modes = np.stack(np.meshgrid(*([self.axis_modes] * self.d), indexing="ij"))
        return np.all(3 * np.abs(modes) <= self.n, axis=0)

    def fractional_multiplier(self, s: float) -> np.ndarray:
        """``|xi|^s`` with the zero mode set to 0 for ``s < 0``."""
        if s == 0:
            return np.ones(self.shape)
        with np.errstate(divide="ignore"):
            return np.where(self.kmag > 0, self.kmag**s, 0.0)

    # --- transforms on raw arrays ---

    def forward(self, values: np.ndarray) -> np.ndarray:
        """Coefficients in the grid normalization (leading axes are batched)."""
        return fft.fftn(values, axes=self.axes) / self.size * self.phase

    def inverse(self, coefficients: np.ndarray) -> np.ndarray:
        return fft.ifftn(coefficients * np.conj(self.phase) * self.size, axes=self.axes).real

    def apply_multiplier(self, values: np.ndarray, multiplier: np.ndarray) -> np.ndarray:
        """Apply a Fourier multiplier; the grid offset phase cancels."""
        return fft.ifftn(fft.fftn(values, axes=self.axes) * multiplier, axes=self.axes).real

    def integrate(self, values: np.ndarray) -> np.ndarray | float:
        """Grid quadrature over the spatial axes."""
        return np.sum(values, axis=self.axes) * self.cell_volume
