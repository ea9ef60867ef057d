"""Weighted extension problem whose energy reproduces the Riesz interaction energy on the line."""

import logging
import math
from functools import cached_property

import numpy as np
from pydantic import BaseModel, ConfigDict, PositiveFloat, PositiveInt, model_validator
from scipy.linalg import solve_banded
from scipy.special import gamma as gamma_fn

from ..energetics import interaction_energy
from ..errors import DiscretizationError, GeometryError
from ..spectral import Field, PeriodicGrid, check_riesz_exponent

logger = logging.getLogger(__name__)

# Per-mode truncation: e^{-24} of the boundary layer survives at the top of the strip
DECAY_LENGTHS = 24.0
CONVERGED_RELATIVE_CHANGE = 1e-10
RATIO_WINDOW = (0.98, 1.02)
SELF_CONVERGENCE_LIMIT = 5e-3


def extension_constant(alpha: float, d: int = 1) -> float:
    """``kappa = 2^{2nu-2} Gamma(nu) / Gamma(1 - nu)`` with ``nu = (d - alpha)/2``.

    The raw extension energy of a mode ``xi`` is ``kappa |xi|^{alpha-d} |g(xi)|^2``
    times the period, so dividing by ``kappa`` recovers the interaction energy.
    """
    check_riesz_exponent(alpha, d)
    nu = (d - alpha) / 2
    return float(2 ** (2 * nu - 2) * gamma_fn(nu) / gamma_fn(1 - nu))


class ExtensionProblem(BaseModel):
    """Source ``g`` on a periodic line and the half-strip ``(0, height]`` above it.

    The weight exponent is ``zeta = alpha + 1 - d``; each Fourier mode is solved
    with ``levels`` elements graded as ``z_j = H_k (j/J)^{2/(1-zeta)}``.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    source: Field
    alpha: float
    height: PositiveFloat = 400.0
    levels: PositiveInt = 400

    @model_validator(mode="after")
    def _check(self):
        if self.source.grid.d != 1:
            raise GeometryError("The extension problem is posed over a one-dimensional line")
        if self.source.is_vector:
            raise ValueError("The extension source must be a scalar field")
        check_riesz_exponent(self.alpha, 1)
        net = abs(float(self.source.integral()))
        if net > 1e-10 * max(1.0, float(np.sum(np.abs(self.source.values))) * self.source.grid.h):
            raise ValueError(f"The extension source must be mean-zero, net mass {net!r}")
        return self

    @property
    def zeta(self) -> float:
        return self.alpha + 1 - self.source.grid.d

    @cached_property
    def kappa(self) -> float:
        return extension_constant(self.alpha, self.source.grid.d)

    def refined(self, factor: int) -> "ExtensionProblem":
        return self.model_copy(update={"levels": self.levels * factor})


def graded_mesh(height: float, levels: int, zeta: float) -> np.ndarray:
    return height * (np.arange(levels + 1) / levels) ** (2 / (1 - zeta))


def mode_response(wavenumber: float, height: float, levels: int, zeta: float) -> float:
    """``v(0)`` for ``-(z^zeta v')' + xi^2 z^zeta v = 0``, flux ``z^zeta v' = -1/2`` at 0 and ``v(H) = 0``.

    Linear finite elements with every weighted integral evaluated exactly, so
    refining a nested mesh can only increase the discrete energy.
    """
    z = graded_mesh(height, levels, zeta)
    left, right = z[:-1], z[1:]
    spacing = right - left
    moments = [(right ** (zeta + p + 1) - left ** (zeta + p + 1)) / (zeta + p + 1) for p in range(3)]

    stiffness = moments[0] / spacing**2
    xi2 = wavenumber**2 / spacing**2
    mass_left = xi2 * (right**2 * moments[0] - 2 * right * moments[1] + moments[2])
    mass_right = xi2 * (left**2 * moments[0] - 2 * left * moments[1] + moments[2])
    mass_cross = xi2 * (-right * left * moments[0] + (right + left) * moments[1] - moments[2])

    diagonal = np.zeros(levels + 1)
    diagonal[:-1] += stiffness + mass_left
    diagonal[1:] += stiffness + mass_right
    off = -stiffness + mass_cross

    # the top node carries the Dirichlet condition and is dropped
    banded = np.zeros((3, levels))
    banded[0, 1:] = off[:-1]
    banded[1] = diagonal[:-1]
    banded[2, :-1] = off[:-1]
    load = np.zeros(levels)
    load[0] = 0.5
    return float(solve_banded((1, 1), banded, load)[0])


def _raw_energy(problem: ExtensionProblem) -> float:
    """``2 int int_{z>0} z^zeta |grad V|^2``, summed mode by mode."""
    grid = problem.source.grid
    coefficients = problem.source.spectral
    total = 0.0
    for index, xi in enumerate(grid.wavenumbers[0]):
        power = abs(coefficients[index]) ** 2
        if xi == 0 or power == 0:
            continue
        height = min(problem.height, DECAY_LENGTHS / abs(xi))
        total += power * mode_response(abs(xi), height, problem.levels, problem.zeta)
    return grid.volume * total


def _monotone(energies: list[float]) -> bool:
    changes = np.diff(energies)
    scale = max(abs(energies[-1]), 1e-300)
    if np.all(np.abs(changes) <= CONVERGED_RELATIVE_CHANGE * scale):
        return True
    return bool(np.all(np.sign(changes) == np.sign(changes[0])) and abs(changes[-1]) <= abs(changes[0]))


class ExtensionResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    energy: float
    kappa: float
    energies: list[float]
    interaction: float

    @property
    def ratio(self) -> float:
        return self.energy / self.interaction if self.interaction else math.nan

    @property
    def relative_change(self) -> float:
        return abs(self.energies[-1] - self.energies[-2]) / max(abs(self.energies[-1]), 1e-300)

    @property
    def passed(self) -> bool:
        return RATIO_WINDOW[0] <= self.ratio <= RATIO_WINDOW[1] and self.relative_change < SELF_CONVERGENCE_LIMIT


def solve_extension(problem: ExtensionProblem) -> ExtensionResult:
    """Energies at ``J``, ``2J`` and ``4J`` elements; raises unless they converge monotonically."""
    raw = [_raw_energy(problem.refined(factor)) for factor in (1, 2, 4)]
    if not _monotone(raw):
        raise DiscretizationError(f"Extension energy not monotone under refinement: {raw!r}")
    energies = [value / problem.kappa for value in raw]
    interaction = interaction_energy(problem.source, problem.source, problem.alpha, 1)
    logger.debug(f"Extension energies {energies!r} against interaction {interaction!r}")
    return ExtensionResult(energy=energies[-1], kappa=problem.kappa, energies=energies, interaction=interaction)


def extension_energy(problem: ExtensionProblem) -> float:
    """Normalized extension energy at the finest of three refinement levels."""
    return solve_extension(problem).energy


def gaussian_difference(grid: PeriodicGrid, separation: float = 1.5, width: float = 0.5) -> Field:
    """Mean-zero pair of narrow Gaussians of opposite sign, centered at ``+-separation``."""
    x = grid.axis_nodes
    bump = np.exp(-((x - separation) ** 2) / (2 * width**2)) - np.exp(-((x + separation) ** 2) / (2 * width**2))
    return Field(grid=grid, values=bump / (width * math.sqrt(2 * math.pi)))


def extension_study(alpha: float = 0.5, n: int = 512, length: float = 40.0, levels: int = 400) -> ExtensionResult:
    """Gaussian-difference source on a long line, the whole-line proxy."""
    grid = PeriodicGrid(n=n, length=length)
    return solve_extension(ExtensionProblem(source=gaussian_difference(grid), alpha=alpha, levels=levels))
