"""Lower bounds on the modulated internal energy: pointwise and through the Lebesgue-norm chain."""

import logging

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..errors import RangeError
from ..spectral import PeriodicGrid
from ..state import relative_internal_density, relative_internal_lower_bound

logger = logging.getLogger(__name__)

POINTWISE_TOLERANCE = 1e-12
CHAIN_TOLERANCE = 1e-10
CHAIN_STEPS = ("holder", "power", "pointwise", "norm_constant")


def pointwise_violations(rho: np.ndarray, rho_bar: np.ndarray, gamma: float) -> int:
    """Count of pairs where ``U(rho | rho_bar) < (gamma/2) min(rho^{gamma-2}, rho_bar^{gamma-2}) |rho - rho_bar|^2``.

    The tolerance is relative to the size of the terms that cancel in ``U(rho | rho_bar)``.
    """
    relative = relative_internal_density(rho, rho_bar, gamma)
    bound = relative_internal_lower_bound(rho, rho_bar, gamma)
    scale = np.maximum(1.0, np.abs(rho) ** gamma + np.abs(rho_bar) ** gamma)
    return int(np.count_nonzero(relative < bound - POINTWISE_TOLERANCE * scale))


class ChainTerms(BaseModel):
    """Both sides of each inequality in ``||rho - rho_bar||_gamma^2 <= C int U(rho | rho_bar)``."""

    model_config = ConfigDict(frozen=True)

    gamma: float
    lebesgue: float
    weighted: float
    relative: float
    max_power: float
    constant: float
    norm_constant: float

    def sides(self) -> dict[str, tuple[float, float]]:
        g = self.gamma
        holder = (g / 2) ** (-g / 2) * self.weighted ** (g / 2) * self.max_power ** ((2 - g) / 2)
        return {
            "holder": (self.lebesgue, holder),
            "power": (self.lebesgue ** (2 / g), self.constant * self.weighted),
            "pointwise": (self.weighted, self.relative),
            "norm_constant": (self.constant, self.norm_constant),
        }

    def failed_steps(self) -> list[str]:
        return [
            step
            for step, (lhs, rhs) in self.sides().items()
            if lhs > rhs * (1 + CHAIN_TOLERANCE)
        ]


def chain_terms(rho: np.ndarray, rho_bar: np.ndarray, gamma: float, grid: PeriodicGrid) -> ChainTerms:
    """Evaluate the interpolation chain for ``1 <= gamma <= 2`` on nodal densities."""
    if not 1 <= gamma <= 2:
        raise RangeError(f"The interpolation chain needs 1 <= gamma <= 2, got {gamma!r}")
    difference = rho - rho_bar
    weight = gamma / 2 * np.minimum(rho ** (gamma - 2), rho_bar ** (gamma - 2))
    max_power = float(grid.integrate(np.maximum(rho**gamma, rho_bar**gamma)))
    norms = float(grid.integrate(rho**gamma)) + float(grid.integrate(rho_bar**gamma))
    return ChainTerms(
        gamma=gamma,
        lebesgue=float(grid.integrate(np.abs(difference) ** gamma)),
        weighted=float(grid.integrate(weight * difference**2)),
        relative=float(grid.integrate(relative_internal_density(rho, rho_bar, gamma))),
        max_power=max_power,
        constant=(gamma / 2) ** -1 * max_power ** ((2 - gamma) / gamma),
        norm_constant=(2 / gamma) * norms ** ((2 - gamma) / gamma),
    )


class LowerBoundsReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    samples: int
    pointwise_violations: dict[str, int]
    pairs: int
    chain_violations: dict[str, int]

    @property
    def passed(self) -> bool:
        return not any(self.pointwise_violations.values()) and not any(self.chain_violations.values())


def _random_positive(rng: np.random.Generator, size: int | tuple[int, ...]) -> np.ndarray:
    """Log-uniform samples in ``[1e-3, 10]``."""
    return np.exp(rng.uniform(np.log(1e-3), np.log(10.0), size=size))


def lower_bounds_study(
    samples: int = 100_000,
    gammas: tuple[float, ...] = (1.0, 1.5, 2.0, 3.0),
    pairs: int = 1000,
    chain_gammas: tuple[float, ...] = (1.0, 1.25, 1.5, 2.0),
    n: int = 64,
    seed: int = 0,
) -> LowerBoundsReport:
    rng = np.random.default_rng(seed)
    pointwise = {}
    for gamma in gammas:
        rho, rho_bar = _random_positive(rng, samples), _random_positive(rng, samples)
        pointwise[repr(gamma)] = pointwise_violations(rho, rho_bar, gamma)

    grid = PeriodicGrid(n=n)
    chain = dict.fromkeys(CHAIN_STEPS, 0)
    for index in range(pairs):
        gamma = chain_gammas[index % len(chain_gammas)]
        terms = chain_terms(_random_positive(rng, grid.shape), _random_positive(rng, grid.shape), gamma, grid)
        for step in terms.failed_steps():
            chain[step] += 1
    logger.info(f"Lower-bound study: pointwise {pointwise!r}, chain {chain!r}")
    return LowerBoundsReport(samples=samples, pointwise_violations=pointwise, pairs=pairs, chain_violations=chain)
