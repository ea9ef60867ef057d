"""Randomized sanity suite for the transport and bounded-Lipschitz distances."""

import logging

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..metrics import GridMeasure, bounded_lipschitz, wasserstein2_1d, wasserstein2_lp, wasserstein2_torus_1d
from ..schema import Geometry
from ..spectral import PeriodicGrid

logger = logging.getLogger(__name__)

LP_TOLERANCE = 1e-8
TORUS_TOLERANCE = 1e-6
SYMMETRY_TOLERANCE = 1e-12
TRIANGLE_TOLERANCE = 1e-8
ORDER_TOLERANCE = 1e-8


def random_measure(
    grid: PeriodicGrid,
    rng: np.random.Generator,
    geometry: Geometry,
    support: int | None = None,
) -> GridMeasure:
    """Random probability measure, optionally carried by ``support`` random nodes."""
    masses = rng.uniform(0.05, 1.0, size=grid.size)
    if support is not None:
        masses[rng.permutation(grid.size)[support:]] = 0.0
    masses = masses.reshape(grid.shape) / masses.sum()
    return GridMeasure.from_masses(grid, masses, geometry=geometry)


class MetricSanityReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    checks: dict[str, int]
    failures: dict[str, int]
    max_errors: dict[str, float]

    @property
    def passed(self) -> bool:
        return not any(self.failures.values())


def metric_sanity_study(
    bl_pairs: int = 100,
    lp_cases: int = 500,
    torus_cases: int = 50,
    triples: int = 200,
    n: int = 16,
    seed: int = 0,
) -> MetricSanityReport:
    rng = np.random.default_rng(seed)
    grid = PeriodicGrid(n=n)
    failures: dict[str, int] = {}
    errors: dict[str, float] = {}

    def record(check: str, error: float, tolerance: float) -> None:
        errors[check] = max(errors.get(check, 0.0), error)
        failures[check] = failures.get(check, 0) + int(error > tolerance)

    for _ in range(bl_pairs):
        mu, nu = (random_measure(grid, rng, Geometry.TORUS) for _ in range(2))
        record("dbl_below_d2", bounded_lipschitz(mu, nu).value - wasserstein2_torus_1d(mu, nu), ORDER_TOLERANCE)

    for _ in range(lp_cases):
        support = int(rng.integers(1, n + 1))
        mu, nu = (random_measure(grid, rng, Geometry.LINE_SEGMENT, support) for _ in range(2))
        record("segment_lp", abs(wasserstein2_1d(mu, nu) ** 2 - wasserstein2_lp(mu, nu) ** 2), LP_TOLERANCE)

    for _ in range(torus_cases):
        mu, nu = (random_measure(grid, rng, Geometry.TORUS) for _ in range(2))
        record("torus_lp", abs(wasserstein2_torus_1d(mu, nu) - wasserstein2_lp(mu, nu)), TORUS_TOLERANCE)

    for _ in range(triples):
        a, b, c = (random_measure(grid, rng, Geometry.LINE_SEGMENT) for _ in range(3))
        ab, ba = wasserstein2_1d(a, b), wasserstein2_1d(b, a)
        record("symmetry", abs(ab - ba), SYMMETRY_TOLERANCE)
        record("triangle", wasserstein2_1d(a, c) - ab - wasserstein2_1d(b, c), TRIANGLE_TOLERANCE)

    checks = {"dbl_below_d2": bl_pairs, "segment_lp": lp_cases, "torus_lp": torus_cases}
    checks |= {"symmetry": triples, "triangle": triples}
    logger.info(f"Metric sanity failures: {failures!r}")
    return MetricSanityReport(checks=checks, failures=failures, max_errors=errors)
