"""Hardy-Littlewood-Sobolev probe on a large torus standing in for the whole space."""

import logging
import math

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..energetics import LGammaNorm, interaction_energy, norm
from ..errors import RangeError
from ..spectral import Field, PeriodicGrid, check_riesz_exponent

logger = logging.getLogger(__name__)

EXPONENT_TOLERANCE = 1e-12
DRIFT_LIMIT = 2.0
# Physical window holding the random data, independent of the period
DATA_HALF_WIDTH = math.pi


def check_hls_exponents(alpha: float, d: int, p: float, q: float) -> None:
    check_riesz_exponent(alpha, d)
    if not (1 < p < math.inf and 1 < q < math.inf):
        raise RangeError(f"Exponents p={p!r}, q={q!r} must lie in (1, inf)")
    mismatch = abs(1 / p + 1 / q + alpha / d - 2)
    if mismatch > EXPONENT_TOLERANCE:
        raise RangeError(f"1/p + 1/q + alpha/d = 2 violated by {mismatch!r}")


def compact_bump(grid: PeriodicGrid, center: np.ndarray, width: float) -> np.ndarray:
    """``exp(-1 / (1 - r^2))`` with ``r = |x - center| / width``, zero outside, unit mass."""
    offset = grid.nodes - np.reshape(center, (grid.d,) + (1,) * grid.d)
    r2 = np.sum(offset**2, axis=0) / width**2
    inside = r2 < 1
    values = np.zeros(grid.shape)
    values[inside] = np.exp(-1 / (1 - r2[inside]))
    return values / grid.integrate(values)


def hls_ratio(f: Field, g: Field, alpha: float, p: float, q: float) -> float:
    """``|int f Lambda^{alpha-d} g| / (||f||_p ||g||_q)``; zero data contributes 0."""
    denominator = norm(f, LGammaNorm(gamma=p)) * norm(g, LGammaNorm(gamma=q))
    if denominator == 0:
        return 0.0
    return abs(interaction_energy(f, g, alpha, f.grid.d)) / denominator


def random_dipole(grid: PeriodicGrid, rng: np.random.Generator) -> Field:
    """Mean-zero pair: a unit bump minus a displaced unit bump, both inside the data window."""
    centers = rng.uniform(-DATA_HALF_WIDTH / 2, DATA_HALF_WIDTH / 2, size=(2, grid.d))
    widths = rng.uniform(0.3, 1.0, size=2)
    values = compact_bump(grid, centers[0], widths[0]) - compact_bump(grid, centers[1], widths[1])
    return Field(grid=grid, values=values)


class HLSProbe(BaseModel):
    model_config = ConfigDict(frozen=True)

    alpha: float
    d: int
    p: float
    q: float
    n: int
    length: float
    trials: int
    seed: int
    max_ratio: float


def hls_probe(
    alpha: float,
    d: int,
    p: float,
    q: float,
    trials: int = 20,
    n: int = 1024,
    length: float = 8 * math.pi,
    seed: int = 0,
) -> HLSProbe:
    """Empirical HLS constant over seeded random dipoles; ``d = 2`` uses ``n`` nodes per axis."""
    check_hls_exponents(alpha, d, p, q)
    if length < 4 * DATA_HALF_WIDTH:
        raise ValueError(f"Period {length!r} too short for the data window")
    grid = PeriodicGrid(d=d, n=n, length=length)
    ratios = []
    for trial_seed in np.random.SeedSequence(seed).spawn(trials):
        rng = np.random.default_rng(trial_seed)
        ratios.append(hls_ratio(random_dipole(grid, rng), random_dipole(grid, rng), alpha, p, q))
    return HLSProbe(
        alpha=alpha,
        d=d,
        p=p,
        q=q,
        n=n,
        length=length,
        trials=trials,
        seed=seed,
        max_ratio=max(ratios, default=0.0),
    )


class HLSStudy(BaseModel):
    """Three probes on the same seeded data: ``base``, ``refined`` (half the spacing) and ``doubled``.

    ``doubled`` keeps the refined spacing on twice the period, so ``period_shift``
    isolates the whole-space proxy error from the discretization error.
    """

    model_config = ConfigDict(frozen=True)

    base: HLSProbe
    refined: HLSProbe
    doubled: HLSProbe

    @property
    def legs(self) -> list[HLSProbe]:
        return [self.base, self.refined, self.doubled]

    @property
    def max_ratio(self) -> float:
        return max(leg.max_ratio for leg in self.legs)

    @property
    def drift(self) -> float:
        return self.max_ratio / max(min(leg.max_ratio for leg in self.legs), 1e-300)

    @property
    def period_shift(self) -> float:
        """Relative change of the constant when only the period doubles."""
        return abs(self.doubled.max_ratio - self.refined.max_ratio) / max(self.refined.max_ratio, 1e-300)

    @property
    def passed(self) -> bool:
        return self.drift < DRIFT_LIMIT


def hls_study(
    alpha: float = 0.5,
    d: int = 1,
    p: float | None = None,
    q: float | None = None,
    trials: int = 20,
    n: int = 1024,
    seed: int = 0,
) -> HLSStudy:
    """Probe at ``n`` nodes on ``8 pi``, refine to ``2n``, then double the period at ``4n`` nodes.

    A missing exponent is filled in from the scaling relation, giving ``p = q`` when both are missing.
    """
    if p is None:
        p = 2 / (2 - alpha / d) if q is None else 1 / (2 - alpha / d - 1 / q)
    if q is None:
        q = 1 / (2 - alpha / d - 1 / p)
    base = hls_probe(alpha, d, p, q, trials, n, 8 * math.pi, seed)
    refined = hls_probe(alpha, d, p, q, trials, 2 * n, 8 * math.pi, seed)
    doubled = hls_probe(alpha, d, p, q, trials, 4 * n, 16 * math.pi, seed)
    study = HLSStudy(base=base, refined=refined, doubled=doubled)
    logger.info(
        f"HLS study: max ratio {base.max_ratio!r} -> {refined.max_ratio!r} -> {doubled.max_ratio!r}, "
        f"period shift {study.period_shift!r}"
    )
    return study
