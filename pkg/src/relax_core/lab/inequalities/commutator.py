"""Periodic commutator ``Lambda^{-b} div(u g) - (u . grad) Lambda^{-b} g`` and its boundedness study."""

import logging
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..errors import GeometryError, MeanZeroError, RangeError
from ..spectral import Field, PeriodicGrid, dealias, fractional_laplacian, spectral_divergence, spectral_gradient

logger = logging.getLogger(__name__)

MEAN_ZERO_TOLERANCE = 1e-10
# Largest velocity frequency drawn by the study
VELOCITY_BAND = 4
DRIFT_LIMIT = 2.0
ZERO_MODE_LIMIT = 2.0


def _as_vector(u: Field) -> Field:
    if u.is_vector:
        return u
    if u.grid.d != 1:
        raise ValueError("A scalar velocity is only accepted on one-dimensional grids")
    return u.with_values(u.values[None])


def _check_mean_zero(f: Field, name: str) -> None:
    mean = float(np.max(np.abs(f.mean())))
    if mean > MEAN_ZERO_TOLERANCE * max(1.0, f.max_abs()):
        raise MeanZeroError(f"{name} must have zero mean, got {mean!r}")


def commutator_field(u: Field, g: Field, b: float) -> Field:
    """Nodal ``H = Lambda^{-b} div(u g) - (u . grad) Lambda^{-b} g`` with dealiased products.

    ``b = 0`` reduces to ``H = g div u``.
    """
    u = _as_vector(u)
    _check_mean_zero(u, "u")
    _check_mean_zero(g, "g")
    smoothed = fractional_laplacian(g, -b)
    transported = fractional_laplacian(spectral_divergence(dealias(u * g)), -b)
    gradient = spectral_gradient(smoothed).values
    advected = dealias(g.with_values(np.sum(u.values * gradient, axis=0)))
    return transported - advected


def commutator_direct_sum(u: Field, g: Field, b: float, band: int) -> Field:
    """One-dimensional oracle ``H(xi) = sum_eta i (xi |xi|^{-b} - eta |eta|^{-b}) u(xi - eta) g(eta)``.

    Frequencies of ``u`` and ``g`` are truncated to ``|k| <= band``.
    """
    grid = g.grid
    if grid.d != 1:
        raise GeometryError("The direct-sum oracle is one-dimensional")
    if 4 * band >= grid.n:
        raise ValueError(f"band={band!r} too wide for n={grid.n!r}")
    u = _as_vector(u).component(0)
    coefficient_u, coefficient_g = u.spectral, g.spectral
    unit = grid.fundamental_wavenumber

    def symbol(k: int) -> complex:
        xi = k * unit
        return 0.0 if k == 0 else xi * abs(xi) ** (-b)

    result = np.zeros(grid.n, dtype=complex)
    for k in range(-2 * band, 2 * band + 1):
        total = 0j
        for m in range(-band, band + 1):
            if abs(k - m) > band:
                continue
            total += 1j * (symbol(k) - symbol(m)) * coefficient_u[(k - m) % grid.n] * coefficient_g[m % grid.n]
        result[k % grid.n] = total
    return Field(grid=grid, values=grid.inverse(result))


class CommutatorReport(BaseModel):
    """Largest ratio ``||H|| / (||u||_{H^s} ||Lambda^{-b} g||)`` over a study's trials at one grid size."""

    model_config = ConfigDict(frozen=True)

    b: float
    s: float
    n: int
    trials: int
    seed: int
    max_ratio: float
    max_zero_mode_constant: float


class CommutatorStudy(BaseModel):
    model_config = ConfigDict(frozen=True)

    reports: list[CommutatorReport]
    drift: float
    identity_error: float

    @property
    def passed(self) -> bool:
        return (
            self.drift < DRIFT_LIMIT
            and all(report.max_zero_mode_constant <= ZERO_MODE_LIMIT for report in self.reports)
            and self.identity_error <= 1e-12
        )


def random_band_limited(grid: PeriodicGrid, band: int, rng: np.random.Generator) -> Field:
    """Real mean-zero field ``sum_k Re(z_k e^{ikx}) / (1 + k)`` with complex normal ``z_k``, ``1 <= k <= band``.

    Draws happen in frequency order, so a wider band extends the same field.
    """
    x = grid.axis_nodes * grid.fundamental_wavenumber
    values = np.zeros(grid.n)
    for k in range(1, band + 1):
        z = complex(rng.normal(), rng.normal())
        values += (z.real * np.cos(k * x) - z.imag * np.sin(k * x)) / (1 + k)
    return Field(grid=grid, values=values)


def _sobolev(f: Field, s: float, homogeneous: bool) -> float:
    weights = f.grid.fractional_multiplier(2 * s) if homogeneous else (1 + f.grid.kmag**2) ** s
    power = np.abs(f.spectral) ** 2
    if f.is_vector:
        power = np.sum(power, axis=0)
    return math.sqrt(float(np.sum(weights * power)) * f.grid.volume)


def _trial(grid: PeriodicGrid, b: float, s: float, seed: np.random.SeedSequence) -> tuple[float, float]:
    rng = np.random.default_rng(seed)
    u = random_band_limited(grid, VELOCITY_BAND, rng)
    g = random_band_limited(grid, grid.n // 8, rng)
    h = commutator_field(u, g, b)
    smoothed_norm = _sobolev(fractional_laplacian(g, -b), 0.0, homogeneous=False)
    ratio = _sobolev(h, 0.0, homogeneous=False) / (_sobolev(u, s, homogeneous=False) * smoothed_norm)
    zero_mode = grid.volume * abs(h.spectral[0]) / (_sobolev(u, 1.0, homogeneous=True) * smoothed_norm)
    return ratio, zero_mode


def commutator_ratio_study(
    trials: int = 100,
    grid_sizes: tuple[int, ...] = (64, 128, 256),
    b: float = 0.25,
    s: float = 2.0,
    seed: int = 0,
    d: int = 1,
    threads: int = 1,
) -> CommutatorStudy:
    """Boundedness evidence for the commutator: max ratios must drift by less than 2x as ``n`` doubles."""
    if s <= d / 2 + 1:
        raise RangeError(f"Sobolev index s={s!r} must exceed d/2 + 1 = {d / 2 + 1!r}")
    if d != 1:
        raise GeometryError("The commutator study runs on one-dimensional grids")
    seeds = np.random.SeedSequence(seed).spawn(trials)

    reports = []
    for n in grid_sizes:
        grid = PeriodicGrid(n=n)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda trial_seed, grid=grid: _trial(grid, b, s, trial_seed), seeds))
        ratios, zero_modes = zip(*results, strict=True)
        reports.append(
            CommutatorReport(
                b=b,
                s=s,
                n=n,
                trials=trials,
                seed=seed,
                max_ratio=max(ratios),
                max_zero_mode_constant=max(zero_modes),
            )
        )
        logger.info(f"Commutator study n={n}: max ratio {max(ratios)!r}")

    maxima = [report.max_ratio for report in reports]
    drift = max((max(a, c) / min(a, c) for a, c in zip(maxima, maxima[1:], strict=False)), default=1.0)
    return CommutatorStudy(reports=reports, drift=drift, identity_error=_zero_order_identity_error(seed))


def _zero_order_identity_error(seed: int) -> float:
    """``max |H - g div u|`` at ``b = 0`` on a seeded band-limited pair."""
    grid = PeriodicGrid(n=64)
    rng = np.random.default_rng(seed)
    u = random_band_limited(grid, VELOCITY_BAND, rng)
    g = random_band_limited(grid, grid.n // 8, rng)
    h = commutator_field(u, g, 0.0)
    expected = dealias(g * spectral_divergence(_as_vector(u)))
    return (h - expected).max_abs()
