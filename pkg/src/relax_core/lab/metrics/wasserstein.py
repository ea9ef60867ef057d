"""Wasserstein-2 distances: exact 1-D quantile couplings and debiased Sinkhorn."""

import logging
import math
from collections.abc import Callable
from typing import NamedTuple

import numpy as np
from pydantic import BaseModel, ConfigDict
from scipy.special import logsumexp

from ..errors import ConvergenceError, GeometryError, GridMismatchError
from ..schema import Geometry, MeasureRepresentation
from .measure import GridMeasure
from .transport_lp import squared_distance_matrix, support_points

logger = logging.getLogger(__name__)

GOLDEN = (math.sqrt(5) - 1) / 2
OFFSET_TOLERANCE = 1e-10
OFFSET_SCAN = 128
SNAP_WINDOW = 1e-6
SNAP_LIMIT = 2048
SINKHORN_NODE_LIMIT = 64**2
SINKHORN_CHECK_EVERY = 10


class _Quantile(NamedTuple):
    """Piecewise-linear quantile: on ``(left[i], cdf[i]]`` it is ``start[i] + slope[i] (s - left[i])``."""

    cdf: np.ndarray
    left: np.ndarray
    start: np.ndarray
    slope: np.ndarray

    @property
    def breakpoints(self) -> np.ndarray:
        return np.append(self.left, 1.0)


def _quantile(measure: GridMeasure) -> _Quantile:
    grid = measure.grid
    masses = measure.probability_masses()
    keep = masses > 0
    p = masses[keep] / np.sum(masses)
    x = grid.axis_nodes[keep]
    cdf = np.cumsum(p)
    cdf[-1] = 1.0
    left = np.concatenate(([0.0], cdf[:-1]))
    if measure.representation == MeasureRepresentation.HISTOGRAM:
        return _Quantile(cdf, left, x - grid.h / 2, grid.h / p)
    return _Quantile(cdf, left, x, np.zeros_like(x))


def _evaluate(q: _Quantile, lo: np.ndarray, hi: np.ndarray, mid: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Values at both ends of intervals lying inside a single quantile piece."""
    index = np.minimum(np.searchsorted(q.cdf, mid), len(q.cdf) - 1)
    start, slope, left = q.start[index], q.slope[index], q.left[index]
    return start + slope * (lo - left), start + slope * (hi - left)


def _quantile_cost(qa: _Quantile, qb: _Quantile, shift: float = 0.0, period: float | None = None) -> float:
    """``int_0^1 |Q_a(t) - Q_b(t + shift)|^2 dt``, ``Q_b`` lifted periodically when ``period`` is set."""
    if period is None:
        b_breaks = qb.breakpoints
    else:
        b_breaks = np.concatenate([qb.breakpoints + k - shift for k in (-1, 0, 1)])
    points = np.unique(np.clip(np.concatenate((qa.breakpoints, b_breaks)), 0.0, 1.0))
    lo, hi = points[:-1], points[1:]
    mid = (lo + hi) / 2

    a_lo, a_hi = _evaluate(qa, lo, hi, mid)
    if period is None:
        b_lo, b_hi = _evaluate(qb, lo, hi, mid)
    else:
        wraps = np.floor(mid + shift)
        b_lo, b_hi = _evaluate(qb, lo + shift - wraps, hi + shift - wraps, mid + shift - wraps)
        b_lo = b_lo + wraps * period
        b_hi = b_hi + wraps * period
    d0, d1 = a_lo - b_lo, a_hi - b_hi
    return float(np.sum((hi - lo) * (d0 * d0 + d0 * d1 + d1 * d1) / 3))


def _check_pair(mu: GridMeasure, nu: GridMeasure, geometry: Geometry) -> None:
    if mu.grid.d != 1 or nu.grid.d != 1:
        raise GeometryError("Quantile couplings need one-dimensional measures")
    if mu.geometry != geometry or nu.geometry != geometry:
        raise GeometryError(f"Expected {geometry.value!r} measures, got {mu.geometry.value!r}/{nu.geometry.value!r}")
    if not mu.grid.matches(nu.grid):
        raise GridMismatchError("Measures live on different grids")


def wasserstein2_1d(mu: GridMeasure, nu: GridMeasure) -> float:
    """Exact ``d_2`` on a line segment via the quantile coupling."""
    _check_pair(mu, nu, Geometry.LINE_SEGMENT)
    return math.sqrt(max(_quantile_cost(_quantile(mu), _quantile(nu)), 0.0))


def _golden_section(f: Callable[[float], float], lo: float, hi: float, tol: float) -> float:
    c, d = hi - GOLDEN * (hi - lo), lo + GOLDEN * (hi - lo)
    fc, fd = f(c), f(d)
    while hi - lo > tol:
        if fc <= fd:
            hi, d, fd = d, c, fc
            c = hi - GOLDEN * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + GOLDEN * (hi - lo)
            fd = f(d)
    return (lo + hi) / 2


def _snap_candidates(qa: _Quantile, qb: _Quantile, offset: float) -> np.ndarray:
    """Offsets near ``offset`` where breakpoints of both quantiles coincide (kinks of the cost)."""
    ba, bb = qa.breakpoints, qb.breakpoints
    if len(ba) > SNAP_LIMIT or len(bb) > SNAP_LIMIT:
        return np.empty(0)
    differences = bb[None, :] - ba[:, None]
    candidates = np.concatenate([differences.ravel() + k for k in (-1, 0, 1)])
    return np.unique(candidates[np.abs(candidates - offset) <= SNAP_WINDOW])


def wasserstein2_torus_1d(mu: GridMeasure, nu: GridMeasure) -> float:
    """Exact ``d_2`` on the circle with geodesic cost.

    The cost of the quantile coupling shifted by a mass offset is convex in the
    offset; a coarse scan brackets the minimum, golden-section refines it and
    coincident-breakpoint offsets nearby are tried as exact kink minima.
    """
    _check_pair(mu, nu, Geometry.TORUS)
    qa, qb = _quantile(mu), _quantile(nu)
    period = mu.grid.length

    def cost(offset: float) -> float:
        return _quantile_cost(qa, qb, offset, period)

    scan = np.linspace(-1.0, 1.0, 2 * OFFSET_SCAN + 1)
    values = [cost(offset) for offset in scan]
    best = int(np.argmin(values))
    lo, hi = scan[max(best - 1, 0)], scan[min(best + 1, len(scan) - 1)]
    offset = _golden_section(cost, lo, hi, OFFSET_TOLERANCE)

    value = min(cost(offset), values[best])
    for candidate in _snap_candidates(qa, qb, offset):
        value = min(value, cost(float(candidate)))
    return math.sqrt(max(value, 0.0))


class EntropicEstimate(BaseModel):
    """Debiased Sinkhorn estimate of ``d_2^2`` with its bias bound ``reg * log(N)``."""

    model_config = ConfigDict(frozen=True)

    value: float
    bias_bound: float
    iterations: int
    violation: float

    @property
    def distance(self) -> float:
        return math.sqrt(max(self.value, 0.0))


def _sinkhorn(a: np.ndarray, b: np.ndarray, cost: np.ndarray, reg: float, max_iter: int, tol: float):
    """Log-domain Sinkhorn; returns the dual value, iteration count and row-marginal violation."""
    log_a, log_b = np.log(a), np.log(b)
    f, g = np.zeros_like(a), np.zeros_like(b)
    violation = math.inf
    for iteration in range(1, max_iter + 1):
        f = -reg * logsumexp((g[None, :] - cost) / reg + log_b[None, :], axis=1)
        g = -reg * logsumexp((f[:, None] - cost) / reg + log_a[:, None], axis=0)
        if iteration % SINKHORN_CHECK_EVERY == 0 or iteration == max_iter:
            log_rows = log_a + logsumexp((f[:, None] + g[None, :] - cost) / reg + log_b[None, :], axis=1)
            violation = float(np.sum(np.abs(np.exp(log_rows) - a)))
            if violation < tol:
                return float(a @ f + b @ g), iteration, violation
    raise ConvergenceError(
        f"Sinkhorn stopped after {max_iter} iterations, violation {violation!r}", violation=violation
    )


def wasserstein2_entropic(
    mu: GridMeasure,
    nu: GridMeasure,
    reg: float,
    max_iter: int = 10_000,
    tol: float = 1e-9,
) -> EntropicEstimate:
    """Sinkhorn divergence ``OT(mu, nu) - OT(mu, mu)/2 - OT(nu, nu)/2``."""
    if reg <= 0:
        raise ValueError(f"reg must be positive, got {reg!r}")
    if not mu.grid.matches(nu.grid):
        raise GridMismatchError("Measures live on different grids")
    if mu.grid.size > SINKHORN_NODE_LIMIT:
        raise ValueError(f"Sinkhorn fallback limited to {SINKHORN_NODE_LIMIT} nodes, got {mu.grid.size}")
    a, x = support_points(mu)
    b, y = support_points(nu)

    cross, iterations, violation = _sinkhorn(a, b, squared_distance_matrix(x, y, mu), reg, max_iter, tol)
    self_a, _, _ = _sinkhorn(a, a, squared_distance_matrix(x, x, mu), reg, max_iter, tol)
    self_b, _, _ = _sinkhorn(b, b, squared_distance_matrix(y, y, mu), reg, max_iter, tol)
    logger.debug(f"Sinkhorn converged in {iterations} iterations (violation {violation!r})")
    return EntropicEstimate(
        value=cross - self_a / 2 - self_b / 2,
        bias_bound=reg * math.log(max(len(a), len(b), 2)),
        iterations=iterations,
        violation=violation,
    )
