"""Metric conventions used by theorem diagnostics."""

from typing import Any

from pydantic import BaseModel, ConfigDict, PositiveFloat

from ..schema import Geometry, MeasureRepresentation
from ..spectral import Field
from .bounded_lipschitz import bounded_lipschitz_vector
from .measure import GridMeasure
from .wasserstein import wasserstein2_1d, wasserstein2_entropic, wasserstein2_torus_1d


class MetricHooks(BaseModel):
    """How densities and momenta are compared when building error series.

    Densities are read as histograms by default so that ``d_2^2`` is quadratic in
    small perturbations. Two-dimensional grids fall back to debiased Sinkhorn.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    geometry: Geometry = Geometry.TORUS
    d2_representation: MeasureRepresentation = MeasureRepresentation.HISTOGRAM
    entropic_reg: PositiveFloat = 0.05

    def measure(self, rho: Field) -> GridMeasure:
        return GridMeasure.from_field(rho, geometry=self.geometry, representation=self.d2_representation)

    def d2_squared(self, rho_a: Field, rho_b: Field) -> float:
        mu, nu = self.measure(rho_a), self.measure(rho_b)
        if rho_a.grid.d == 2:
            return max(wasserstein2_entropic(mu, nu, self.entropic_reg).value, 0.0)
        if self.geometry == Geometry.TORUS:
            return wasserstein2_torus_1d(mu, nu) ** 2
        return wasserstein2_1d(mu, nu) ** 2

    def dbl_momentum(self, m_a: Field, m_b: Field) -> float:
        return bounded_lipschitz_vector(m_a, m_b, self.geometry)

    def metadata(self) -> dict[str, Any]:
        """Conventions recorded next to every sweep output."""
        return {
            "ground_distance": "geodesic" if self.geometry == Geometry.TORUS else "euclidean",
            "geometry": self.geometry.value,
            "d2_representation": self.d2_representation.value,
            "d2_solver_2d": f"debiased sinkhorn, reg={self.entropic_reg!r}",
            "dbl_graph": "grid-adjacent edges",
            "dbl_momentum": "componentwise, root-sum-square",
        }


DEFAULT_HOOKS = MetricHooks()
