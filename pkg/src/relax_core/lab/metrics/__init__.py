"""Wasserstein-2 and bounded-Lipschitz distances between grid measures."""

from .bounded_lipschitz import BLResult, adjacency_edges, bounded_lipschitz, bounded_lipschitz_vector
from .gronwall import LemmaD2Report, lemma_d2_check, lipschitz_constant
from .hooks import DEFAULT_HOOKS, MetricHooks
from .measure import GridMeasure, geodesic_difference
from .transport_lp import squared_distance_matrix, support_points, transport_lp, wasserstein2_lp
from .wasserstein import EntropicEstimate, wasserstein2_1d, wasserstein2_entropic, wasserstein2_torus_1d

__all__ = [
    BLResult,
    DEFAULT_HOOKS,
    EntropicEstimate,
    GridMeasure,
    LemmaD2Report,
    MetricHooks,
    adjacency_edges,
    bounded_lipschitz,
    bounded_lipschitz_vector,
    geodesic_difference,
    lemma_d2_check,
    lipschitz_constant,
    squared_distance_matrix,
    support_points,
    transport_lp,
    wasserstein2_1d,
    wasserstein2_entropic,
    wasserstein2_lp,
    wasserstein2_torus_1d,
]
