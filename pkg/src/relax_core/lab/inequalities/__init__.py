"""Numerical verifiers for the supporting inequalities."""

from .commutator import (
    CommutatorReport,
    CommutatorStudy,
    commutator_direct_sum,
    commutator_field,
    commutator_ratio_study,
    random_band_limited,
)
from .extension import (
    ExtensionProblem,
    ExtensionResult,
    extension_constant,
    extension_energy,
    extension_study,
    gaussian_difference,
    mode_response,
    solve_extension,
)
from .hls import HLSProbe, HLSStudy, check_hls_exponents, compact_bump, hls_probe, hls_ratio, hls_study
from .lower_bounds import ChainTerms, LowerBoundsReport, chain_terms, lower_bounds_study, pointwise_violations
from .metric_sanity import MetricSanityReport, metric_sanity_study, random_measure

__all__ = [
    ChainTerms,
    CommutatorReport,
    CommutatorStudy,
    ExtensionProblem,
    ExtensionResult,
    HLSProbe,
    HLSStudy,
    LowerBoundsReport,
    MetricSanityReport,
    chain_terms,
    check_hls_exponents,
    commutator_direct_sum,
    commutator_field,
    commutator_ratio_study,
    compact_bump,
    extension_constant,
    extension_energy,
    extension_study,
    gaussian_difference,
    hls_probe,
    hls_ratio,
    hls_study,
    lower_bounds_study,
    metric_sanity_study,
    mode_response,
    pointwise_violations,
    random_band_limited,
    random_measure,
    solve_extension,
]
