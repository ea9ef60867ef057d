"""Energies, modulated energies, norms and identity residuals."""

from .functionals import (
    density_difference,
    free_energy,
    interaction_energy,
    internal_energy,
    kinetic_energy,
    modulated_interaction,
    modulated_internal,
    modulated_kinetic,
)
from .identities import (
    ModulatedSeries,
    energy_identity_residual,
    interaction_derivative_constant,
    internal_derivative_residual,
    modulated_energy_terms,
    modulated_inequality_constant,
)
from .norms import (
    L1Norm,
    L2Norm,
    LGammaNorm,
    NegSobolevNorm,
    NormKind,
    SecondMomentNorm,
    SobolevNorm,
    norm,
)
from .report import EnergyReport, csv_columns, energy_report
from .theorem import TheoremSeries, internal_energy_monitor, l1_momentum_constant, theorem_lhs

__all__ = [
    EnergyReport,
    L1Norm,
    L2Norm,
    LGammaNorm,
    ModulatedSeries,
    NegSobolevNorm,
    NormKind,
    SecondMomentNorm,
    SobolevNorm,
    TheoremSeries,
    csv_columns,
    density_difference,
    energy_identity_residual,
    energy_report,
    free_energy,
    interaction_derivative_constant,
    interaction_energy,
    internal_derivative_residual,
    internal_energy,
    internal_energy_monitor,
    kinetic_energy,
    l1_momentum_constant,
    modulated_energy_terms,
    modulated_inequality_constant,
    modulated_interaction,
    modulated_internal,
    modulated_kinetic,
    norm,
    theorem_lhs,
]
