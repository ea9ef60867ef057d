"""Discriminator values shared across the lab."""

from enum import StrEnum


class Regime(StrEnum):
    """Sign regimes of the pressure and interaction coefficients."""

    PRESSURELESS_REPULSIVE = "pressureless_repulsive"
    PRESSURE_ATTRACTIVE = "pressure_attractive"
    PRESSURE_REPULSIVE = "pressure_repulsive"
    PRESSURE_ONLY = "pressure_only"


class TheoremPart(StrEnum):
    """Which error functional a sweep measures."""

    # sup of d2 squared plus the negative Sobolev norm squared
    WASSERSTEIN = "wasserstein"
    # sup of the L^gamma density error squared
    LEBESGUE = "lebesgue"


class Geometry(StrEnum):
    """Ground geometry of a grid measure."""

    LINE_SEGMENT = "line_segment"
    TORUS = "torus"


class MeasureRepresentation(StrEnum):
    """How nodal weights are read as a measure."""

    ATOMIC = "atomic"
    HISTOGRAM = "histogram"


class Study(StrEnum):
    """Lemma verification studies runnable from the CLI."""

    COMMUTATOR = "commutator"
    HLS = "hls"
    EXTENSION = "extension"
    LOWER_BOUNDS = "lower_bounds"
    METRIC_SANITY = "metric_sanity"


def theorem_part_for(regime: Regime) -> TheoremPart:
    """Return the error functional controlled in the given regime."""
    if regime == Regime.PRESSURELESS_REPULSIVE:
        return TheoremPart.WASSERSTEIN
    return TheoremPart.LEBESGUE
