"""Enumerations used as discriminators and tags."""

from .enums import Geometry, MeasureRepresentation, Regime, Study, TheoremPart, theorem_part_for

__all__ = [
    Geometry,
    MeasureRepresentation,
    Regime,
    Study,
    TheoremPart,
    theorem_part_for,
]
