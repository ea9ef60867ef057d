"""Physical constants, the relaxation parameter and regime classification."""

from typing import Literal

from pydantic import (
    BaseModel,
    ConfigDict,
    NonNegativeFloat,
    PositiveFloat,
    ValidationInfo,
    computed_field,
    field_validator,
)

from ..schema import Regime, TheoremPart, theorem_part_for
from ..spectral import check_riesz_exponent


class PhysicalConstants(BaseModel):
    """Coefficients shared by the Euler-Riesz system and its relaxation limit.

    Field order matters: ``c_k`` is validated against ``c_p`` and ``alpha``
    against ``d``.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    c_p: NonNegativeFloat = 0.0
    c_k: float
    gamma: float = 1.0
    d: Literal[1, 2] = 1
    alpha: float

    @field_validator("gamma")
    @classmethod
    def _check_gamma(cls, gamma: float) -> float:
        if gamma < 1:
            raise ValueError(f"gamma must be at least 1, got {gamma!r}")
        return gamma

    @field_validator("c_k")
    @classmethod
    def _check_regime(cls, c_k: float, info: ValidationInfo) -> float:
        c_p = info.data.get("c_p")
        if c_p == 0 and c_k > 0:
            raise ValueError("ill-posed regime: pressureless and attractive (c_p = 0, c_k > 0)")
        if c_p == 0 and c_k == 0:
            raise ValueError("degenerate regime: neither pressure nor interaction (c_p = 0, c_k = 0)")
        return c_k

    @field_validator("alpha")
    @classmethod
    def _check_alpha(cls, alpha: float, info: ValidationInfo) -> float:
        check_riesz_exponent(alpha, info.data.get("d", 1))
        return alpha

    @computed_field
    @property
    def regime(self) -> Regime:
        if self.c_p == 0:
            return Regime.PRESSURELESS_REPULSIVE
        if self.c_k > 0:
            return Regime.PRESSURE_ATTRACTIVE
        if self.c_k < 0:
            return Regime.PRESSURE_REPULSIVE
        return Regime.PRESSURE_ONLY

    @property
    def theorem_part(self) -> TheoremPart:
        return theorem_part_for(self.regime)

    @property
    def riesz_order(self) -> float:
        """Order ``alpha - d`` of the Riesz potential."""
        return self.alpha - self.d

    @property
    def theta(self) -> float:
        """Lebesgue exponent ``2d / (2d - alpha)`` controlling the interaction energy."""
        return 2 * self.d / (2 * self.d - self.alpha)

    @property
    def gamma_threshold(self) -> float:
        """Smallest adiabatic exponent with uniform-in-epsilon internal energy bounds."""
        return 1 + self.alpha / self.d


class Params(PhysicalConstants):
    """Constants together with one relaxation parameter."""

    epsilon: PositiveFloat


def is_well_posed(epsilon: float, c_p: float, c_k: float, gamma: float, alpha: float, d: int) -> bool:
    """Predicate mirrored by the validators of ``Params``."""
    return (
        epsilon > 0
        and c_p >= 0
        and gamma >= 1
        and d in (1, 2)
        and max(0, d - 2) < alpha < d
        and not (c_p == 0 and c_k >= 0)
    )
