"""Norms of grid fields, selected by a discriminated kind."""

import math
from abc import ABC, abstractmethod
from typing import Annotated, Literal, override

import numpy as np
from pydantic import BaseModel, ConfigDict, Discriminator, Field as PydanticField, model_validator

from ..errors import MeanZeroError
from ..spectral import Field, check_riesz_exponent

# Relative net mass tolerated by the negative-order norm
MEAN_ZERO_TOLERANCE = 1e-8


class NormBase(BaseModel, ABC):
    model_config = ConfigDict(frozen=True, extra="forbid")

    @abstractmethod
    def evaluate(self, f: Field) -> float:
        """Norm of ``f``; vector fields use the pointwise Euclidean magnitude."""


def _magnitude(f: Field) -> np.ndarray:
    return np.sqrt(np.sum(f.values**2, axis=0)) if f.is_vector else np.abs(f.values)


def _spectral_energy(f: Field, weights: np.ndarray) -> float:
    """``|T| sum_xi weights |c(xi)|^2`` summed over components."""
    power = np.abs(f.spectral) ** 2
    if f.is_vector:
        power = np.sum(power, axis=0)
    return float(np.sum(weights * power) * f.grid.volume)


class L1Norm(NormBase):
    kind: Literal["l1"] = "l1"

    @override
    def evaluate(self, f: Field) -> float:
        return float(f.grid.integrate(_magnitude(f)))


class L2Norm(NormBase):
    kind: Literal["l2"] = "l2"

    @override
    def evaluate(self, f: Field) -> float:
        return math.sqrt(float(f.grid.integrate(_magnitude(f) ** 2)))


class LGammaNorm(NormBase):
    kind: Literal["lgamma"] = "lgamma"
    gamma: float = PydanticField(ge=1)

    @override
    def evaluate(self, f: Field) -> float:
        return float(f.grid.integrate(_magnitude(f) ** self.gamma)) ** (1 / self.gamma)


class NegSobolevNorm(NormBase):
    """``||f||_{H^{-(d-alpha)/2}}`` on mean-zero fields."""

    kind: Literal["neg_sobolev"] = "neg_sobolev"
    alpha: float
    d: Literal[1, 2] = 1

    @model_validator(mode="after")
    def _check_alpha(self):
        check_riesz_exponent(self.alpha, self.d)
        return self

    @override
    def evaluate(self, f: Field) -> float:
        net = float(np.max(np.abs(f.integral())))
        scale = max(1.0, float(f.grid.integrate(_magnitude(f))))
        if net > MEAN_ZERO_TOLERANCE * scale:
            raise MeanZeroError(f"Negative-order norm of a field with net integral {net!r}")
        return math.sqrt(_spectral_energy(f, f.grid.fractional_multiplier(self.alpha - self.d)))


class SecondMomentNorm(NormBase):
    """``int |x|^2 f`` in centered coordinates on ``[-L/2, L/2)^d``."""

    kind: Literal["second_moment"] = "second_moment"

    @override
    def evaluate(self, f: Field) -> float:
        radius_sq = np.sum(f.grid.nodes**2, axis=0)
        return float(f.grid.integrate(radius_sq * _magnitude(f)))


class SobolevNorm(NormBase):
    """Homogeneous ``||Lambda^s f||_{L^2}``, or ``(1 + |xi|^2)^{s/2}`` weights when ``inhomogeneous``."""

    kind: Literal["sobolev"] = "sobolev"
    s: float
    inhomogeneous: bool = False

    @override
    def evaluate(self, f: Field) -> float:
        grid = f.grid
        if self.inhomogeneous:
            weights = (1 + grid.kmag**2) ** self.s
        else:
            weights = grid.fractional_multiplier(2 * self.s)
        return math.sqrt(_spectral_energy(f, weights))


NormKind = Annotated[
    L1Norm | L2Norm | LGammaNorm | NegSobolevNorm | SecondMomentNorm | SobolevNorm,
    Discriminator("kind"),
]


def norm(f: Field, kind: NormKind) -> float:
    return kind.evaluate(f)
