import math

import numpy as np
import pytest
from pydantic import TypeAdapter, ValidationError

from relax_core.lab.energetics import (
    L1Norm,
    L2Norm,
    LGammaNorm,
    NegSobolevNorm,
    NormKind,
    SecondMomentNorm,
    SobolevNorm,
    norm,
)
from relax_core.lab.errors import MeanZeroError
from relax_core.lab.spectral import Field, PeriodicGrid


@pytest.fixture
def grid():
    return PeriodicGrid(n=256)


@pytest.fixture
def cosine(grid):
    return Field(grid=grid, values=np.cos(grid.axis_nodes))


def test_l2_norm_of_cosine(cosine):
    assert norm(cosine, L2Norm()) == pytest.approx(math.sqrt(math.pi), rel=1e-12)


def test_l1_norm_of_cosine(cosine):
    assert norm(cosine, L1Norm()) == pytest.approx(4.0, rel=1e-3)


def test_lgamma_norm_reduces_to_l2(cosine):
    assert norm(cosine, LGammaNorm(gamma=2.0)) == pytest.approx(norm(cosine, L2Norm()), rel=1e-12)


def test_second_moment_of_uniform_density(grid):
    uniform = Field.constant(grid, 1 / grid.volume)

    assert norm(uniform, SecondMomentNorm()) == pytest.approx(math.pi**2 / 3, rel=1e-3)


def test_negative_sobolev_of_cosine(cosine):
    assert norm(cosine, NegSobolevNorm(alpha=0.5, d=1)) ** 2 == pytest.approx(math.pi, rel=1e-12)


def test_negative_sobolev_requires_mean_zero(grid):
    with pytest.raises(MeanZeroError):
        norm(Field.constant(grid, 1.0), NegSobolevNorm(alpha=0.5))


def test_negative_sobolev_exponent_range():
    with pytest.raises(ValidationError):
        NegSobolevNorm(alpha=1.5, d=1)


@pytest.mark.parametrize("s, factor", [(1.0, 4.0), (0.5, 2.0), (-0.25, 2**-0.5)])
def test_homogeneous_sobolev_scaling(grid, s, factor):
    f = Field(grid=grid, values=np.cos(2 * grid.axis_nodes))

    assert norm(f, SobolevNorm(s=s)) ** 2 == pytest.approx(factor * math.pi, rel=1e-12)


def test_inhomogeneous_sobolev(grid):
    f = Field(grid=grid, values=1.0 + np.cos(grid.axis_nodes))
    expected = 2 * math.pi + 2**2.0 * math.pi

    assert norm(f, SobolevNorm(s=2.0, inhomogeneous=True)) ** 2 == pytest.approx(expected, rel=1e-12)


def test_vector_norm_uses_magnitude(grid):
    x = grid.axis_nodes
    f = Field(grid=grid, values=np.stack([np.cos(x)]))

    assert norm(f, L2Norm()) == pytest.approx(math.sqrt(math.pi), rel=1e-12)


@pytest.mark.parametrize(
    "raw, expected",
    [
        ({"kind": "l1"}, L1Norm()),
        ({"kind": "lgamma", "gamma": 1.5}, LGammaNorm(gamma=1.5)),
        ({"kind": "neg_sobolev", "alpha": 0.5}, NegSobolevNorm(alpha=0.5)),
        ({"kind": "sobolev", "s": 2.0}, SobolevNorm(s=2.0)),
    ],
)
def test_norm_kind_discriminator(raw, expected):
    assert TypeAdapter(NormKind).validate_python(raw) == expected


def test_lgamma_below_one_is_rejected():
    with pytest.raises(ValidationError):
        LGammaNorm(gamma=0.5)
