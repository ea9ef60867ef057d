import math

import numpy as np
import pytest

from relax_core.lab.errors import RangeError
from relax_core.lab.inequalities import check_hls_exponents, compact_bump, hls_probe, hls_ratio, hls_study
from relax_core.lab.spectral import Field, PeriodicGrid


@pytest.mark.parametrize(
    "alpha, d, p, q",
    [
        (0.5, 1, 1 / 0.75, 1 / 0.75),
        (1.0, 2, 4 / 3, 4 / 3),
        (0.5, 1, 1.6, 8 / 7),
    ],
)
def test_exponents_on_the_scaling_line(alpha, d, p, q):
    check_hls_exponents(alpha, d, p, q)


@pytest.mark.parametrize(
    "alpha, d, p, q",
    [
        (0.5, 1, 2.0, 2.0),
        (0.5, 1, 1.0, 1 / 0.5),
        (1.5, 1, 2.0, 2.0),
    ],
)
def test_exponents_off_the_scaling_line(alpha, d, p, q):
    with pytest.raises(RangeError):
        check_hls_exponents(alpha, d, p, q)


def test_compact_bump_has_unit_mass_and_support():
    grid = PeriodicGrid(n=256, length=8 * math.pi)
    values = compact_bump(grid, np.zeros(1), 1.0)

    assert grid.integrate(values) == pytest.approx(1.0)
    assert np.all(values[np.abs(grid.axis_nodes) >= 1.0] == 0.0)


def test_zero_data_gives_zero_ratio():
    grid = PeriodicGrid(n=64, length=8 * math.pi)
    zero = Field.constant(grid, 0.0)

    assert hls_ratio(zero, zero, 0.5, 4 / 3, 4 / 3) == 0.0


def test_probe_is_finite_and_seeded():
    first = hls_probe(0.5, 1, 4 / 3, 4 / 3, trials=3, n=256, seed=3)
    second = hls_probe(0.5, 1, 4 / 3, 4 / 3, trials=3, n=256, seed=3)

    assert 0 < first.max_ratio < math.inf
    assert first.max_ratio == second.max_ratio


def test_probe_rejects_short_period():
    with pytest.raises(ValueError, match="too short"):
        hls_probe(0.5, 1, 4 / 3, 4 / 3, trials=1, n=64, length=2 * math.pi)


def test_study_fills_in_exponents():
    study = hls_study(alpha=0.5, p=1.6, trials=2, n=256)

    assert study.base.q == pytest.approx(8 / 7)
    assert [leg.n for leg in study.legs] == [256, 512, 1024]
    assert [leg.length for leg in study.legs] == pytest.approx([8 * math.pi, 8 * math.pi, 16 * math.pi])
    assert study.drift >= 1.0
    assert study.max_ratio == max(leg.max_ratio for leg in study.legs)


def test_study_refines_the_grid_before_doubling_the_period():
    study = hls_study(trials=3, n=128, seed=5)
    spacings = [leg.length / leg.n for leg in study.legs]

    assert spacings[1] == pytest.approx(spacings[0] / 2)
    assert spacings[2] == pytest.approx(spacings[1])
    assert study.period_shift == pytest.approx(
        abs(study.doubled.max_ratio - study.refined.max_ratio) / study.refined.max_ratio
    )


@pytest.mark.regression
def test_default_study_passes():
    assert hls_study().passed
