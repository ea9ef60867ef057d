import numpy as np
import pytest

from relax_core.lab.inequalities import metric_sanity_study, random_measure
from relax_core.lab.schema import Geometry
from relax_core.lab.spectral import PeriodicGrid


def test_random_measure_support():
    grid = PeriodicGrid(n=16)
    measure = random_measure(grid, np.random.default_rng(0), Geometry.LINE_SEGMENT, support=3)

    assert np.count_nonzero(measure.masses) == 3
    assert measure.masses.sum() == pytest.approx(1.0)
    assert measure.geometry == Geometry.LINE_SEGMENT


def test_small_study():
    report = metric_sanity_study(bl_pairs=3, lp_cases=10, torus_cases=3, triples=5, n=8, seed=2)

    assert report.passed
    assert report.checks == {"dbl_below_d2": 3, "segment_lp": 10, "torus_lp": 3, "symmetry": 5, "triangle": 5}
    assert set(report.max_errors) == set(report.checks)


@pytest.mark.regression
def test_default_study_passes():
    assert metric_sanity_study().passed
