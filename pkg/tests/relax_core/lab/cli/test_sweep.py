import math

import pytest

from relax_core.lab.cli import run_sweep
from relax_core.lab.config import parse_config
from relax_core.lab.errors import ConfigError
from relax_core.lab.schema import TheoremPart

SWEEP = """
[params]
c_k = -1.0
alpha = 0.5
epsilon = [0.2, 0.1, 0.05]

[grid]
n = 32

[run]
t_end = 0.1
output_every = 0.05
"""


@pytest.mark.parametrize(
    "extra, key",
    [
        ('part = "lebesgue"\n', "run.part"),
        ('velocity = "rest"\n', "run.velocity"),
    ],
)
def test_sweep_rejects(extra, key):
    with pytest.raises(ConfigError) as info:
        run_sweep(parse_config(SWEEP + extra))

    assert info.value.key == key


@pytest.mark.integration
def test_small_sweep():
    result, reports = run_sweep(parse_config(SWEEP), threads=2)

    assert result.part == TheoremPart.WASSERSTEIN
    assert [entry.epsilon for entry in result.entries] == [0.2, 0.1, 0.05]
    assert [len(entry_reports) for entry_reports in reports] == [3, 3, 3]
    assert result.times == pytest.approx([0.0, 0.05, 0.1])
    assert all(math.isfinite(entry.headline_error) for entry in result.entries)
    assert result.truncation_error is not None
    assert result.l1_momentum_constant is None
    assert result.metadata["grid"] == {"d": 1, "n": 32, "length": pytest.approx(2 * math.pi)}
    resolved = sum(entry.resolved for entry in result.entries)
    if result.fit is None:
        assert result.fit_status == "refused by resolution gate"
    else:
        assert result.fit_status == "fitted"
        assert result.fit.points == resolved


@pytest.mark.regression
def test_pressureless_rate():
    config = parse_config(
        """
[params]
c_k = -1.0
alpha = 0.5
epsilon = [0.2, 0.1, 0.05, 0.025]

[grid]
n = 512
"""
    )
    result, _ = run_sweep(config, threads=4)

    assert result.fit_status == "fitted"
    assert result.fit.slope >= 0.8
    assert result.fit.residual <= 0.15
