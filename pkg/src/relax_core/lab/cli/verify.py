"""Seeded verification studies with PASS/FAIL verdicts."""

import logging
from collections.abc import Callable
from typing import Any

from ..inequalities import (
    commutator_ratio_study,
    extension_study,
    hls_study,
    lower_bounds_study,
    metric_sanity_study,
)
from ..schema import Study

logger = logging.getLogger(__name__)


def _commutator(seed: int, threads: int) -> dict[str, Any]:
    study = commutator_ratio_study(seed=seed, threads=threads)
    first = study.reports[0]
    return {
        "lemma": "commutator estimate",
        "parameters": {"b": first.b, "s": first.s, "grid_sizes": [report.n for report in study.reports]},
        "trials": first.trials,
        "max_ratio": max(report.max_ratio for report in study.reports),
        "drift": study.drift,
        "identity_error": study.identity_error,
        "pass": study.passed,
    }


def _hls(seed: int, _threads: int) -> dict[str, Any]:
    study = hls_study(seed=seed)
    probe = study.base
    return {
        "lemma": "Hardy-Littlewood-Sobolev inequality",
        "parameters": {
            "alpha": probe.alpha,
            "d": probe.d,
            "p": probe.p,
            "q": probe.q,
            "n": [leg.n for leg in study.legs],
            "length": [leg.length for leg in study.legs],
        },
        "trials": probe.trials,
        "max_ratio": study.max_ratio,
        "drift": study.drift,
        "period_shift": study.period_shift,
        "pass": study.passed,
    }


def _extension(_seed: int, _threads: int) -> dict[str, Any]:
    result = extension_study()
    return {
        "lemma": "extension representation of the interaction energy",
        "parameters": {"alpha": 0.5, "kappa": result.kappa, "energies": result.energies},
        "trials": 1,
        "energy_ratio": result.ratio,
        "relative_change": result.relative_change,
        "pass": result.passed,
    }


def _lower_bounds(seed: int, _threads: int) -> dict[str, Any]:
    report = lower_bounds_study(seed=seed)
    return {
        "lemma": "lower bound of the modulated internal energy",
        "parameters": {"pairs": report.pairs},
        "trials": report.samples,
        "violations": {"pointwise": report.pointwise_violations, "chain": report.chain_violations},
        "pass": report.passed,
    }


def _metric_sanity(seed: int, _threads: int) -> dict[str, Any]:
    report = metric_sanity_study(seed=seed)
    return {
        "lemma": "comparison of bounded-Lipschitz and Wasserstein distances",
        "parameters": {"checks": report.checks},
        "trials": sum(report.checks.values()),
        "violations": report.failures,
        "max_errors": report.max_errors,
        "pass": report.passed,
    }


STUDIES: dict[Study, Callable[[int, int], dict[str, Any]]] = {
    Study.COMMUTATOR: _commutator,
    Study.HLS: _hls,
    Study.EXTENSION: _extension,
    Study.LOWER_BOUNDS: _lower_bounds,
    Study.METRIC_SANITY: _metric_sanity,
}


def verify(study: Study, seed: int = 0, threads: int = 1) -> dict[str, Any]:
    """Run one study and return its JSON report; ``report["pass"]`` carries the verdict."""
    logger.info(f"Running {study.value} study with seed {seed}")
    report = STUDIES[Study(study)](seed, threads) | {"study": Study(study).value, "seed": seed}
    if not report["pass"]:
        logger.warning(f"{study.value} study FAILED")
    return report
