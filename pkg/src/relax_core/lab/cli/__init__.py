"""Command-line runners for simulations, sweeps, verification studies and stored-field distances."""

from .distances import stored_distances
from .io import OutputDirectory, dump_json, emit
from .main import build_parser, main
from .simulate import run_params, simulate, write_simulation
from .sweep import RateFit, SweepEntry, SweepResult, fit_rate, run_sweep, truncation_estimate
from .verify import STUDIES, verify

__all__ = [
    STUDIES,
    OutputDirectory,
    RateFit,
    SweepEntry,
    SweepResult,
    build_parser,
    dump_json,
    emit,
    fit_rate,
    main,
    run_params,
    run_sweep,
    simulate,
    stored_distances,
    truncation_estimate,
    verify,
    write_simulation,
]
