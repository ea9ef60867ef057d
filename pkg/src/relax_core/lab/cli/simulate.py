"""Single Euler-Riesz or limit-equation runs written as a trajectory file and an energy CSV."""

import logging
from typing import Any, Literal

from ..config import RelaxConfig
from ..energetics import csv_columns, energy_report
from ..errors import ConfigError
from ..solvers import Trajectory, run_er, run_fpme, write_trajectory
from ..state import LimitState, Params, PhysicalConstants, initial_state
from .io import OutputDirectory

logger = logging.getLogger(__name__)


def run_params(config: RelaxConfig) -> Params:
    """The single relaxation parameter of a simulation config."""
    epsilons = config.params.epsilons
    if len(epsilons) != 1:
        raise ConfigError(f"A simulation takes one epsilon, got {epsilons!r}; use the sweep", key="params.epsilon")
    return config.params.at(epsilons[0])


def simulate(config: RelaxConfig, kind: Literal["er", "fpme"]) -> Trajectory:
    grid = config.build_grid()
    params: PhysicalConstants = run_params(config) if kind == "er" else config.params.constants()
    initial = initial_state(grid, params, config.initial, config.run.velocity)
    if kind == "er":
        return run_er(initial, params, config.run.policy, times=config.run.times)
    return run_fpme(LimitState(rho=initial.rho, time=0.0), params, config.run.policy, times=config.run.times)


def write_simulation(traj: Trajectory, out: OutputDirectory) -> dict[str, Any]:
    d = traj.grid.d
    rows = [energy_report(snapshot, traj.params).row(d) for snapshot in traj.snapshots]
    csv_path = out.write_csv(f"{traj.kind}.csv", csv_columns(d), rows)
    traj_path = out.path(f"{traj.kind}.traj")
    write_trajectory(traj, traj_path)
    logger.info(f"{traj.kind} run finished after {traj.steps} steps")
    return {
        "command": f"simulate-{traj.kind}",
        "config_hash": out.config_hash,
        "steps": traj.steps,
        "final_time": traj.times[-1],
        "files": [csv_path.name, traj_path.name],
    }
