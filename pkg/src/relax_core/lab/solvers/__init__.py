"""Time integrators for the Euler-Riesz system and its limit."""

from ..state import limit_velocity
from .euler_riesz import ERTendency, er_time_step, rhs_euler_riesz, run_er, step
from .fpme import convective_derivative, fpme_time_step, limit_acceleration, rhs_fpme, run_fpme, step_fpme
from .storage import StoredTrajectory, TrajectoryHeader, read_trajectory, write_trajectory
from .trajectory import Observer, StepPolicy, Trajectory, centered_time_derivative, guard, march, output_times

__all__ = [
    ERTendency,
    Observer,
    StepPolicy,
    StoredTrajectory,
    Trajectory,
    TrajectoryHeader,
    centered_time_derivative,
    convective_derivative,
    er_time_step,
    fpme_time_step,
    guard,
    limit_acceleration,
    limit_velocity,
    march,
    output_times,
    read_trajectory,
    rhs_euler_riesz,
    rhs_fpme,
    run_er,
    run_fpme,
    step,
    step_fpme,
    write_trajectory,
]
