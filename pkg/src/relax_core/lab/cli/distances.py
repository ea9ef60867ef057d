"""Ad-hoc distances between densities stored in two trajectory files."""

from pathlib import Path

from ..energetics import L2Norm, NegSobolevNorm, norm
from ..errors import GridMismatchError
from ..metrics import DEFAULT_HOOKS, GridMeasure, MetricHooks, bounded_lipschitz
from ..solvers import read_trajectory


def stored_distances(
    first: Path,
    second: Path,
    index: int = -1,
    hooks: MetricHooks = DEFAULT_HOOKS,
) -> dict[str, float | int | str]:
    """L2, negative Sobolev, ``d_2`` and ``d_BL`` between the densities at output ``index``.

    The Sobolev order comes from the constants stored in ``first``.
    """
    a, b = read_trajectory(first), read_trajectory(second)
    if not a.grid.matches(b.grid):
        raise GridMismatchError(f"Grids differ: {a.grid!r} vs {b.grid!r}")
    rho_a, rho_b = a.density(index), b.density(index)
    constants = a.constants()
    difference = rho_a - rho_b
    return {
        "index": index,
        "time_a": a.header.times[index],
        "time_b": b.header.times[index],
        "l2": norm(difference, L2Norm()),
        "neg_sobolev": norm(difference, NegSobolevNorm(alpha=constants.alpha, d=constants.d)),
        "d2": hooks.d2_squared(rho_a, rho_b) ** 0.5,
        "dbl": bounded_lipschitz(
            GridMeasure.from_field(rho_a, geometry=hooks.geometry),
            GridMeasure.from_field(rho_b, geometry=hooks.geometry),
        ).value,
        "ground_distance": hooks.metadata()["ground_distance"],
    }
