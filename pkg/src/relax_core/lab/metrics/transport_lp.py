"""Dense transport linear program, the exact oracle for small instances."""

import numpy as np
from scipy import sparse
from scipy.optimize import linprog

from ..errors import SolverGapError
from .measure import GridMeasure, geodesic_difference


def transport_lp(a: np.ndarray, b: np.ndarray, cost: np.ndarray) -> float:
    """Optimal value of ``min <pi, cost>`` over couplings of ``a`` and ``b``."""
    m, n = cost.shape
    rows = sparse.kron(sparse.eye(m), np.ones((1, n)))
    columns = sparse.kron(np.ones((1, m)), sparse.eye(n))
    # one column constraint is implied by the others
    constraints = sparse.vstack([rows, columns.tocsr()[:-1]]).tocsr()
    result = linprog(
        cost.ravel(),
        A_eq=constraints,
        b_eq=np.concatenate([a, b[:-1]]),
        bounds=(0, None),
        method="highs",
    )
    if result.status != 0:
        raise SolverGapError(f"Transport LP failed: {result.message}")
    return float(result.fun)


def support_points(measure: GridMeasure) -> tuple[np.ndarray, np.ndarray]:
    """Masses and coordinates (``(count, d)``) of the nodes carrying positive mass."""
    masses = measure.probability_masses().ravel()
    points = measure.grid.nodes.reshape(measure.grid.d, -1).T
    keep = masses > 0
    return masses[keep], points[keep]


def squared_distance_matrix(x: np.ndarray, y: np.ndarray, measure: GridMeasure) -> np.ndarray:
    delta = geodesic_difference(x[:, None, :], y[None, :, :], measure.geometry, measure.grid.length)
    return np.sum(delta**2, axis=-1)


def wasserstein2_lp(mu: GridMeasure, nu: GridMeasure) -> float:
    """Atomic ``d_2`` from the dense LP; quadratic in node count, for tests and sanity studies."""
    a, x = support_points(mu)
    b, y = support_points(nu)
    value = transport_lp(a, b, squared_distance_matrix(x, y, mu))
    return float(np.sqrt(max(value, 0.0)))
