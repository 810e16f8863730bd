import numpy as np

from module.domain import DomainMask, QuadratureGrid
from module.operator import DiscreteOperator


def operator_from_matrix(matrix, weights=None) -> DiscreteOperator:
    """Wrap a hand-written matrix over a throwaway grid of equal-weight nodes."""
    matrix = np.asarray(matrix, dtype=np.float64)
    n = matrix.shape[0]
    weights = np.full(n, 0.01) if weights is None else np.asarray(weights, dtype=np.float64)
    grid = QuadratureGrid(nodes=0.5 * np.linspace(-1.0, 1.0, n) + 0j, weights=weights, pitch=0.1)
    mask = DomainMask(grid, np.ones(n, dtype=bool))
    return DiscreteOperator(grid=grid, mask=mask, index=np.arange(n), matrix=matrix)


def power_iteration(matrix: np.ndarray, iterations: int = 2000) -> float:
    x = np.ones(matrix.shape[0])
    value = 0.0
    for _ in range(iterations):
        y = matrix @ x
        value = float(x @ y / (x @ x))
        x = y / np.linalg.norm(y)
    return value
