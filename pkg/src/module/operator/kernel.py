import logging
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from config import ASSEMBLY_BLOCK_ROWS, ASSEMBLY_WORKERS
from module.hypgeo import ComplexLike, as_complex, check_in_disk, pseudo_distance_raw
from module.hypgeo.point import unwrap
from .exception import InvalidWeightError, SingularKernelError

logger = logging.getLogger(__name__)


def kernel(z: ComplexLike, w: ComplexLike):
    """K(z, w) = 1/2 log(1/[z, w]) for distinct points."""
    z = check_in_disk(as_complex(z))
    w = check_in_disk(as_complex(w))
    distance = pseudo_distance_raw(z, w)
    if np.any(distance == 0.0):
        raise SingularKernelError()
    return unwrap(-0.5 * np.log(distance))


def diagonal_value(weight):
    """
    Mean of log(1/[z, w]) over the hyperbolic disk whose measure equals ``weight``.

    With rho^2 = w/(1+w) the disk has measure w, and the mean is
    F(rho)/w with F(rho) = rho^2 log(1/rho)/(1-rho^2) - 1/2 log(1-rho^2),
    which reduces to 1/2 log((1+w)/w) + log(1+w)/(2w).
    The kernel self term of a cell is half of this value.
    """
    w = np.asarray(weight, dtype=np.float64)
    if np.any(~(w > 0.0)):
        raise InvalidWeightError(weight)
    value = 0.5 * (np.log1p(w) - np.log(w)) + np.log1p(w) / (2.0 * w)
    return unwrap(value)


def self_term(weight):
    """Cell mean of K itself."""
    return 0.5 * np.asarray(diagonal_value(weight))


def kernel_block(targets: np.ndarray, nodes: np.ndarray, weights: np.ndarray) -> np.ndarray:
    """
    K(t, z_j) for every target row and node column.

    A target coinciding with a node takes that node's cell self term.
    """
    num = np.abs(targets[:, None] - nodes[None, :])
    den = np.abs(1.0 - np.conj(targets)[:, None] * nodes[None, :])
    coincide = num == 0.0
    with np.errstate(divide="ignore"):
        block = 0.5 * (np.log(den) - np.log(num))
    if coincide.any():
        block = np.where(coincide, self_term(weights)[None, :], block)
    return block


def kernel_matrix(
    nodes: np.ndarray,
    weights: np.ndarray,
    block_rows: int = ASSEMBLY_BLOCK_ROWS,
    workers: int = ASSEMBLY_WORKERS,
) -> np.ndarray:
    """Dense K over the nodes with regularized diagonal, exactly symmetric."""
    n = nodes.shape[0]
    matrix = np.empty((n, n), dtype=np.float64)
    starts = range(0, n, max(block_rows, 1))

    def fill(start: int) -> None:
        stop = min(start + block_rows, n)
        matrix[start:stop] = kernel_block(nodes[start:stop], nodes, weights)

    if workers > 1 and n > block_rows:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(fill, starts))
    else:
        for start in starts:
            fill(start)

    # the diagonal must be the self term even if rounding made |z - z| nonzero
    matrix[np.diag_indices(n)] = self_term(weights)
    return symmetrize(matrix)


def symmetrize(matrix: np.ndarray) -> np.ndarray:
    """Mirror the upper triangle so that M == M.T bit for bit."""
    return np.triu(matrix) + np.triu(matrix, 1).T


def kernel_scalar(z: complex, w: complex) -> float:
    """Pure-Python K(z, w) for the direct double-sum path."""
    return -0.5 * math.log(abs(z - w) / abs(1.0 - z.conjugate() * w))
