import numpy as np

from config import ASSEMBLY_BLOCK_ROWS
from module.domain import GridMismatchError, ScalarField
from module.hypgeo import ComplexLike, as_complex, check_in_disk
from module.hypgeo.point import unwrap
from .kernel import diagonal_value, kernel_block, kernel_matrix, kernel_scalar


def apply_potential(f: ScalarField, z: ComplexLike, block_rows: int = ASSEMBLY_BLOCK_ROWS):
    """
    Discrete L_h f at arbitrary points of the disk:
    sum_j K(z, z_j) f_j w_j, the self term taking over when z is a node.
    """
    targets = check_in_disk(as_complex(z))
    shape = targets.shape
    targets = targets.ravel()

    support = np.flatnonzero(f.values)
    result = np.zeros(targets.size)
    if support.size:
        nodes = f.grid.nodes[support]
        weights = f.grid.weights[support]
        charges = f.values[support] * weights
        for start in range(0, targets.size, block_rows):
            stop = start + block_rows
            result[start:stop] = kernel_block(targets[start:stop], nodes, weights) @ charges

    return unwrap(result.reshape(shape))


def energy(u: ScalarField, v: ScalarField) -> float:
    """E(u, v) = sum_ij K_ij u_i v_j w_i w_j over the joint support."""
    if u.grid is not v.grid:
        raise GridMismatchError()

    support = np.flatnonzero((u.values != 0.0) | (v.values != 0.0))
    if support.size == 0:
        return 0.0

    weights = u.grid.weights[support]
    matrix = kernel_matrix(u.grid.nodes[support], weights)
    return float((u.values[support] * weights) @ matrix @ (v.values[support] * weights))


def energy_direct(u: ScalarField, v: ScalarField) -> float:
    """The same energy by an explicit double loop, independent of the vectorized path."""
    if u.grid is not v.grid:
        raise GridMismatchError()

    support = np.flatnonzero((u.values != 0.0) | (v.values != 0.0))
    nodes = [complex(z) for z in u.grid.nodes[support]]
    weights = [float(w) for w in u.grid.weights[support]]
    uw = [float(u.values[i]) * w for i, w in zip(support, weights)]
    vw = [float(v.values[i]) * w for i, w in zip(support, weights)]

    total = 0.0
    for i, zi in enumerate(nodes):
        row = 0.5 * float(diagonal_value(weights[i])) * vw[i]
        for j, zj in enumerate(nodes):
            if j != i:
                row += kernel_scalar(zi, zj) * vw[j]
        total += uw[i] * row
    return total
