import numpy as np

from .exception import GridMismatchError, UnpairedGridError
from .grid import DomainMask, QuadratureGrid, ScalarField
from .schema import Polarizer


def _check_paired(grid: QuadratureGrid, p: Polarizer | None = None) -> None:
    if not grid.is_paired:
        raise UnpairedGridError("Grid has no reflection pairing.")
    if p is not None and grid.polarizer != p:
        raise UnpairedGridError()


def polarize_mask(m: DomainMask, p: Polarizer) -> DomainMask:
    """P_H(Omega): union with the mirror on H, intersection with it elsewhere."""
    grid = m.grid
    _check_paired(grid, p)

    mirrored = m.inside[grid.pairing]
    inside = np.where(grid.h_side, m.inside | mirrored, m.inside & mirrored)
    return DomainMask(grid, inside)


def polarize_field(f: ScalarField, p: Polarizer) -> ScalarField:
    """P_H f: max of f and f o sigma on H, min of the two elsewhere."""
    grid = f.grid
    _check_paired(grid, p)

    mirrored = f.values[grid.pairing]
    values = np.where(
        grid.h_side, np.maximum(f.values, mirrored), np.minimum(f.values, mirrored)
    )
    return ScalarField(grid, values)


def reflect_mask(m: DomainMask) -> DomainMask:
    """sigma(Omega) on a paired grid."""
    _check_paired(m.grid)
    return DomainMask(m.grid, m.inside[m.grid.pairing])


def reflect_field(f: ScalarField) -> ScalarField:
    """f o sigma on a paired grid."""
    _check_paired(f.grid)
    return ScalarField(f.grid, f.values[f.grid.pairing])


def symmetric_difference_measure(a: DomainMask, b: DomainMask) -> float:
    """
    Euclidean area of the nodes lying in exactly one of the masks.

    Lattice nodes count pitch^2 each; mirror nodes count the Euclidean area
    of their reflected cell, pi w (1 - |z|^2)^2, which differs from pitch^2
    off the lattice. The measure is zero exactly when the masks agree.
    """
    if a.grid is not b.grid:
        raise GridMismatchError()
    return float(a.grid.cell_areas[a.inside ^ b.inside].sum())
