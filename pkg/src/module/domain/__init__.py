from .enums import DiskOp
from .exception import (
    DomainError,
    EmptyMaskError,
    GridMismatchError,
    InvalidDomainSpecError,
    InvalidPitchError,
    NonFiniteFieldError,
    TooFewNodesError,
    UnpairedGridError,
)
from .field import integrate, l2_norm, mask_measure
from .grid import DomainMask, QuadratureGrid, ScalarField, build_grid, build_paired_grid
from .polarization import (
    polarize_field,
    polarize_mask,
    reflect_field,
    reflect_mask,
    symmetric_difference_measure,
)
from .schema import DiskTerm, DomainSpec, Polarizer

__all__ = [
    "DiskOp",
    "DiskTerm",
    "DomainError",
    "DomainMask",
    "DomainSpec",
    "EmptyMaskError",
    "GridMismatchError",
    "InvalidDomainSpecError",
    "InvalidPitchError",
    "NonFiniteFieldError",
    "Polarizer",
    "QuadratureGrid",
    "ScalarField",
    "TooFewNodesError",
    "UnpairedGridError",
    "build_grid",
    "build_paired_grid",
    "integrate",
    "l2_norm",
    "mask_measure",
    "polarize_field",
    "polarize_mask",
    "reflect_field",
    "reflect_mask",
    "symmetric_difference_measure",
]
