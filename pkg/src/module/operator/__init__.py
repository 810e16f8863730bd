from .assembly import DiscreteOperator, assemble, load_dump
from .exception import InvalidDumpError, InvalidWeightError, OperatorError, SingularKernelError
from .kernel import diagonal_value, kernel, kernel_block, kernel_matrix, self_term
from .potential import apply_potential, energy, energy_direct
from .quadrature import (
    circle_angles,
    circle_log_integral,
    circle_mean,
    circle_points,
    diagonal_value_by_quadrature,
    radial_log_square_integral,
)

__all__ = [
    "DiscreteOperator",
    "InvalidDumpError",
    "InvalidWeightError",
    "OperatorError",
    "SingularKernelError",
    "apply_potential",
    "assemble",
    "circle_angles",
    "circle_log_integral",
    "circle_mean",
    "circle_points",
    "diagonal_value",
    "diagonal_value_by_quadrature",
    "energy",
    "energy_direct",
    "kernel",
    "kernel_block",
    "kernel_matrix",
    "load_dump",
    "radial_log_square_integral",
    "self_term",
]
