from module.domain import DomainMask, ScalarField
from module.operator import DiscreteOperator, assemble
from module.spectral import principal_eigenpair


def solve_principal(mask: DomainMask) -> tuple[float, ScalarField, DiscreteOperator]:
    op = assemble(mask.grid, mask)
    tau, u = principal_eigenpair(op)
    return tau, u, op


def pitch_key(name: str, pitch: float) -> str:
    return f"{name}@{pitch:g}"
