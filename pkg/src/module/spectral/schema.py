from dataclasses import dataclass, field

import numpy as np

from module.operator import DiscreteOperator


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues in descending order with matching orthonormal eigenvector columns."""

    operator: DiscreteOperator
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray = field(repr=False)

    @property
    def tau_h(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def min_eigenvalue(self) -> float:
        return float(self.eigenvalues[-1])

    @property
    def relative_gap(self) -> float:
        if self.eigenvalues.size < 2:
            return 1.0
        return float((self.eigenvalues[0] - self.eigenvalues[1]) / self.eigenvalues[0])


@dataclass(frozen=True)
class OracleRow:
    n: int
    tau: float
    delta: float | None
