import logging
import time
from dataclasses import dataclass, field

import numpy as np
from opentelemetry import trace

from config import MIN_INSIDE_NODES
from module.domain import DomainMask, QuadratureGrid, ScalarField, TooFewNodesError
from .exception import InvalidDumpError
from .kernel import kernel_matrix, symmetrize

logger = logging.getLogger(__name__)
tracer = trace.get_tracer(__name__)


@dataclass(frozen=True, eq=False)
class DiscreteOperator:
    """
    Symmetric Nystrom matrix of the potential operator on the inside nodes.

    B_ij = sqrt(w_i) K(z_i, z_j) sqrt(w_j), with the cell self term on the
    diagonal. ``index`` maps operator rows to grid nodes.
    """

    grid: QuadratureGrid
    mask: DomainMask
    index: np.ndarray
    matrix: np.ndarray = field(repr=False)

    @property
    def size(self) -> int:
        return int(self.index.shape[0])

    @property
    def nodes(self) -> np.ndarray:
        return self.grid.nodes[self.index]

    @property
    def weights(self) -> np.ndarray:
        return self.grid.weights[self.index]

    @property
    def sqrt_weights(self) -> np.ndarray:
        return np.sqrt(self.weights)

    def to_field(self, vector: np.ndarray) -> ScalarField:
        """Operator-space vector (already divided by sqrt(w)) as a zero-extended grid field."""
        values = np.zeros(self.grid.size)
        values[self.index] = vector
        return ScalarField(self.grid, values)

    def from_field(self, f: ScalarField) -> np.ndarray:
        return f.values[self.index]

    def dump(self, path: str) -> None:
        """Row-major little-endian doubles after a little-endian int64 size header."""
        with open(path, "wb") as fh:
            np.asarray([self.size], dtype="<i8").tofile(fh)
            np.ascontiguousarray(self.matrix, dtype="<f8").tofile(fh)
        logger.info(f"Dumped {self.size}x{self.size} operator to {path}")


def load_dump(path: str) -> np.ndarray:
    with open(path, "rb") as fh:
        header = np.fromfile(fh, dtype="<i8", count=1)
        if header.size != 1 or header[0] < 0:
            raise InvalidDumpError(path, "missing size header")
        n = int(header[0])
        data = np.fromfile(fh, dtype="<f8")
    if data.size != n * n:
        raise InvalidDumpError(path, f"expected {n * n} entries, found {data.size}")
    return data.reshape(n, n)


def assemble(
    grid: QuadratureGrid, mask: DomainMask, min_nodes: int = MIN_INSIDE_NODES
) -> DiscreteOperator:
    """Dense Nystrom assembly over the nodes inside the mask."""
    if mask.grid is not grid:
        raise ValueError("Mask does not belong to the grid")

    index = np.flatnonzero(mask.inside)
    if index.size < min_nodes:
        raise TooFewNodesError(int(index.size), min_nodes, grid.pitch)

    with tracer.start_as_current_span("operator.assemble") as span:
        span.set_attribute("nodes", int(index.size))
        span.set_attribute("pitch", grid.pitch)

        started = time.perf_counter()
        nodes = grid.nodes[index]
        sqrt_w = np.sqrt(grid.weights[index])

        matrix = symmetrize(sqrt_w[:, None] * kernel_matrix(nodes, grid.weights[index]) * sqrt_w[None, :])
        matrix.flags.writeable = False

        logger.info(
            f"Assembled operator with {index.size} nodes in {time.perf_counter() - started:.3f}s"
        )
        return DiscreteOperator(grid=grid, mask=mask, index=index, matrix=matrix)
