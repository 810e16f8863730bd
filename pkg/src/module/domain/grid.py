import logging
import math
from dataclasses import dataclass, field

import numpy as np

from config import MIN_INSIDE_NODES
from .exception import (
    EmptyMaskError,
    GridMismatchError,
    InvalidPitchError,
    NonFiniteFieldError,
    TooFewNodesError,
)
from .schema import DomainSpec, Polarizer

logger = logging.getLogger(__name__)


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, order="C")
    array.flags.writeable = False
    return array


@dataclass(frozen=True, eq=False)
class QuadratureGrid:
    """
    Quadrature nodes in the disk with hyperbolic cell weights.

    A paired grid also records its polarizer, the involution ``pairing``
    with sigma(node_i) = node_{pairing[i]}, and ``h_side`` flagging the
    nodes generated on the polarizer side.
    """

    nodes: np.ndarray
    weights: np.ndarray
    pitch: float
    polarizer: Polarizer | None = None
    pairing: np.ndarray | None = None
    h_side: np.ndarray | None = None

    def __post_init__(self):
        object.__setattr__(self, "nodes", _frozen(np.asarray(self.nodes, dtype=np.complex128)))
        object.__setattr__(self, "weights", _frozen(np.asarray(self.weights, dtype=np.float64)))

        if self.nodes.shape != self.weights.shape or self.nodes.ndim != 1:
            raise ValueError("nodes and weights must be 1-d arrays of equal length")
        if not np.all(self.weights > 0.0):
            raise ValueError("Quadrature weights must be positive")

        if self.pairing is not None:
            pairing = _frozen(np.asarray(self.pairing, dtype=np.intp))
            if not np.array_equal(pairing[pairing], np.arange(self.size)):
                raise ValueError("Node pairing must be an involution")
            object.__setattr__(self, "pairing", pairing)
            object.__setattr__(self, "h_side", _frozen(np.asarray(self.h_side, dtype=bool)))

    @property
    def size(self) -> int:
        return int(self.nodes.shape[0])

    @property
    def is_paired(self) -> bool:
        return self.pairing is not None

    @property
    def cell_areas(self) -> np.ndarray:
        """Euclidean area of each cell; pitch^2 on lattice nodes, Jacobian-scaled on mirrors."""
        return math.pi * self.weights * (1.0 - np.abs(self.nodes) ** 2) ** 2


@dataclass(frozen=True, eq=False)
class DomainMask:
    grid: QuadratureGrid
    inside: np.ndarray

    def __post_init__(self):
        inside = _frozen(np.asarray(self.inside, dtype=bool))
        if inside.shape != (self.grid.size,):
            raise ValueError("Mask length does not match its grid")
        if not inside.any():
            raise EmptyMaskError()
        object.__setattr__(self, "inside", inside)

    @property
    def count(self) -> int:
        return int(self.inside.sum())

    @property
    def nodes(self) -> np.ndarray:
        return self.grid.nodes[self.inside]

    @property
    def weights(self) -> np.ndarray:
        return self.grid.weights[self.inside]

    def same_as(self, other: "DomainMask") -> bool:
        return self.grid is other.grid and np.array_equal(self.inside, other.inside)


@dataclass(frozen=True, eq=False)
class ScalarField:
    """Real samples on every node of a grid, zero where the function vanishes."""

    grid: QuadratureGrid
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        values = _frozen(np.asarray(self.values, dtype=np.float64))
        if values.shape != (self.grid.size,):
            raise ValueError("Field length does not match its grid")
        if not np.all(np.isfinite(values)):
            raise NonFiniteFieldError()
        object.__setattr__(self, "values", values)

    @classmethod
    def zeros(cls, grid: QuadratureGrid) -> "ScalarField":
        return cls(grid, np.zeros(grid.size))

    @classmethod
    def indicator(cls, mask: DomainMask) -> "ScalarField":
        return cls(mask.grid, mask.inside.astype(np.float64))

    def restricted(self, mask: DomainMask) -> "ScalarField":
        """Zero extension of the field off the mask."""
        self._check_grid(mask.grid)
        return ScalarField(self.grid, np.where(mask.inside, self.values, 0.0))

    def _check_grid(self, grid: QuadratureGrid) -> None:
        if grid is not self.grid:
            raise GridMismatchError()

    def __add__(self, other: "ScalarField") -> "ScalarField":
        self._check_grid(other.grid)
        return ScalarField(self.grid, self.values + other.values)

    def __mul__(self, c: float) -> "ScalarField":
        return ScalarField(self.grid, c * self.values)

    __rmul__ = __mul__


def _check_pitch(pitch: float) -> None:
    if not (math.isfinite(pitch) and pitch > 0.0):
        raise InvalidPitchError(pitch)


def _lattice(box: tuple[float, float, float, float], pitch: float) -> np.ndarray:
    """Cell centers (i + 1/2) * pitch covering the box, row-major in y then x."""
    xmin, xmax, ymin, ymax = box
    ix = np.arange(math.floor(xmin / pitch - 0.5), math.ceil(xmax / pitch - 0.5) + 1)
    iy = np.arange(math.floor(ymin / pitch - 0.5), math.ceil(ymax / pitch - 0.5) + 1)
    xs = (ix + 0.5) * pitch
    ys = (iy + 0.5) * pitch
    gx, gy = np.meshgrid(xs, ys)
    z = (gx + 1j * gy).ravel()
    return z[np.abs(z) < 1.0]


def _cell_weights(z: np.ndarray, pitch: float) -> np.ndarray:
    return pitch**2 / (math.pi * (1.0 - np.abs(z) ** 2) ** 2)


def _check_count(count: int, pitch: float) -> None:
    if count < MIN_INSIDE_NODES:
        raise TooFewNodesError(count, MIN_INSIDE_NODES, pitch)


def build_grid(spec: DomainSpec, pitch: float) -> tuple[QuadratureGrid, DomainMask]:
    """Midpoint grid of the domain: lattice cell centers inside it, hyperbolic weights."""
    _check_pitch(pitch)

    lattice = _lattice(spec.bounding_box(), pitch)
    nodes = lattice[spec.contains(lattice)]
    _check_count(nodes.size, pitch)

    grid = QuadratureGrid(nodes=nodes, weights=_cell_weights(nodes, pitch), pitch=pitch)
    logger.debug(f"Built grid with {grid.size} nodes at pitch {pitch}")
    return grid, DomainMask(grid, np.ones(grid.size, dtype=bool))


def build_paired_grid(
    spec: DomainSpec, pitch: float, p: Polarizer
) -> tuple[QuadratureGrid, DomainMask]:
    """
    Grid closed under the reflection of the polarizer.

    Lattice nodes of Omega and sigma(Omega) on the H side are kept and each
    is duplicated by its mirror image, which carries the same hyperbolic
    weight since the reflection preserves the measure.
    """
    _check_pitch(pitch)

    mirror = spec.reflect(p.geodesic)
    boxes = [spec.bounding_box(), mirror.bounding_box()]
    box = (
        min(b[0] for b in boxes),
        max(b[1] for b in boxes),
        min(b[2] for b in boxes),
        max(b[3] for b in boxes),
    )

    lattice = _lattice(box, pitch)
    in_omega = spec.contains(lattice)
    in_mirror = mirror.contains(lattice)
    keep = p.in_h(lattice) & (in_omega | in_mirror)

    h_nodes = lattice[keep]
    n = h_nodes.size
    partners = p.geodesic.reflect_points(h_nodes)

    weights = _cell_weights(h_nodes, pitch)
    grid = QuadratureGrid(
        nodes=np.concatenate([h_nodes, partners]),
        weights=np.concatenate([weights, weights]),
        pitch=pitch,
        polarizer=p,
        pairing=np.concatenate([np.arange(n, 2 * n), np.arange(n)]),
        h_side=np.concatenate([np.ones(n, dtype=bool), np.zeros(n, dtype=bool)]),
    )

    # sigma(partner) = h node, so partner is in Omega iff the h node is in sigma(Omega)
    inside = np.concatenate([in_omega[keep], in_mirror[keep]])
    _check_count(int(inside.sum()), pitch)

    logger.debug(f"Built paired grid with {grid.size} nodes ({int(inside.sum())} inside)")
    return grid, DomainMask(grid, inside)
