import logging
import math

import numpy as np
from opentelemetry import trace

from config import BOUND_SLACK, DECAY_ANGLES, DEFAULT_PITCH, DEFAULT_SEED
from module.domain import DomainSpec, ScalarField, build_grid, l2_norm, mask_measure
from module.operator import DiscreteOperator, apply_potential
from .common import solve_principal
from .exception import InvalidRadiiError
from .sampling import random_disk_points, random_field
from .schema import PlotRow, Report

logger = logging.getLogger(__name__)
tracer = trace.get_tracer(__name__)

POINTWISE_CONSTANT = math.pi**2 / 48.0
EXTRA_POINTS = 64
DECAY_SLACK = 1e-10
DECAY_FACTOR = 10.0
DECAY_NEAR_BOUNDARY = 0.99


def _node_potential(op: DiscreteOperator, f: ScalarField) -> np.ndarray:
    """L_h f on the inside nodes, straight from the assembled matrix."""
    sw = op.sqrt_weights
    return op.matrix @ (sw * op.from_field(f)) / sw


def verify_uniform_bound(
    spec: DomainSpec,
    trials: int = 100,
    pitch: float = DEFAULT_PITCH,
    seed: int | None = None,
) -> Report:
    """
    sup |L_h f|^2 <= (pi^2/48) ||f||^2 over random fields, sampled on the
    nodes and on random points of the disk.

    Also reports tau_h^2 against pi^2/48, the L2 form of the bound through
    the hyperbolic measure and through the Euclidean area with the bounding
    radius, and the largest jump of L_h f over a pitch-sized step.
    """
    seed = DEFAULT_SEED if seed is None else seed
    rng = np.random.default_rng(seed)
    limit = POINTWISE_CONSTANT * (1.0 + BOUND_SLACK)

    with tracer.start_as_current_span("experiments.uniform_bound") as span:
        grid, mask = build_grid(spec, pitch)
        tau, _, op = solve_principal(mask)
        span.set_attribute("nodes", grid.size)

        worst = 0.0
        jump = 0.0
        for _ in range(trials):
            f = random_field(mask, rng)
            f = (1.0 / l2_norm(f)) * f

            points = random_disk_points(rng, EXTRA_POINTS)
            sup = max(
                float(np.max(np.abs(_node_potential(op, f)))),
                float(np.max(np.abs(apply_potential(f, points)))),
            )
            worst = max(worst, sup**2)

            step = 0.1 * pitch * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi, EXTRA_POINTS))
            shifted = points + step
            jump = max(
                jump, float(np.max(np.abs(apply_potential(f, shifted) - apply_potential(f, points))))
            )

        measure = mask_measure(mask)
        area = float(grid.cell_areas.sum())
        k = spec.bounding_radius()
        quantities = {
            "worst_ratio": worst,
            "pointwise_constant": POINTWISE_CONSTANT,
            "tau_h": tau,
            "tau_h_squared": tau**2,
            "measure": measure,
            "l2_bound": POINTWISE_CONSTANT * measure,
            "area_bound": math.pi / 48.0 * area / (1.0 - k**2) ** 2,
            "continuity_jump": jump,
        }
        passed = (
            worst <= limit
            and tau**2 <= limit
            and tau**2 <= POINTWISE_CONSTANT * measure * (1.0 + BOUND_SLACK)
        )

        report = Report(
            name="uniform_bound",
            quantities=quantities,
            tolerance=BOUND_SLACK,
            passed=passed,
            pitch=pitch,
            nodes=grid.size,
            seed=seed,
        )
        logger.info(f"uniform_bound pass={passed} worst={worst:.4e} limit={limit:.4e}")
        return report


def boundary_decay_values(u: ScalarField, radii: list[float], angles: int = DECAY_ANGLES) -> np.ndarray:
    """Max over equally spaced angles of |L_h u| on each circle |z| = radius."""
    theta = 2.0 * np.pi * np.arange(angles) / angles
    ring = np.exp(1j * theta)
    return np.array([float(np.max(np.abs(apply_potential(u, r * ring)))) for r in radii])


def _check_radii(spec: DomainSpec, radii: list[float]) -> None:
    if not radii:
        raise InvalidRadiiError("At least one radius is required")
    if any(not 0.0 < r < 1.0 for r in radii):
        raise InvalidRadiiError(f"Radii must lie in (0, 1), got {radii!r}")
    if any(b <= a for a, b in zip(radii, radii[1:])):
        raise InvalidRadiiError(f"Radii must be strictly increasing, got {radii!r}")

    k = spec.bounding_radius()
    if radii[0] <= k:
        raise InvalidRadiiError(f"Radius {radii[0]!r} is inside the domain's bounding circle {k!r}")


def verify_boundary_decay(
    spec: DomainSpec, radii: list[float], pitch: float = DEFAULT_PITCH, seed: int | None = None
) -> Report:
    """L_h u of the principal eigenfunction decreases toward the unit circle."""
    _check_radii(spec, radii)

    with tracer.start_as_current_span("experiments.boundary_decay"):
        grid, mask = build_grid(spec, pitch)
        _, u, _ = solve_principal(mask)
        values = boundary_decay_values(u, radii)

    monotone = bool(np.all(np.diff(values) <= DECAY_SLACK))
    passed = monotone
    if radii[-1] >= DECAY_NEAR_BOUNDARY:
        passed = passed and bool(values[-1] < values[0] / DECAY_FACTOR)

    quantities = {f"max_abs@{r:g}": float(v) for r, v in zip(radii, values)}
    if values[-1] > 0.0:
        quantities["drop_ratio"] = float(values[0] / values[-1])

    report = Report(
        name="boundary_decay",
        quantities=quantities,
        tolerance=DECAY_SLACK,
        passed=passed,
        pitch=pitch,
        nodes=grid.size,
        seed=seed,
        notes=[] if monotone else ["values are not monotone in the radius"],
        series=[PlotRow(x=r, y=float(v), series="boundary_decay") for r, v in zip(radii, values)],
    )
    logger.info(f"boundary_decay pass={passed}")
    return report
