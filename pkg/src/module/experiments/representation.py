import logging

import numpy as np
from opentelemetry import trace

from config import CIRCLE_POINTS, REPRESENTATION_TOL_PER_PITCH
from module.domain import DomainSpec, build_grid
from module.hypgeo import ComplexLike, as_complex, check_in_disk, pseudo_distance_raw
from module.operator import apply_potential, circle_mean, diagonal_value
from .common import pitch_key, solve_principal
from .exception import InvalidRepresentationRadiusError
from .schema import PlotRow, Report

logger = logging.getLogger(__name__)
tracer = trace.get_tracer(__name__)


def _residual(spec: DomainSpec, pitch: float, z: complex, r: float) -> tuple[dict[str, float], int]:
    grid, mask = build_grid(spec, pitch)
    tau, u, _ = solve_principal(mask)

    lhs = float(apply_potential(u, z))
    circle = circle_mean(lambda w: apply_potential(u, w), z, r, CIRCLE_POINTS)

    distances = pseudo_distance_raw(z, grid.nodes)
    near = (distances < r) & (u.values != 0.0)
    weights = grid.weights[near]
    with np.errstate(divide="ignore"):
        log_ratio = np.log(distances[near] / r)
    # a node at z carries the cell mean of log([z, w]/r)
    coincide = distances[near] == 0.0
    if coincide.any():
        log_ratio = np.where(coincide, -np.asarray(diagonal_value(weights)) - np.log(r), log_ratio)
    disk = float(-0.5 * np.sum(log_ratio * u.values[near] * weights))

    rhs = circle + disk
    residual = abs(lhs - rhs)
    return {
        "tau_h": tau,
        "lhs": lhs,
        "rhs": rhs,
        "circle_term": circle,
        "disk_term": disk,
        "disk_nodes": float(near.sum()),
        "residual": residual,
        "relative_residual": residual / max(abs(lhs), 1e-300),
    }, grid.size


def _check_radius(z: complex, r: float) -> None:
    bound = 1.0 - abs(z)
    if not 0.0 < r < bound:
        raise InvalidRepresentationRadiusError(r, bound)


def verify_representation(
    spec: DomainSpec, pitch: float, z: ComplexLike, r: float, seed: int | None = None
) -> Report:
    """
    Check tau u(z) = (tau/2pi) int u(phi_z(r e^{it})) dt
    - 1/2 int_{Omega cap Delta_r(z)} log([z, w]/r) u(w) dtau(w)
    with u extended to the disk by L_h u / tau.
    """
    z = complex(check_in_disk(as_complex(z)))
    _check_radius(z, r)

    with tracer.start_as_current_span("experiments.representation"):
        quantities, nodes = _residual(spec, pitch, z, r)

    tolerance = REPRESENTATION_TOL_PER_PITCH * pitch * max(1.0, abs(quantities["lhs"]))
    report = Report(
        name="representation",
        quantities=quantities,
        tolerance=tolerance,
        passed=quantities["residual"] <= tolerance,
        pitch=pitch,
        nodes=nodes,
        seed=seed,
    )
    logger.info(f"representation pass={report.passed} residual={quantities['residual']:.3e}")
    return report


def representation_refinement(
    spec: DomainSpec, pitches: list[float], z: ComplexLike, r: float, seed: int | None = None
) -> Report:
    """Residuals over a pitch sequence, with the implied per-pitch constant."""
    z = complex(check_in_disk(as_complex(z)))
    _check_radius(z, r)

    quantities: dict[str, float] = {}
    series: list[PlotRow] = []
    nodes = 0
    worst = 0.0
    for pitch in sorted(pitches, reverse=True):
        values, nodes = _residual(spec, pitch, z, r)
        residual = values["residual"]
        quantities[pitch_key("residual", pitch)] = residual
        series.append(PlotRow(x=pitch, y=residual, series="representation_residual"))
        worst = max(worst, residual / (pitch * max(1.0, abs(values["lhs"]))))

    quantities["calibrated_constant"] = worst
    return Report(
        name="representation_refinement",
        quantities=quantities,
        tolerance=REPRESENTATION_TOL_PER_PITCH,
        passed=worst <= REPRESENTATION_TOL_PER_PITCH,
        pitch=min(pitches),
        nodes=nodes,
        seed=seed,
        series=series,
    )
