import logging

from opentelemetry import trace

from module.domain import DomainSpec, build_grid
from module.operator import assemble
from module.spectral import (
    eigen_decompose,
    principal_eigenpair,
    radial_oracle,
    radial_oracle_table,
    rayleigh_quotient,
)
from .common import pitch_key, solve_principal
from .schema import PlotRow, Report

logger = logging.getLogger(__name__)
tracer = trace.get_tracer(__name__)

ORACLE_REL_TOL = 1e-2


def verify_positivity(spec: DomainSpec, pitches: list[float], seed: int | None = None) -> Report:
    """Smallest eigenvalue of the assembled operator is positive at every pitch."""
    quantities: dict[str, float] = {}
    minima = []
    nodes = 0

    with tracer.start_as_current_span("experiments.positivity"):
        for pitch in sorted(pitches, reverse=True):
            grid, mask = build_grid(spec, pitch)
            spectrum = eigen_decompose(assemble(grid, mask))
            minima.append(spectrum.min_eigenvalue)
            quantities[pitch_key("min_eigenvalue", pitch)] = spectrum.min_eigenvalue
            quantities[pitch_key("tau_h", pitch)] = spectrum.tau_h
            nodes = grid.size

    quantities["min_over_pitches"] = min(minima)
    if len(minima) > 1:
        # ratio between finest and coarsest minimum; the continuum infimum is 0
        quantities["trend"] = minima[-1] / minima[0]

    report = Report(
        name="positivity",
        quantities=quantities,
        tolerance=0.0,
        passed=all(m > 0.0 for m in minima),
        pitch=min(pitches),
        nodes=nodes,
        seed=seed,
    )
    logger.info(f"positivity pass={report.passed} min={min(minima):.3e}")
    return report


def verify_first_eigenfunction(spec: DomainSpec, pitch: float, seed: int | None = None) -> Report:
    """The principal eigenvector is one-signed and the top eigenvalue is simple."""
    with tracer.start_as_current_span("experiments.first_eigenfunction"):
        grid, mask = build_grid(spec, pitch)
        op = assemble(grid, mask)
        spectrum = eigen_decompose(op)
        tau, u = principal_eigenpair(op, spectrum)

        inside = op.from_field(u)
        gap = spectrum.relative_gap
        rayleigh = rayleigh_quotient(op, u)

        report = Report(
            name="first_eigenfunction",
            quantities={
                "tau_h": tau,
                "lambda_2": float(spectrum.eigenvalues[1]) if spectrum.eigenvalues.size > 1 else 0.0,
                "relative_gap": gap,
                "min_u": float(inside.min()),
                "max_u": float(inside.max()),
                "rayleigh_residual": abs(rayleigh - tau),
            },
            tolerance=0.0,
            passed=bool(inside.min() > 0.0 and gap > 0.0),
            pitch=pitch,
            nodes=grid.size,
            seed=seed,
        )
        logger.info(f"first_eigenfunction pass={report.passed} gap={gap:.4f}")
        return report


def verify_oracle_agreement(R: float, pitch: float, n: int = 512) -> Report:
    """tau_h of Delta_R(0) from the 2D solver against the radial oracle."""
    with tracer.start_as_current_span("experiments.oracle_agreement"):
        grid, mask = build_grid(DomainSpec.disk(0.0, R), pitch)
        tau_2d, _, _ = solve_principal(mask)
        tau_1d = radial_oracle(R, n)
        relative = abs(tau_2d - tau_1d) / tau_1d

    return Report(
        name="oracle_agreement",
        quantities={"tau_2d": tau_2d, "tau_oracle": tau_1d, "relative_error": relative},
        tolerance=ORACLE_REL_TOL,
        passed=relative <= ORACLE_REL_TOL,
        pitch=pitch,
        nodes=grid.size,
        series=[PlotRow(x=pitch, y=relative, series="oracle_relative_error")],
    )


def spectrum_report(
    spec: DomainSpec, pitch: float, count: int = 5, dump: str | None = None
) -> Report:
    """Leading eigenvalues and the smallest one; optionally dumps B."""
    with tracer.start_as_current_span("experiments.spectrum"):
        grid, mask = build_grid(spec, pitch)
        op = assemble(grid, mask)
        spectrum = eigen_decompose(op)
        if dump is not None:
            op.dump(dump)

    leading = spectrum.eigenvalues[: max(count, 1)]
    quantities = {f"lambda_{i + 1}": float(v) for i, v in enumerate(leading)}
    quantities["min_eigenvalue"] = spectrum.min_eigenvalue
    quantities["relative_gap"] = spectrum.relative_gap

    return Report(
        name="spectrum",
        quantities=quantities,
        tolerance=0.0,
        passed=True,
        pitch=pitch,
        nodes=grid.size,
        series=[PlotRow(x=float(i + 1), y=float(v), series="eigenvalue") for i, v in enumerate(leading)],
    )


def oracle_report(R: float, ns: list[int]) -> Report:
    """Radial oracle convergence table, one quantity per resolution."""
    rows = radial_oracle_table(R, ns)
    quantities: dict[str, float] = {}
    for row in rows:
        quantities[f"tau@{row.n}"] = row.tau
        if row.delta is not None:
            quantities[f"delta@{row.n}"] = row.delta

    return Report(
        name="oracle",
        quantities=quantities,
        tolerance=0.0,
        passed=True,
        series=[PlotRow(x=float(row.n), y=row.tau, series="radial_oracle") for row in rows],
    )
