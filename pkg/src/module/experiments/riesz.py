import logging

import numpy as np
from opentelemetry import trace

from config import DIRECT_ENERGY_MAX_NODES, RIESZ_REL_TOL
from module.domain import (
    DomainSpec,
    Polarizer,
    ScalarField,
    TooFewNodesError,
    UnpairedGridError,
    build_paired_grid,
    l2_norm,
    polarize_field,
)
from module.operator import energy, energy_direct
from .exception import FieldSupportError
from .sampling import random_domain, random_field, random_polarizer
from .schema import Report

logger = logging.getLogger(__name__)
tracer = trace.get_tracer(__name__)

DIRECT_AGREEMENT_TOL = 1e-12


def riesz_field(spec: DomainSpec, p: Polarizer, pitch: float, seed: int) -> ScalarField:
    """Random nonnegative field on Omega over the paired grid of (spec, p)."""
    _, mask = build_paired_grid(spec, pitch, p)
    return random_field(mask, np.random.default_rng(seed))


def verify_riesz(
    spec: DomainSpec, p: Polarizer, f: ScalarField, seed: int | None = None
) -> Report:
    """E(f, f) <= E(P_H f, P_H f), cross-checked by a direct double sum on small supports."""
    grid = f.grid
    if grid.polarizer != p:
        raise UnpairedGridError()

    # membership of mirror nodes is read off their H-side partners, as the grid builder does
    mirror = spec.reflect(p.geodesic)
    inside = np.where(
        grid.h_side, spec.contains(grid.nodes), mirror.contains(grid.nodes[grid.pairing])
    )
    if np.any(f.values[~inside] != 0.0):
        raise FieldSupportError()

    with tracer.start_as_current_span("experiments.riesz") as span:
        span.set_attribute("nodes", grid.size)

        pf = polarize_field(f, p)
        e_f = energy(f, f)
        e_pf = energy(pf, pf)
        tolerance = RIESZ_REL_TOL * max(1.0, abs(e_f))
        passed = e_f <= e_pf + tolerance

        quantities = {
            "energy": e_f,
            "energy_polarized": e_pf,
            "difference": e_pf - e_f,
            "norm": l2_norm(f),
            "norm_polarized": l2_norm(pf),
        }
        notes = []

        support = int(np.count_nonzero((f.values != 0.0) | (pf.values != 0.0)))
        if support <= DIRECT_ENERGY_MAX_NODES:
            direct_f = energy_direct(f, f)
            direct_pf = energy_direct(pf, pf)
            agreement = max(
                abs(direct_f - e_f) / max(abs(direct_f), 1e-300),
                abs(direct_pf - e_pf) / max(abs(direct_pf), 1e-300),
            )
            quantities["direct_energy"] = direct_f
            quantities["direct_energy_polarized"] = direct_pf
            quantities["direct_relative_disagreement"] = agreement
            passed = passed and agreement <= DIRECT_AGREEMENT_TOL
        else:
            logger.warning(f"Skipping direct energy cross-check on {support} supported nodes")
            notes.append("direct cross-check skipped: support too large")

        report = Report(
            name="riesz",
            quantities=quantities,
            tolerance=tolerance,
            passed=passed,
            pitch=grid.pitch,
            nodes=grid.size,
            seed=seed,
            notes=notes,
        )
        logger.info(f"riesz pass={report.passed} difference={e_pf - e_f:.3e}")
        return report


def sweep_riesz(trials: int, pitch: float, seed: int) -> Report:
    rng = np.random.default_rng(seed)
    failures = 0
    worst = np.inf
    nodes = 0
    done = 0

    while done < trials:
        spec = random_domain(rng)
        polarizer = random_polarizer(rng)
        try:
            _, mask = build_paired_grid(spec, pitch, polarizer)
        except TooFewNodesError:
            continue

        report = verify_riesz(spec, polarizer, random_field(mask, rng), seed)
        done += 1
        nodes = max(nodes, report.nodes or 0)
        worst = min(worst, report.quantities["difference"])
        failures += 0 if report.passed else 1

    return Report(
        name="riesz_sweep",
        quantities={
            "trials": float(trials),
            "failures": float(failures),
            "worst_difference": float(worst),
        },
        tolerance=RIESZ_REL_TOL,
        passed=failures == 0,
        pitch=pitch,
        nodes=nodes,
        seed=seed,
    )
