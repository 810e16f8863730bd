import logging

from module.domain import (
    DomainMask,
    DomainSpec,
    Polarizer,
    build_paired_grid,
    mask_measure,
    polarize_mask,
    reflect_mask,
    symmetric_difference_measure,
)
from .schema import PlotRow, Report

logger = logging.getLogger(__name__)


def _mask_rows(mask: DomainMask, series: str) -> list[PlotRow]:
    return [PlotRow(x=float(z.real), y=float(z.imag), series=series) for z in mask.nodes]


def polarization_report(spec: DomainSpec, p: Polarizer, pitch: float) -> Report:
    """P_H Omega on the paired grid; the node sets of Omega and P_H Omega go to the plot series."""
    grid, mask = build_paired_grid(spec, pitch, p)
    polarized = polarize_mask(mask, p)
    mirrored = reflect_mask(mask)

    quantities = {
        "measure_omega": mask_measure(mask),
        "measure_polarized": mask_measure(polarized),
        "inside_omega": float(mask.count),
        "inside_polarized": float(polarized.count),
        "symmetric_difference_omega": symmetric_difference_measure(polarized, mask),
        "symmetric_difference_mirror": symmetric_difference_measure(polarized, mirrored),
    }
    logger.info(f"Polarized {mask.count} nodes across {p.geodesic.format()} ({p.side.value})")

    return Report(
        name="polarize",
        quantities=quantities,
        tolerance=0.0,
        # polarization is a rearrangement
        passed=polarized.count == mask.count,
        pitch=pitch,
        nodes=grid.size,
        series=_mask_rows(mask, "omega") + _mask_rows(polarized, "polarized"),
    )
