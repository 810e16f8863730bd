from .bounds import boundary_decay_values, verify_boundary_decay, verify_uniform_bound
from .exception import (
    ExperimentError,
    FieldSupportError,
    InvalidRadiiError,
    InvalidRepresentationRadiusError,
)
from .faber_krahn import sweep_reverse_faber_krahn, verify_reverse_faber_krahn
from .polarize import polarization_report
from .representation import representation_refinement, verify_representation
from .riesz import riesz_field, sweep_riesz, verify_riesz
from .sampling import random_disk_points, random_domain, random_field, random_polarizer
from .schema import PlotRow, Report
from .spectrum import (
    oracle_report,
    spectrum_report,
    verify_first_eigenfunction,
    verify_oracle_agreement,
    verify_positivity,
)
from .writer import ReportWriter, write_plot_csv

__all__ = [
    "ExperimentError",
    "FieldSupportError",
    "InvalidRadiiError",
    "InvalidRepresentationRadiusError",
    "PlotRow",
    "Report",
    "ReportWriter",
    "boundary_decay_values",
    "oracle_report",
    "polarization_report",
    "random_disk_points",
    "random_domain",
    "random_field",
    "random_polarizer",
    "representation_refinement",
    "riesz_field",
    "spectrum_report",
    "sweep_reverse_faber_krahn",
    "sweep_riesz",
    "verify_boundary_decay",
    "verify_first_eigenfunction",
    "verify_oracle_agreement",
    "verify_positivity",
    "verify_representation",
    "verify_riesz",
    "verify_uniform_bound",
    "write_plot_csv",
]
