import logging
from typing import Any

import click

from core.document import DocumentError
from module.experiments import Report, ReportWriter, write_plot_csv
from .runner import execute
from .schema import RunConfig

logger = logging.getLogger("cli.output")


def emit(report: Report, manifest: str | None, csv_path: str | None) -> None:
    """Report JSON to stdout, then the optional manifest line and plot CSV."""
    click.echo(report.to_json())
    if manifest is not None:
        ReportWriter(manifest).append(report)
    if csv_path is not None:
        rows = write_plot_csv(csv_path, report.series)
        logger.info(f"Wrote {rows} plot rows to {csv_path}")


def run_config(ctx: click.Context, values: dict[str, Any]) -> None:
    """
    Validate, execute and emit one run, then exit.

    Exit codes: 0 when the report passes, 1 when a verification fails,
    2 when the input is rejected.
    """
    try:
        config = RunConfig.model_validate({k: v for k, v in values.items() if v is not None})
        report = execute(config)
        emit(report, config.output, config.csv)
    except (DocumentError, ValueError, OSError) as e:
        click.echo(f"Error: {e}", err=True)
        logger.exception("Command failed")
        ctx.exit(2)

    ctx.exit(0 if report.passed else 1)
