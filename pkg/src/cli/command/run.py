import logging

import click

from cli.output import run_config
from core.document import DocumentError, DocumentLoader

logger = logging.getLogger("commands.run")


@click.command(name="run")
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False, file_okay=True),
    required=True,
    help="Run file (YAML/JSON) with a command and its parameters",
)
@click.pass_context
def run_file(ctx, config_path):
    """
    Execute a run file. ${VAR}, ${VAR:-default} and ${VAR:?error}
    placeholders are expanded from the environment.

    Examples:
      hyperlog run --config runs/fk.yaml
    """
    try:
        values = DocumentLoader(config_path).load()
    except DocumentError as e:
        click.echo(f"Error: {e}", err=True)
        logger.exception("Loading run file failed")
        ctx.exit(2)

    if not isinstance(values, dict):
        click.echo("Error: run file must be a mapping", err=True)
        ctx.exit(2)
    run_config(ctx, values)
