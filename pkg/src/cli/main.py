import logging
import sys

import click

from cli.command.oracle import oracle
from cli.command.polarize import polarize
from cli.command.run import run_file
from cli.command.spectrum import spectrum
from cli.command.verify import verify
from config import TRACING_ENABLED
from core.telemetry import setup_tracing

VERSION = "0.1.0"


@click.group(invoke_without_command=True)
@click.option("--version", is_flag=True, help="Show version information")
@click.option("--verbose", is_flag=True, help="Log at DEBUG level")
@click.option("--trace", is_flag=True, help="Log a line per finished span")
@click.pass_context
def cli(ctx, version, verbose, trace):
    """
    Hyperlog CLI: the hyperbolic logarithmic potential on Poincare disk domains
    """
    if verbose:
        logging.getLogger().setLevel(logging.DEBUG)
    if trace or TRACING_ENABLED:
        setup_tracing()

    if version:
        click.echo(f"Hyperlog CLI v{VERSION}")
        click.echo("Python: " + sys.version.split()[0])
        ctx.exit()
    elif ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())
        ctx.exit(2)


cli.add_command(spectrum)
cli.add_command(polarize)
cli.add_command(oracle)
cli.add_command(verify)
cli.add_command(run_file)


def run(argv: list[str] | None = None) -> int:
    """Invoke the CLI and return its exit code instead of exiting."""
    try:
        rv = cli.main(args=argv, prog_name="hyperlog", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return 1
    return rv if isinstance(rv, int) else 0
