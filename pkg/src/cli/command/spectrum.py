import click

from cli.output import run_config
from config import DEFAULT_PITCH

DOMAIN_PATH = click.Path(exists=True, dir_okay=False, file_okay=True)


@click.command(name="spectrum")
@click.option("--domain", type=DOMAIN_PATH, required=True, help="DomainSpec YAML/JSON file")
@click.option("--pitch", type=float, default=DEFAULT_PITCH, show_default=True, help="Grid pitch")
@click.option("--count", type=int, default=5, show_default=True, help="Eigenvalues to report")
@click.option("--dump", type=click.Path(dir_okay=False), default=None, help="Write the binary B matrix")
@click.pass_context
def spectrum(ctx, domain, pitch, count, dump):
    """
    Leading eigenvalues of the discretized operator on a domain.

    Examples:
      hyperlog spectrum --domain disk.json --pitch 0.04 --count 3
    """
    run_config(
        ctx,
        {"command": "spectrum", "domain": domain, "pitches": [pitch], "count": count, "dump": dump},
    )
