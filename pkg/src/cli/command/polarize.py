import click

from cli.command.spectrum import DOMAIN_PATH
from cli.output import run_config
from cli.param.enum import EnumParam
from cli.param.geodesic import GeodesicParam
from config import DEFAULT_PITCH
from module.hypgeo import Side


@click.command(name="polarize")
@click.option("--domain", type=DOMAIN_PATH, required=True, help="DomainSpec YAML/JSON file")
@click.option("--geodesic", type=GeodesicParam(), required=True, help="diam:<theta> or arc:<theta>:<a>")
@click.option("--side", type=EnumParam(Side), default="pos", show_default=True, help="pos or neg")
@click.option("--pitch", type=float, default=DEFAULT_PITCH, show_default=True, help="Grid pitch")
@click.option("--output", type=click.Path(dir_okay=False), default=None, help="CSV of the node masks")
@click.pass_context
def polarize(ctx, domain, geodesic, side, pitch, output):
    """
    Polarize a domain across a geodesic.

    The CSV lists the nodes of the domain (series omega) and of its
    polarization (series polarized).

    Examples:
      hyperlog polarize --domain disk.json --geodesic arc:0:0.5 --side pos --output mask.csv
    """
    run_config(
        ctx,
        {
            "command": "polarize",
            "domain": domain,
            "geodesic": geodesic,
            "side": side,
            "pitches": [pitch],
            "csv": output,
        },
    )
