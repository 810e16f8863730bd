import click

from cli.output import run_config
from cli.param.sequence import SequenceParam


@click.command(name="oracle")
@click.option("--R", "radius", type=float, required=True, help="Radius of the centered disk")
@click.option("--n", "ns", type=SequenceParam(int), default="128,256,512", show_default=True)
@click.option("--pitch", type=float, default=None, help="Also compare with the 2D solver at this pitch")
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), default=None, help="Plot data CSV")
@click.pass_context
def oracle(ctx, radius, ns, pitch, csv_path):
    """
    Radial oracle for tau_h of a centered disk, with its convergence table.

    Examples:
      hyperlog oracle --R 0.5 --n 128,256,512
      hyperlog oracle --R 0.5 --pitch 0.02
    """
    run_config(
        ctx,
        {
            "command": "oracle",
            "R": radius,
            "ns": ns,
            "pitches": None if pitch is None else [pitch],
            "csv": csv_path,
        },
    )
