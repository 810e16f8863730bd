import click

from cli.command.spectrum import DOMAIN_PATH
from cli.output import run_config
from cli.param.enum import EnumParam
from cli.param.geodesic import GeodesicParam
from cli.param.sequence import ComplexParam, SequenceParam
from config import DEFAULT_PITCH, DEFAULT_SEED
from module.hypgeo import Side


def report_options(fn):
    """--seed, --manifest and --csv, shared by every verification."""
    options = [
        click.option("--seed", type=int, default=DEFAULT_SEED, show_default=True, help="Random seed"),
        click.option(
            "--manifest", type=click.Path(dir_okay=False), default=None, help="Append the report (JSONL)"
        ),
        click.option(
            "--csv", "csv_path", type=click.Path(dir_okay=False), default=None, help="Plot data CSV"
        ),
    ]
    for option in reversed(options):
        fn = option(fn)
    return fn


def domain_option(required: bool = True):
    return click.option(
        "--domain", type=DOMAIN_PATH, required=required, help="DomainSpec YAML/JSON file"
    )


def pitch_option(fn):
    return click.option(
        "--pitch", type=float, default=DEFAULT_PITCH, show_default=True, help="Grid pitch"
    )(fn)


def polarizer_options(fn):
    fn = click.option(
        "--side", type=EnumParam(Side), default="pos", show_default=True, help="pos or neg"
    )(fn)
    return click.option(
        "--geodesic", type=GeodesicParam(), default=None, help="diam:<theta> or arc:<theta>:<a>"
    )(fn)


def _run(ctx, command: str, seed, manifest, csv_path, **values) -> None:
    run_config(
        ctx,
        {"command": command, "seed": seed, "output": manifest, "csv": csv_path, **values},
    )


@click.group()
def verify():
    """Run one verification and print its JSON report; exit 1 when it fails."""
    pass


@verify.command(name="fk")
@domain_option(required=False)
@polarizer_options
@pitch_option
@click.option("--random", "trials", type=int, default=None, help="Sweep over N random (domain, side) pairs")
@report_options
@click.pass_context
def verify_fk(ctx, domain, geodesic, side, pitch, trials, seed, manifest, csv_path):
    """
    tau_h never decreases under polarization.

    Examples:
      hyperlog verify fk --domain domain.json --geodesic arc:0:0.5 --side pos --pitch 0.02
      hyperlog verify fk --random 50 --pitch 0.05 --seed 7
    """
    _run(
        ctx,
        "fk",
        seed,
        manifest,
        csv_path,
        domain=domain,
        geodesic=geodesic,
        side=side,
        pitches=[pitch],
        random=trials,
    )


@verify.command(name="riesz")
@domain_option(required=False)
@polarizer_options
@pitch_option
@click.option("--random", "trials", type=int, default=None, help="Sweep over N random fields")
@report_options
@click.pass_context
def verify_riesz(ctx, domain, geodesic, side, pitch, trials, seed, manifest, csv_path):
    """
    The logarithmic energy of a random nonnegative field never decreases under polarization.
    """
    _run(
        ctx,
        "riesz",
        seed,
        manifest,
        csv_path,
        domain=domain,
        geodesic=geodesic,
        side=side,
        pitches=[pitch],
        random=trials,
    )


@verify.command(name="positivity")
@domain_option()
@click.option(
    "--pitches", type=SequenceParam(float), default="0.04,0.02", show_default=True,
    help="Comma separated pitches",
)
@report_options
@click.pass_context
def verify_positivity(ctx, domain, pitches, seed, manifest, csv_path):
    """All eigenvalues of the discretized operator are positive."""
    _run(ctx, "positivity", seed, manifest, csv_path, domain=domain, pitches=pitches)


@verify.command(name="representation")
@domain_option()
@click.option("--z", "point", type=ComplexParam(), default="0", show_default=True, help="Center point")
@click.option("--r", "r", type=float, default=0.1, show_default=True, help="Pseudo-hyperbolic radius")
@click.option(
    "--pitches", type=SequenceParam(float), default=str(DEFAULT_PITCH), show_default=True,
    help="One pitch, or several for a refinement study",
)
@report_options
@click.pass_context
def verify_representation(ctx, domain, point, r, pitches, seed, manifest, csv_path):
    """Circle-mean representation of the principal eigenfunction around a point."""
    _run(
        ctx, "representation", seed, manifest, csv_path, domain=domain, z=point, r=r, pitches=pitches
    )


@verify.command(name="bound")
@domain_option()
@pitch_option
@click.option("--trials", type=int, default=100, show_default=True, help="Random fields to test")
@report_options
@click.pass_context
def verify_bound(ctx, domain, pitch, trials, seed, manifest, csv_path):
    """|L_h f|^2 <= (pi^2/48) ||f||^2 for random unit fields."""
    _run(ctx, "bound", seed, manifest, csv_path, domain=domain, pitches=[pitch], trials=trials)


@verify.command(name="decay")
@domain_option()
@pitch_option
@click.option(
    "--radii", type=SequenceParam(float), default="0.7,0.9,0.99,0.999", show_default=True,
    help="Increasing radii outside the domain",
)
@report_options
@click.pass_context
def verify_decay(ctx, domain, pitch, radii, seed, manifest, csv_path):
    """The potential of the principal eigenfunction decays toward the unit circle."""
    _run(ctx, "decay", seed, manifest, csv_path, domain=domain, pitches=[pitch], radii=radii)


@verify.command(name="eigenfunction")
@domain_option()
@pitch_option
@report_options
@click.pass_context
def verify_eigenfunction(ctx, domain, pitch, seed, manifest, csv_path):
    """The principal eigenfunction is one-signed and its eigenvalue simple."""
    _run(ctx, "eigenfunction", seed, manifest, csv_path, domain=domain, pitches=[pitch])
