import click

from module.hypgeo import Geodesic, InvalidGeodesicError


class GeodesicParam(click.ParamType):
    """``diam:<theta>`` or ``arc:<theta>:<a>``."""

    name = "geodesic"

    def convert(self, value, param, ctx):
        if isinstance(value, Geodesic):
            return value
        try:
            return Geodesic.parse(value)
        except (InvalidGeodesicError, ValueError) as e:
            self.fail(str(e), param, ctx)
