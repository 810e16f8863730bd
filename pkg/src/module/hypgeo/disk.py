import math

from .exception import InvalidRadiusError
from .point import PointD
from .schema import HyperbolicDisk


def disk_euclidean_params(d: HyperbolicDisk) -> tuple[PointD, float]:
    """Euclidean center and radius of Delta_rho(z)."""
    z = d.center.z
    rho2 = d.rho**2
    denom = 1.0 - rho2 * abs(z) ** 2
    center = z * (1.0 - rho2) / denom
    radius = d.rho * (1.0 - abs(z) ** 2) / denom
    return PointD.from_complex(center), radius


def disk_lebesgue_measure(d: HyperbolicDisk) -> float:
    """Euclidean area pi (1-|z|^2)^2 t^2 / (1-|z|^2 t^2)^2 of Delta_t(z)."""
    s = 1.0 - abs(d.center.z) ** 2
    t2 = d.rho**2
    return math.pi * s**2 * t2 / (1.0 - abs(d.center.z) ** 2 * t2) ** 2


def hyperbolic_disk_measure(rho: float) -> float:
    """tau(Delta_rho(z)) = rho^2/(1 - rho^2), the same for every center."""
    if not 0.0 < rho < 1.0:
        if rho == 0.0:
            return 0.0
        raise InvalidRadiusError(rho)
    return rho**2 / (1.0 - rho**2)
