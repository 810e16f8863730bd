import math

import numpy as np
from scipy import integrate

from config import CIRCLE_POINTS
from module.hypgeo import ComplexLike, as_complex, check_in_disk
from .exception import InvalidWeightError

QUAD_EPSABS = 1e-13
QUAD_EPSREL = 1e-12


def _quad(fn, lower: float, upper: float) -> float:
    value, _ = integrate.quad(fn, lower, upper, epsabs=QUAD_EPSABS, epsrel=QUAD_EPSREL, limit=200)
    return value


def diagonal_value_by_quadrature(weight: float) -> float:
    """diagonal_value recomputed by adaptive quadrature in the radial variable."""
    if not weight > 0.0:
        raise InvalidWeightError(weight)
    rho = math.sqrt(weight / (1.0 + weight))
    integral = _quad(lambda r: -math.log(r) * 2.0 * r / ((1.0 - r) * (1.0 + r)) ** 2, 0.0, rho)
    return integral / weight


def radial_log_square_integral() -> float:
    """int_0^1 (log r)^2 r / (1 - r^2)^2 dr, which equals pi^2/24."""
    return _quad(lambda r: math.log(r) ** 2 * r / ((1.0 - r) * (1.0 + r)) ** 2, 0.0, 1.0)


def circle_angles(n: int = CIRCLE_POINTS) -> np.ndarray:
    return 2.0 * np.pi * np.arange(n) / n


def circle_points(z: ComplexLike, r: float, n: int = CIRCLE_POINTS) -> np.ndarray:
    """phi_z(r e^{i theta}) at the trapezoid angles: the circle [z, w] = r."""
    z = complex(check_in_disk(as_complex(z)))
    w = r * np.exp(1j * circle_angles(n))
    return (z - w) / (1.0 - z.conjugate() * w)


def circle_log_integral(a: complex, n: int = 4096) -> float:
    """Trapezoid rule for int_0^{2 pi} log|1 - a e^{i theta}| d theta."""
    values = np.log(np.abs(1.0 - complex(a) * np.exp(1j * circle_angles(n))))
    return float(2.0 * np.pi * values.mean())


def circle_mean(fn, z: ComplexLike, r: float, n: int = CIRCLE_POINTS) -> float:
    """Trapezoid mean of fn over the hyperbolic circle of pseudo-radius r around z."""
    return float(np.mean(fn(circle_points(z, r, n))))
