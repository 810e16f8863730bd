import logging

import numpy as np

from config import ON_GEODESIC_TOL
from .enums import GeodesicKind, Side
from .exception import InvalidGeodesicError
from .point import ComplexLike, as_complex, check_in_disk, unwrap
from .schema import Geodesic

logger = logging.getLogger(__name__)

_COLLINEAR_TOL = 1e-12


def side_signs(g: Geodesic, z: ComplexLike, tol: float = ON_GEODESIC_TOL) -> np.ndarray:
    """Vectorized side classification: +1 positive, -1 negative, 0 on the geodesic."""
    x = np.real(g.normalize(check_in_disk(as_complex(z))))
    return np.where(np.abs(x) < tol, 0, np.sign(x)).astype(np.int8)


def geodesic_side(g: Geodesic, z: ComplexLike, tol: float = ON_GEODESIC_TOL) -> Side:
    sign = int(side_signs(g, np.atleast_1d(as_complex(z)), tol)[0])
    if sign > 0:
        return Side.POSITIVE
    if sign < 0:
        return Side.NEGATIVE
    return Side.ON


def reflect(g: Geodesic, z: ComplexLike):
    """Reflection sigma_G of z across g; an involution fixing g pointwise."""
    z = check_in_disk(as_complex(z))
    return unwrap(g.reflect_points(z))


def reflection_jacobian(g: Geodesic, z: ComplexLike):
    """|det J sigma(z)| = (1 - |sigma z|^2)^2 / (1 - |z|^2)^2."""
    z = check_in_disk(as_complex(z))
    image = g.reflect_points(z)
    return unwrap((1.0 - np.abs(image) ** 2) ** 2 / (1.0 - np.abs(z) ** 2) ** 2)


def geodesic_through_points(p1: complex, p2: complex, p3: complex) -> Geodesic:
    """Canonical form of the geodesic known to pass through three distinct points."""
    x1, y1 = p1.real, p1.imag
    x2, y2 = p2.real, p2.imag
    x3, y3 = p3.real, p3.imag

    d = 2.0 * (x1 * (y2 - y3) + x2 * (y3 - y1) + x3 * (y1 - y2))
    scale = max(abs(p2 - p1), abs(p3 - p1)) ** 2
    if abs(d) < _COLLINEAR_TOL * max(scale, 1.0):
        direction = p3 - p1 if abs(p3 - p1) > abs(p2 - p1) else p2 - p1
        return Geodesic.diameter(float(np.angle(direction)))

    s1, s2, s3 = abs(p1) ** 2, abs(p2) ** 2, abs(p3) ** 2
    ux = (s1 * (y2 - y3) + s2 * (y3 - y1) + s3 * (y1 - y2)) / d
    uy = (s1 * (x3 - x2) + s2 * (x1 - x3) + s3 * (x2 - x1)) / d
    center = complex(ux, uy)

    modulus = abs(center)
    if modulus <= 1.0:
        raise InvalidGeodesicError("Points do not lie on a circle orthogonal to the unit circle")
    a = modulus - np.sqrt(modulus**2 - 1.0)
    return Geodesic.arc(float(-np.angle(center)), float(a))


def orthogonal_geodesic(g: Geodesic, p: ComplexLike, tol: float = 1e-9) -> Geodesic:
    """The geodesic through p in g that crosses g at a right angle."""
    p = complex(check_in_disk(as_complex(p)))
    q = complex(g.normalize(p))
    if abs(q.real) > tol:
        raise InvalidGeodesicError(f"Point {p!r} does not lie on the geodesic {g.format()}")

    y0 = q.imag

    # automorphism fixing the imaginary diameter and sending 0 to i*y0;
    # it carries the real diameter onto the orthogonal geodesic through i*y0
    def lift(t: float) -> complex:
        w = (t + 1j * y0) / (1.0 - 1j * y0 * t)
        return complex(g.denormalize(w))

    return geodesic_through_points(lift(-0.5), lift(0.0), lift(0.5))
