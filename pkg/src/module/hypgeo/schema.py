import math

import numpy as np
from pydantic import model_validator

from core.schema import CustomBaseModel
from .enums import GeodesicKind
from .exception import InvalidGeodesicError, InvalidRadiusError
from .metric import pseudo_distance_raw
from .mobius import t_backward, t_forward
from .point import ComplexLike, PointD, as_complex

ARC_MIN_A = 1e-9
ARC_MAX_A = 1.0 - 1e-9


class Geodesic(CustomBaseModel):
    """
    Canonical geodesic of the Poincare disk.

    A diameter is stored by the angle ``theta`` it makes with the real axis,
    reduced to [0, pi). An arc is stored by the rotation ``theta`` in
    [0, 2*pi) that makes it symmetric about the real axis, and by the
    intercept ``a`` of the rotated arc with the positive real axis.

    All side, reflection and sampling logic goes through :meth:`normalize`,
    the disk automorphism carrying the geodesic onto the imaginary diameter
    with the positive side onto the right half-disk.
    """

    kind: GeodesicKind
    theta: float
    a: float | None = None

    @model_validator(mode="before")
    @classmethod
    def _canonicalize(cls, data):
        if not isinstance(data, dict):
            return data

        data = dict(data)
        kind = GeodesicKind(data.get("kind"))
        theta = float(data.get("theta", 0.0))
        if not math.isfinite(theta):
            raise InvalidGeodesicError(f"Geodesic angle must be finite, got {theta!r}")

        if kind == GeodesicKind.DIAMETER:
            if data.get("a") is not None:
                raise InvalidGeodesicError("A diameter takes no intercept")
            data["theta"] = math.fmod(theta, math.pi) % math.pi
            return data

        a = data.get("a")
        if a is None:
            raise InvalidGeodesicError("An arc requires the intercept a")
        a = float(a)
        if a < 0.0:
            # the arc crossing the real axis at -a is the rotation by pi of the one at a
            a, theta = -a, theta + math.pi
        if not ARC_MIN_A <= a <= ARC_MAX_A:
            raise InvalidGeodesicError(
                f"Arc intercept must lie in [{ARC_MIN_A}, {ARC_MAX_A}], got {a!r}"
            )
        data["a"] = a
        data["theta"] = math.fmod(theta, 2.0 * math.pi) % (2.0 * math.pi)
        return data

    @classmethod
    def diameter(cls, theta: float) -> "Geodesic":
        return cls(kind=GeodesicKind.DIAMETER, theta=theta)

    @classmethod
    def arc(cls, theta: float, a: float) -> "Geodesic":
        return cls(kind=GeodesicKind.ARC, theta=theta, a=a)

    @classmethod
    def parse(cls, text: str) -> "Geodesic":
        """Parse ``diam:<theta>`` or ``arc:<theta>:<a>``."""
        parts = text.strip().split(":")
        try:
            if parts[0] == GeodesicKind.DIAMETER.value and len(parts) == 2:
                return cls.diameter(float(parts[1]))
            if parts[0] == GeodesicKind.ARC.value and len(parts) == 3:
                return cls.arc(float(parts[1]), float(parts[2]))
        except ValueError as e:
            raise InvalidGeodesicError(f"Invalid geodesic '{text}': {e}") from e
        raise InvalidGeodesicError(
            f"Invalid geodesic '{text}', expected diam:<theta> or arc:<theta>:<a>"
        )

    def format(self) -> str:
        if self.kind == GeodesicKind.DIAMETER:
            return f"diam:{self.theta!r}"
        return f"arc:{self.theta!r}:{self.a!r}"

    @property
    def rotation(self) -> complex:
        return complex(math.cos(self.theta), math.sin(self.theta))

    def normalize(self, z):
        """Map into the frame where the geodesic is the imaginary diameter."""
        z = as_complex(z)
        if self.kind == GeodesicKind.DIAMETER:
            return 1j * np.conj(self.rotation) * z
        return t_forward(self.a, self.rotation * z)

    def denormalize(self, w):
        w = as_complex(w)
        if self.kind == GeodesicKind.DIAMETER:
            return -1j * self.rotation * w
        return np.conj(self.rotation) * t_backward(self.a, w)

    def reflect_points(self, z):
        """sigma(z) without input checks, vectorized."""
        return self.denormalize(-np.conj(self.normalize(z)))

    def circle(self) -> tuple[complex, float]:
        """Center and radius of the circle supporting an arc."""
        if self.kind != GeodesicKind.ARC:
            raise InvalidGeodesicError("A diameter has no supporting circle")
        z0 = (1.0 + self.a**2) / (2.0 * self.a)
        r = (1.0 - self.a**2) / (2.0 * self.a)
        return complex(np.conj(self.rotation) * z0), r

    def endpoints(self) -> tuple[complex, complex]:
        """The two ideal points where the geodesic meets the unit circle."""
        ends = self.denormalize(np.array([1j, -1j]))
        return complex(ends[0]), complex(ends[1])

    def sample(self, n: int, margin: float = 1e-3) -> np.ndarray:
        """n points along the geodesic, avoiding the ideal endpoints."""
        y = np.linspace(-1.0 + margin, 1.0 - margin, n)
        return self.denormalize(1j * y)


class HyperbolicDisk(CustomBaseModel):
    """Delta_rho(center) = {w : [center, w] < rho}."""

    center: PointD
    rho: float

    @model_validator(mode="after")
    def _check_rho(self) -> "HyperbolicDisk":
        if not 0.0 < self.rho < 1.0:
            raise InvalidRadiusError(self.rho)
        return self

    @classmethod
    def at(cls, center: ComplexLike, rho: float) -> "HyperbolicDisk":
        point = center if isinstance(center, PointD) else PointD.from_complex(complex(center))
        return cls(center=point, rho=rho)

    def contains(self, w) -> np.ndarray:
        return pseudo_distance_raw(self.center.z, as_complex(w)) < self.rho

    def reflect(self, g: Geodesic) -> "HyperbolicDisk":
        """Reflections are isometries, so the image is the disk around sigma(center)."""
        image = complex(g.reflect_points(self.center.z))
        return HyperbolicDisk.at(image, self.rho)
