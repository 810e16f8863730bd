import numpy as np
from pydantic import Field, field_validator, model_validator

from core.schema import CustomBaseModel
from module.hypgeo import (
    Geodesic,
    HyperbolicDisk,
    PointD,
    Side,
    disk_euclidean_params,
    side_signs,
)
from .enums import DiskOp
from .exception import InvalidDomainSpecError


class DiskTerm(CustomBaseModel):
    """One hyperbolic disk Delta_rho(cx + i cy) and how it combines."""

    cx: float
    cy: float
    rho: float
    op: DiskOp = DiskOp.UNION

    @model_validator(mode="after")
    def _check(self) -> "DiskTerm":
        if not 0.0 < self.rho < 1.0:
            raise InvalidDomainSpecError(f"Disk radius must lie in (0, 1), got {self.rho!r}")
        if not np.hypot(self.cx, self.cy) < 1.0:
            raise InvalidDomainSpecError(f"Disk center ({self.cx}, {self.cy}) is outside the unit disk")
        return self

    @property
    def disk(self) -> HyperbolicDisk:
        return HyperbolicDisk(center=PointD(re=self.cx, im=self.cy), rho=self.rho)


class DomainSpec(CustomBaseModel):
    """
    A bounded open set of the disk built from hyperbolic disks, evaluated
    left to right: each term is united with, or subtracted from, the set so far.

    Serialized as ``{"disks": [{"cx": .., "cy": .., "rho": .., "op": "union"}]}``.
    """

    disks: list[DiskTerm] = Field(min_length=1)

    @field_validator("disks")
    @classmethod
    def _first_is_union(cls, disks: list[DiskTerm]) -> list[DiskTerm]:
        if disks[0].op != DiskOp.UNION:
            raise InvalidDomainSpecError("The first disk of a domain must be a union term")
        return disks

    @classmethod
    def disk(cls, center: complex, rho: float) -> "DomainSpec":
        return cls(disks=[DiskTerm(cx=complex(center).real, cy=complex(center).imag, rho=rho)])

    def contains(self, z) -> np.ndarray:
        z = np.asarray(z, dtype=np.complex128)
        inside = np.zeros(z.shape, dtype=bool)
        for term in self.disks:
            hit = term.disk.contains(z)
            if term.op == DiskOp.UNION:
                inside |= hit
            else:
                inside &= ~hit
        return inside

    def reflect(self, g: Geodesic) -> "DomainSpec":
        """Image of the domain under the reflection across g."""
        terms = []
        for term in self.disks:
            image = term.disk.reflect(g)
            terms.append(
                DiskTerm(cx=image.center.re, cy=image.center.im, rho=term.rho, op=term.op)
            )
        return DomainSpec(disks=terms)

    def _union_circles(self) -> list[tuple[complex, float]]:
        circles = []
        for term in self.disks:
            if term.op == DiskOp.UNION:
                center, radius = disk_euclidean_params(term.disk)
                circles.append((center.z, radius))
        return circles

    def bounding_radius(self) -> float:
        """Euclidean radius k < 1 with the domain inside {|z| <= k}."""
        return max(abs(c) + r for c, r in self._union_circles())

    def bounding_box(self) -> tuple[float, float, float, float]:
        circles = self._union_circles()
        return (
            min(c.real - r for c, r in circles),
            max(c.real + r for c, r in circles),
            min(c.imag - r for c, r in circles),
            max(c.imag + r for c, r in circles),
        )


class Polarizer(CustomBaseModel):
    """One open side H of a geodesic; nodes on the geodesic belong to its complement."""

    geodesic: Geodesic
    side: Side

    @field_validator("side")
    @classmethod
    def _open_side(cls, side: Side) -> Side:
        if side == Side.ON:
            raise InvalidDomainSpecError("A polarizer side must be 'pos' or 'neg'")
        return side

    @property
    def sign(self) -> int:
        return 1 if self.side == Side.POSITIVE else -1

    def in_h(self, z) -> np.ndarray:
        return side_signs(self.geodesic, z) == self.sign
