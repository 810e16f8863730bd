from typing import Union

import numpy as np
from pydantic import model_validator

from core.schema import CustomBaseModel
from .exception import OutsideDiskError


class PointD(CustomBaseModel):
    """A point of the open unit disk, stored by its Euclidean coordinates."""

    re: float
    im: float

    @model_validator(mode="after")
    def _inside_disk(self) -> "PointD":
        modulus = float(np.hypot(self.re, self.im))
        if not modulus < 1.0:
            raise OutsideDiskError(modulus)
        return self

    @classmethod
    def from_complex(cls, z: complex) -> "PointD":
        z = complex(z)
        return cls(re=z.real, im=z.imag)

    @property
    def z(self) -> complex:
        return complex(self.re, self.im)

    def __complex__(self) -> complex:
        return self.z


ComplexLike = Union[PointD, complex, float, np.ndarray]


def as_complex(z: ComplexLike) -> np.ndarray:
    """Coerce a point, a scalar or an array of points to a complex ndarray."""
    if isinstance(z, PointD):
        return np.asarray(z.z, dtype=np.complex128)
    return np.asarray(z, dtype=np.complex128)


def check_in_disk(z: np.ndarray) -> np.ndarray:
    modulus = np.abs(z)
    bad = ~(modulus < 1.0)
    if np.any(bad):
        raise OutsideDiskError(float(np.max(np.where(bad, modulus, 0.0))))
    return z


def unwrap(x: np.ndarray):
    """0-d results go back to plain Python scalars."""
    if np.ndim(x) == 0:
        return x.item()
    return x
