from pydantic import field_validator

from core.schema import CustomBaseModel
from .exception import InvalidGeodesicError
from .point import ComplexLike, as_complex, check_in_disk, unwrap


class MobiusT(CustomBaseModel):
    """The disk automorphism T(z) = (z - a)/(1 - a z) with real 0 < a < 1."""

    a: float

    @field_validator("a")
    @classmethod
    def _check_a(cls, a: float) -> float:
        if not 0.0 < a < 1.0:
            raise InvalidGeodesicError(f"Mobius parameter must lie in (0, 1), got {a!r}")
        return a


def _param(t: "MobiusT | float") -> float:
    return t.a if isinstance(t, MobiusT) else float(t)


def t_forward(a: float, z):
    return (z - a) / (1.0 - a * z)


def t_backward(a: float, w):
    return (w + a) / (1.0 + a * w)


def map_T(t: MobiusT | float, z: ComplexLike):
    """T(z) = (z - a)/(1 - a z); sends a to 0 and the disk onto itself."""
    z = check_in_disk(as_complex(z))
    return unwrap(t_forward(_param(t), z))


def map_T_inv(t: MobiusT | float, w: ComplexLike):
    """T^-1(w) = (w + a)/(1 + a w)."""
    w = check_in_disk(as_complex(w))
    return unwrap(t_backward(_param(t), w))
