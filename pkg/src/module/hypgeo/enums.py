from enum import Enum


class GeodesicKind(str, Enum):
    """Canonical geodesic families of the Poincare disk."""

    DIAMETER = "diam"
    ARC = "arc"


class Side(str, Enum):
    """Position of a point relative to a geodesic."""

    POSITIVE = "pos"
    NEGATIVE = "neg"
    ON = "on"
