from .disk import disk_euclidean_params, disk_lebesgue_measure, hyperbolic_disk_measure
from .enums import GeodesicKind, Side
from .exception import GeometryError, InvalidGeodesicError, InvalidRadiusError, OutsideDiskError
from .metric import hyperbolic_distance, mobius_phi, pseudo_distance, pseudo_distance_raw
from .mobius import MobiusT, map_T, map_T_inv
from .point import ComplexLike, PointD, as_complex, check_in_disk
from .reflection import (
    geodesic_side,
    geodesic_through_points,
    orthogonal_geodesic,
    reflect,
    reflection_jacobian,
    side_signs,
)
from .schema import Geodesic, HyperbolicDisk

__all__ = [
    "ComplexLike",
    "Geodesic",
    "GeodesicKind",
    "GeometryError",
    "HyperbolicDisk",
    "InvalidGeodesicError",
    "InvalidRadiusError",
    "MobiusT",
    "OutsideDiskError",
    "PointD",
    "Side",
    "as_complex",
    "check_in_disk",
    "disk_euclidean_params",
    "disk_lebesgue_measure",
    "geodesic_side",
    "geodesic_through_points",
    "hyperbolic_disk_measure",
    "hyperbolic_distance",
    "map_T",
    "map_T_inv",
    "mobius_phi",
    "orthogonal_geodesic",
    "pseudo_distance",
    "pseudo_distance_raw",
    "reflect",
    "reflection_jacobian",
    "side_signs",
]
