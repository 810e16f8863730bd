import numpy as np

from .point import ComplexLike, as_complex, check_in_disk, unwrap


def pseudo_distance_raw(z: np.ndarray, w: np.ndarray) -> np.ndarray:
    """[z, w] without the disk check, broadcasting over arrays."""
    return np.abs(z - w) / np.abs(1.0 - np.conj(z) * w)


def pseudo_distance(z: ComplexLike, w: ComplexLike):
    """Pseudo-hyperbolic distance [z, w] = |z - w| / |1 - conj(z) w|."""
    z = check_in_disk(as_complex(z))
    w = check_in_disk(as_complex(w))
    return unwrap(pseudo_distance_raw(z, w))


def hyperbolic_distance(z: ComplexLike, w: ComplexLike):
    """d_h(z, w) = 2 atanh [z, w]."""
    z = check_in_disk(as_complex(z))
    w = check_in_disk(as_complex(w))
    return unwrap(2.0 * np.arctanh(pseudo_distance_raw(z, w)))


def mobius_phi(z: ComplexLike, w: ComplexLike):
    """phi_z(w) = (z - w)/(1 - conj(z) w), the involution swapping z and 0."""
    z = check_in_disk(as_complex(z))
    w = check_in_disk(as_complex(w))
    return unwrap((z - w) / (1.0 - np.conj(z) * w))
