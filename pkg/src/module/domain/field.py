import numpy as np

from .grid import DomainMask, ScalarField


def integrate(f: ScalarField) -> float:
    return float(np.dot(f.values, f.grid.weights))


def l2_norm(f: ScalarField) -> float:
    return float(np.sqrt(np.dot(f.values**2, f.grid.weights)))


def mask_measure(m: DomainMask) -> float:
    """Hyperbolic measure tau of the masked set."""
    return float(m.weights.sum())
