import math

import numpy as np

from module.domain import DiskOp, DiskTerm, DomainMask, DomainSpec, Polarizer, ScalarField
from module.hypgeo import Geodesic, Side


def _polar(rng: np.random.Generator, max_radius: float) -> complex:
    radius = max_radius * math.sqrt(rng.uniform())
    angle = rng.uniform(0.0, 2.0 * math.pi)
    return radius * complex(math.cos(angle), math.sin(angle))


def random_domain(rng: np.random.Generator) -> DomainSpec:
    """One or two disks, sometimes with a hole punched into the first one."""
    terms: list[DiskTerm] = []
    for _ in range(int(rng.integers(1, 3))):
        c = _polar(rng, 0.45)
        terms.append(DiskTerm(cx=c.real, cy=c.imag, rho=float(rng.uniform(0.2, 0.4))))

    if rng.uniform() < 0.3:
        first = terms[0]
        c = complex(first.cx, first.cy) + _polar(rng, 0.05)
        terms.append(
            DiskTerm(cx=c.real, cy=c.imag, rho=float(rng.uniform(0.05, 0.12)), op=DiskOp.SUBTRACT)
        )
    return DomainSpec(disks=terms)


def random_polarizer(rng: np.random.Generator) -> Polarizer:
    side = Side.POSITIVE if rng.uniform() < 0.5 else Side.NEGATIVE
    if rng.uniform() < 0.5:
        geodesic = Geodesic.diameter(float(rng.uniform(0.0, math.pi)))
    else:
        geodesic = Geodesic.arc(float(rng.uniform(0.0, 2.0 * math.pi)), float(rng.uniform(0.1, 0.7)))
    return Polarizer(geodesic=geodesic, side=side)


def random_field(mask: DomainMask, rng: np.random.Generator, nonnegative: bool = True) -> ScalarField:
    """Random samples on the inside nodes, zero elsewhere."""
    n = mask.grid.size
    draws = rng.uniform(0.0, 1.0, n) if nonnegative else rng.standard_normal(n)
    return ScalarField(mask.grid, np.where(mask.inside, draws, 0.0))


def random_disk_points(rng: np.random.Generator, count: int, max_radius: float = 0.95) -> np.ndarray:
    radius = max_radius * np.sqrt(rng.uniform(size=count))
    angle = rng.uniform(0.0, 2.0 * np.pi, count)
    return radius * np.exp(1j * angle)
