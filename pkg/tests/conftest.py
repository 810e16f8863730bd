import json
import math

import numpy as np
import pytest

from module.domain import DiskTerm, DomainSpec, Polarizer
from module.hypgeo import Geodesic, Side


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def centered_disk():
    return DomainSpec.disk(0.0, 0.5)


@pytest.fixture
def small_disk():
    return DomainSpec.disk(0.0, 0.3)


@pytest.fixture
def two_disks():
    """One disk on each side of the imaginary diameter, far enough apart to stay disjoint."""
    return DomainSpec(
        disks=[
            DiskTerm(cx=0.4, cy=0.0, rho=0.25),
            DiskTerm(cx=-0.4, cy=0.4, rho=0.2),
        ]
    )


@pytest.fixture
def vertical_polarizer():
    return Polarizer(geodesic=Geodesic.diameter(math.pi / 2), side=Side.POSITIVE)


@pytest.fixture
def arc_polarizer():
    return Polarizer(geodesic=Geodesic.arc(0.0, 0.5), side=Side.POSITIVE)


@pytest.fixture
def domain_file(tmp_path):
    path = tmp_path / "domain.json"
    path.write_text(json.dumps({"disks": [{"cx": 0.0, "cy": 0.0, "rho": 0.3}]}))
    return str(path)
