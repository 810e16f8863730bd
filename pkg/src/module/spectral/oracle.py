import logging

import numpy as np
import scipy.linalg as sla

from .exception import InvalidOracleError
from .schema import OracleRow

logger = logging.getLogger(__name__)

MIN_ORACLE_POINTS = 32


def _radial_system(R: float, n: int) -> tuple[np.ndarray, np.ndarray]:
    if not 0.0 < R < 1.0:
        raise InvalidOracleError(f"Oracle radius must lie in (0, 1), got {R!r}")
    if n < MIN_ORACLE_POINTS:
        raise InvalidOracleError(f"Oracle needs at least {MIN_ORACLE_POINTS} points, got {n}")

    dr = R / n
    r = (np.arange(n) + 0.5) * dr
    weights = 2.0 * r * dr / (1.0 - r**2) ** 2
    # angular mean of 1/2 log(1/[r e^{i t}, s]) is 1/2 log(1/max(r, s))
    kernel = -0.5 * np.log(np.maximum.outer(r, r))
    return kernel, weights


def radial_oracle(R: float, n: int) -> float:
    """tau_h of Delta_R(0) from the midpoint rule of the angle-averaged 1D kernel."""
    kernel, weights = _radial_system(R, n)
    sqrt_w = np.sqrt(weights)
    matrix = sqrt_w[:, None] * kernel * sqrt_w[None, :]
    top = sla.eigh(matrix, eigvals_only=True, subset_by_index=[n - 1, n - 1], check_finite=False)
    return float(top[0])


def radial_constant_rayleigh(R: float, n: int) -> float:
    """E(1, 1)/tau(Delta_R(0)), a lower bound for tau_h."""
    kernel, weights = _radial_system(R, n)
    return float(weights @ kernel @ weights / weights.sum())


def radial_oracle_table(R: float, ns: list[int]) -> list[OracleRow]:
    rows: list[OracleRow] = []
    previous = None
    for n in sorted(ns):
        tau = radial_oracle(R, n)
        rows.append(OracleRow(n=n, tau=tau, delta=None if previous is None else abs(tau - previous)))
        previous = tau
        logger.debug(f"Radial oracle R={R} n={n}: {tau:.12g}")
    return rows
