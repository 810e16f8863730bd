import logging
import time

import numpy as np
import scipy.linalg as sla
from opentelemetry import trace

from config import DEGENERATE_GAP
from module.domain import ScalarField
from module.operator import DiscreteOperator
from .exception import NonFiniteOperatorError
from .schema import Spectrum

logger = logging.getLogger(__name__)
tracer = trace.get_tracer(__name__)

MEAN_SIGN_TOL = 1e-12


def _check_finite(op: DiscreteOperator) -> None:
    if not np.all(np.isfinite(op.matrix)):
        raise NonFiniteOperatorError()


def _fix_signs(vectors: np.ndarray, sqrt_w: np.ndarray) -> np.ndarray:
    """
    Positive-mean convention: sum_i u_i w_i = sum_i v_i sqrt(w_i) >= 0.

    A vector whose mean is zero up to rounding gets its largest-magnitude
    component made positive instead.
    """
    means = sqrt_w @ vectors
    floor = MEAN_SIGN_TOL * np.abs(vectors).sum(axis=0) * sqrt_w.max()
    largest = vectors[np.argmax(np.abs(vectors), axis=0), np.arange(vectors.shape[1])]

    signs = np.where(np.abs(means) > floor, np.sign(means), np.sign(largest))
    signs[signs == 0.0] = 1.0
    return vectors * signs[None, :]


def eigen_decompose(op: DiscreteOperator) -> Spectrum:
    """Full symmetric eigendecomposition of B, largest eigenvalue first."""
    _check_finite(op)

    with tracer.start_as_current_span("spectral.eigen_decompose") as span:
        span.set_attribute("nodes", op.size)
        started = time.perf_counter()

        values, vectors = sla.eigh(op.matrix, check_finite=False, driver="evd")
        values = values[::-1].copy()
        vectors = _fix_signs(vectors[:, ::-1], op.sqrt_weights)

        logger.info(
            f"Eigendecomposition of {op.size} nodes in {time.perf_counter() - started:.3f}s, "
            f"tau_h={values[0]:.12g}, min={values[-1]:.6g}"
        )
        return Spectrum(operator=op, eigenvalues=values, eigenvectors=vectors)


def principal_eigenpair(
    op: DiscreteOperator, spectrum: Spectrum | None = None
) -> tuple[float, ScalarField]:
    """
    Largest eigenvalue tau_h with its eigenfunction u = v / sqrt(w).

    u is zero-extended to the whole grid, has unit L2 norm and positive
    mean. Only the top two eigenpairs are computed when no spectrum is given.

    Returns:
        (tau_h, u)
    """
    if spectrum is not None:
        values = spectrum.eigenvalues[:2]
        top = spectrum.eigenvectors[:, 0]
    else:
        _check_finite(op)
        n = op.size
        with tracer.start_as_current_span("spectral.principal_eigenpair") as span:
            span.set_attribute("nodes", n)
            w, v = sla.eigh(op.matrix, check_finite=False, subset_by_index=[max(n - 2, 0), n - 1])
        values = w[::-1]
        top = v[:, -1]

    if values.size > 1 and values[0] - values[1] < DEGENERATE_GAP:
        logger.warning(
            f"Degenerate spectral gap {values[0] - values[1]:.3e} for the principal eigenvalue"
        )

    top = _fix_signs(top[:, None], op.sqrt_weights)[:, 0]
    u = op.to_field(top / op.sqrt_weights)
    return float(values[0]), u


def rayleigh_quotient(op: DiscreteOperator, u: ScalarField) -> float:
    """(sqrt(w) u)^T B (sqrt(w) u) / ||u||^2 on the operator's nodes."""
    x = op.sqrt_weights * op.from_field(u)
    return float(x @ op.matrix @ x / (x @ x))
