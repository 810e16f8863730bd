import logging

import numpy as np
import pytest

from module.domain import build_grid
from module.operator import assemble, diagonal_value
from module.spectral import (
    NonFiniteOperatorError,
    eigen_decompose,
    principal_eigenpair,
    rayleigh_quotient,
)
from module.util import operator_from_matrix, power_iteration


@pytest.fixture
def disk_operator(centered_disk):
    grid, mask = build_grid(centered_disk, 0.05)
    return assemble(grid, mask)


class TestEigenDecompose:
    def test_single_node(self):
        w = 0.02
        op = operator_from_matrix([[w * 0.5 * diagonal_value(w)]], weights=[w])

        spectrum = eigen_decompose(op)

        assert spectrum.tau_h == pytest.approx(0.5 * w * diagonal_value(w), rel=1e-14)
        assert spectrum.relative_gap == 1.0

    def test_two_by_two(self):
        a, b = 0.3, 0.1
        op = operator_from_matrix([[a, b], [b, a]])

        spectrum = eigen_decompose(op)

        np.testing.assert_allclose(spectrum.eigenvalues, [a + b, a - b], rtol=1e-14)
        np.testing.assert_allclose(spectrum.eigenvectors[:, 0], [2**-0.5, 2**-0.5], rtol=1e-12)
        assert spectrum.relative_gap == pytest.approx(2 * b / (a + b))

    def test_descending_orthonormal_pairs(self, disk_operator):
        spectrum = eigen_decompose(disk_operator)
        values, vectors = spectrum.eigenvalues, spectrum.eigenvectors

        assert np.all(np.diff(values) <= 0.0)
        np.testing.assert_allclose(vectors.T @ vectors, np.eye(values.size), atol=1e-10)
        residual = disk_operator.matrix @ vectors - vectors * values[None, :]
        assert np.max(np.abs(residual)) < 1e-10 * values[0]

    def test_positive_mean_convention(self, disk_operator):
        vectors = eigen_decompose(disk_operator).eigenvectors
        sqrt_w = disk_operator.sqrt_weights

        means = sqrt_w @ vectors
        assert np.all(means >= -1e-14)

        # zero-mean modes, e.g. the antisymmetric ones of a centered disk
        zero_mean = np.abs(means) <= 1e-12 * np.abs(vectors).sum(axis=0) * sqrt_w.max()
        assert zero_mean.any()
        columns = np.flatnonzero(zero_mean)
        largest = vectors[np.argmax(np.abs(vectors[:, columns]), axis=0), columns]
        assert np.all(largest > 0.0)

    def test_zero_mean_vector_has_positive_largest_component(self):
        op = operator_from_matrix([[0.3, 0.1], [0.1, 0.3]])

        second = eigen_decompose(op).eigenvectors[:, 1]

        assert second[np.argmax(np.abs(second))] > 0.0
        assert abs(second[0] + second[1]) < 1e-14

    def test_top_eigenvalue_matches_power_iteration(self, disk_operator):
        spectrum = eigen_decompose(disk_operator)

        assert spectrum.tau_h == pytest.approx(power_iteration(disk_operator.matrix), rel=1e-9)

    def test_positive_definite(self, disk_operator):
        assert eigen_decompose(disk_operator).min_eigenvalue > 0.0

    def test_non_finite(self):
        op = operator_from_matrix([[1.0, np.nan], [np.nan, 1.0]])

        with pytest.raises(NonFiniteOperatorError):
            eigen_decompose(op)
        with pytest.raises(NonFiniteOperatorError):
            principal_eigenpair(op)


class TestPrincipalEigenpair:
    def test_one_signed_unit_eigenfunction(self, disk_operator):
        tau, u = principal_eigenpair(disk_operator)
        values = disk_operator.from_field(u)

        assert np.all(values > 0.0)
        assert float(np.sum(u.values**2 * u.grid.weights)) == pytest.approx(1.0, rel=1e-12)
        assert rayleigh_quotient(disk_operator, u) == pytest.approx(tau, rel=1e-12)

    def test_zero_outside_the_mask(self, two_disks):
        grid, mask = build_grid(two_disks, 0.08)
        op = assemble(grid, mask)

        _, u = principal_eigenpair(op)

        assert np.all(u.values[~mask.inside] == 0.0)

    def test_agrees_with_full_spectrum(self, disk_operator):
        spectrum = eigen_decompose(disk_operator)

        tau, u = principal_eigenpair(disk_operator)
        tau_full, u_full = principal_eigenpair(disk_operator, spectrum)

        assert tau == pytest.approx(tau_full, rel=1e-12)
        np.testing.assert_allclose(u.values, u_full.values, atol=1e-9)

    def test_degenerate_gap_warns(self, caplog):
        op = operator_from_matrix(np.eye(3))

        with caplog.at_level(logging.WARNING, logger="module.spectral.solver"):
            tau, _ = principal_eigenpair(op)

        assert tau == pytest.approx(1.0)
        assert "Degenerate spectral gap" in caplog.text


class TestRayleighQuotient:
    def test_bounded_by_tau(self, disk_operator, rng):
        tau, u = principal_eigenpair(disk_operator)
        f = disk_operator.to_field(rng.uniform(0.0, 1.0, disk_operator.size))

        assert rayleigh_quotient(disk_operator, f) <= tau * (1.0 + 1e-12)
