import numpy as np
import pytest

from module.domain import DomainSpec, GridMismatchError, ScalarField, build_grid
from module.operator import apply_potential, assemble, energy, energy_direct, kernel
from module.experiments import random_disk_points, random_field


@pytest.fixture
def disk_grid(small_disk):
    return build_grid(small_disk, 0.05)


class TestApplyPotential:
    def test_zero_field(self, disk_grid, rng):
        grid, _ = disk_grid

        values = apply_potential(ScalarField.zeros(grid), random_disk_points(rng, 10))

        assert np.all(values == 0.0)

    def test_linearity(self, disk_grid, rng):
        _, mask = disk_grid
        f = random_field(mask, rng, nonnegative=False)
        g = random_field(mask, rng, nonnegative=False)
        points = random_disk_points(rng, 20)

        combined = apply_potential(2.0 * f + (-3.0) * g, points)

        np.testing.assert_allclose(
            combined, 2.0 * apply_potential(f, points) - 3.0 * apply_potential(g, points), atol=1e-12
        )

    def test_off_grid_point_is_kernel_sum(self, disk_grid, rng):
        grid, mask = disk_grid
        f = random_field(mask, rng)
        z = 0.6 - 0.2j

        expected = np.sum(kernel(z, grid.nodes) * f.values * grid.weights)

        assert apply_potential(f, z) == pytest.approx(expected, rel=1e-12)

    def test_nodes_match_operator_rows(self, disk_grid, rng):
        grid, mask = disk_grid
        op = assemble(grid, mask)
        f = random_field(mask, rng)

        from_matrix = op.matrix @ (op.sqrt_weights * op.from_field(f)) / op.sqrt_weights

        np.testing.assert_allclose(apply_potential(f, op.nodes), from_matrix, rtol=1e-12)

    def test_positive_outside_for_nonnegative_field(self, disk_grid, rng):
        _, mask = disk_grid
        f = random_field(mask, rng)

        assert np.all(apply_potential(f, np.array([0.5, 0.9j, -0.99])) > 0.0)

    def test_scalar_in_scalar_out(self, disk_grid, rng):
        _, mask = disk_grid

        assert isinstance(apply_potential(random_field(mask, rng), 0.5), float)


class TestEnergy:
    def test_symmetric_and_positive(self, disk_grid, rng):
        _, mask = disk_grid
        f = random_field(mask, rng)
        g = random_field(mask, rng)

        assert energy(f, g) == pytest.approx(energy(g, f), rel=1e-13)
        assert energy(f, f) > 0.0

    def test_quadratic_form_of_operator(self, disk_grid, rng):
        grid, mask = disk_grid
        op = assemble(grid, mask)
        f = random_field(mask, rng, nonnegative=False)
        x = op.sqrt_weights * op.from_field(f)

        assert energy(f, f) == pytest.approx(float(x @ op.matrix @ x), rel=1e-12)

    def test_direct_double_sum_agrees(self, rng):
        _, mask = build_grid(DomainSpec.disk(0.2, 0.2), 0.05)
        f = random_field(mask, rng)
        g = random_field(mask, rng)

        assert energy_direct(f, g) == pytest.approx(energy(f, g), rel=1e-12)

    def test_zero_fields(self, disk_grid):
        grid, _ = disk_grid

        assert energy(ScalarField.zeros(grid), ScalarField.zeros(grid)) == 0.0

    def test_grid_mismatch(self, disk_grid, centered_disk):
        grid, _ = disk_grid
        other, _ = build_grid(centered_disk, 0.1)

        with pytest.raises(GridMismatchError):
            energy(ScalarField.zeros(grid), ScalarField.zeros(other))
        with pytest.raises(GridMismatchError):
            energy_direct(ScalarField.zeros(grid), ScalarField.zeros(other))
