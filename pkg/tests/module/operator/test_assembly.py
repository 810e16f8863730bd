import numpy as np
import pytest

from module.domain import DomainMask, QuadratureGrid, TooFewNodesError, build_grid
from module.operator import InvalidDumpError, assemble, kernel, load_dump, self_term
from module.spectral import radial_constant_rayleigh


@pytest.fixture
def toy():
    grid = QuadratureGrid(nodes=np.array([0.1, -0.2 + 0.1j]), weights=np.array([0.01, 0.02]), pitch=0.1)
    return grid, DomainMask(grid, np.array([True, True]))


class TestAssemble:
    def test_two_node_matrix_by_hand(self, toy):
        grid, mask = toy

        op = assemble(grid, mask, min_nodes=1)

        off = np.sqrt(0.01) * kernel(0.1, -0.2 + 0.1j) * np.sqrt(0.02)
        assert op.matrix[0, 1] == pytest.approx(off, rel=1e-14)
        assert op.matrix[0, 0] == pytest.approx(0.01 * self_term(0.01), rel=1e-14)
        assert op.matrix[1, 1] == pytest.approx(0.02 * self_term(0.02), rel=1e-14)

    def test_matrix_is_symmetric_and_read_only(self, centered_disk):
        grid, mask = build_grid(centered_disk, 0.08)

        op = assemble(grid, mask)

        assert np.array_equal(op.matrix, op.matrix.T)
        assert np.all(op.matrix > 0.0)
        with pytest.raises(ValueError):
            op.matrix[0, 0] = 1.0

    def test_index_covers_inside_nodes(self, two_disks):
        grid, mask = build_grid(two_disks, 0.08)

        op = assemble(grid, mask)

        assert op.size == mask.count
        np.testing.assert_array_equal(op.nodes, mask.nodes)
        np.testing.assert_allclose(op.sqrt_weights**2, mask.weights)

    def test_field_round_trip(self, centered_disk):
        grid, mask = build_grid(centered_disk, 0.08)
        op = assemble(grid, mask)
        vector = np.linspace(1.0, 2.0, op.size)

        f = op.to_field(vector)

        np.testing.assert_array_equal(op.from_field(f), vector)

    def test_constant_quadratic_form_matches_radial_integral(self, centered_disk):
        grid, mask = build_grid(centered_disk, 0.02)
        op = assemble(grid, mask)
        x = op.sqrt_weights

        ratio = float(x @ op.matrix @ x / (x @ x))

        assert ratio == pytest.approx(radial_constant_rayleigh(0.5, 1024), rel=2e-2)

    def test_too_few_nodes(self, toy):
        grid, mask = toy

        with pytest.raises(TooFewNodesError):
            assemble(grid, mask)

    def test_mask_from_another_grid(self, toy, centered_disk):
        _, mask = build_grid(centered_disk, 0.08)

        with pytest.raises(ValueError):
            assemble(toy[0], mask)


class TestDump:
    def test_dump_and_load(self, toy, tmp_path):
        op = assemble(*toy, min_nodes=1)
        path = str(tmp_path / "b.bin")

        op.dump(path)

        assert (tmp_path / "b.bin").stat().st_size == 8 + 8 * 4
        np.testing.assert_array_equal(load_dump(path), op.matrix)

    def test_truncated_dump(self, toy, tmp_path):
        op = assemble(*toy, min_nodes=1)
        path = tmp_path / "b.bin"
        op.dump(str(path))
        path.write_bytes(path.read_bytes()[:-8])

        with pytest.raises(InvalidDumpError):
            load_dump(str(path))

    def test_empty_dump(self, tmp_path):
        path = tmp_path / "empty.bin"
        path.write_bytes(b"")

        with pytest.raises(InvalidDumpError):
            load_dump(str(path))
