import numpy as np
import pytest

from module.domain import (
    DomainMask,
    DomainSpec,
    GridMismatchError,
    ScalarField,
    UnpairedGridError,
    build_grid,
    build_paired_grid,
    l2_norm,
    mask_measure,
    polarize_field,
    polarize_mask,
    reflect_field,
    reflect_mask,
    symmetric_difference_measure,
)


class TestPolarizeMask:
    def test_domain_inside_h_is_fixed(self, vertical_polarizer):
        _, mask = build_paired_grid(DomainSpec.disk(0.4, 0.25), 0.05, vertical_polarizer)

        assert polarize_mask(mask, vertical_polarizer).same_as(mask)

    def test_symmetric_domain_is_fixed(self, vertical_polarizer):
        _, mask = build_paired_grid(DomainSpec.disk(-0.2j, 0.4), 0.05, vertical_polarizer)

        assert polarize_mask(mask, vertical_polarizer).same_as(mask)

    def test_domain_outside_h_moves_to_mirror(self, vertical_polarizer):
        _, mask = build_paired_grid(DomainSpec.disk(-0.4, 0.25), 0.05, vertical_polarizer)

        polarized = polarize_mask(mask, vertical_polarizer)

        assert polarized.same_as(reflect_mask(mask))
        assert symmetric_difference_measure(polarized, reflect_mask(mask)) == 0.0

    def test_preserves_measure_and_is_idempotent(self, two_disks, arc_polarizer):
        _, mask = build_paired_grid(two_disks, 0.05, arc_polarizer)

        once = polarize_mask(mask, arc_polarizer)
        twice = polarize_mask(once, arc_polarizer)

        assert once.count == mask.count
        assert mask_measure(once) == pytest.approx(mask_measure(mask), abs=1e-12)
        assert twice.same_as(once)

    def test_requires_paired_grid(self, centered_disk, vertical_polarizer):
        _, mask = build_grid(centered_disk, 0.05)

        with pytest.raises(UnpairedGridError):
            polarize_mask(mask, vertical_polarizer)

    def test_requires_matching_polarizer(self, two_disks, arc_polarizer, vertical_polarizer):
        _, mask = build_paired_grid(two_disks, 0.05, arc_polarizer)

        with pytest.raises(UnpairedGridError):
            polarize_mask(mask, vertical_polarizer)


class TestPolarizeField:
    def test_preserves_norm(self, two_disks, arc_polarizer, rng):
        grid, mask = build_paired_grid(two_disks, 0.05, arc_polarizer)
        f = ScalarField(grid, np.where(mask.inside, rng.standard_normal(grid.size), 0.0))

        assert l2_norm(polarize_field(f, arc_polarizer)) == pytest.approx(l2_norm(f), rel=1e-12)

    def test_symmetric_field_is_fixed(self, two_disks, arc_polarizer, rng):
        grid, _ = build_paired_grid(two_disks, 0.05, arc_polarizer)
        values = rng.uniform(size=grid.size)
        f = ScalarField(grid, values + values[grid.pairing])

        np.testing.assert_array_equal(polarize_field(f, arc_polarizer).values, f.values)

    def test_support_follows_polarized_domain(self, two_disks, vertical_polarizer, rng):
        grid, mask = build_paired_grid(two_disks, 0.05, vertical_polarizer)
        f = ScalarField(grid, np.where(mask.inside, rng.uniform(0.1, 1.0, grid.size), 0.0))

        pf = polarize_field(f, vertical_polarizer)
        polarized = polarize_mask(mask, vertical_polarizer)

        assert not np.any(pf.values[~polarized.inside])

    def test_reflect_field_uses_pairing(self, two_disks, arc_polarizer, rng):
        grid, _ = build_paired_grid(two_disks, 0.05, arc_polarizer)
        f = ScalarField(grid, rng.standard_normal(grid.size))

        np.testing.assert_array_equal(reflect_field(reflect_field(f)).values, f.values)


class TestSymmetricDifferenceMeasure:
    def test_zero_for_same_mask(self, two_disks, arc_polarizer):
        _, mask = build_paired_grid(two_disks, 0.05, arc_polarizer)

        assert symmetric_difference_measure(mask, mask) == 0.0

    def test_disjoint_masks_add_areas(self, two_disks, vertical_polarizer):
        grid, mask = build_paired_grid(two_disks, 0.05, vertical_polarizer)
        mirrored = reflect_mask(mask)
        assert not np.any(mask.inside & mirrored.inside)

        expected = grid.cell_areas[mask.inside].sum() + grid.cell_areas[mirrored.inside].sum()

        assert symmetric_difference_measure(mask, mirrored) == pytest.approx(expected, rel=1e-12)

    def test_mirror_nodes_count_their_reflected_cell_area(self, two_disks, arc_polarizer):
        grid, mask = build_paired_grid(two_disks, 0.05, arc_polarizer)
        mirror = np.flatnonzero(~grid.h_side)
        lattice = np.flatnonzero(grid.h_side)
        node = mirror[0]
        flipped = mask.inside.copy()
        flipped[node] = not flipped[node]

        measure = symmetric_difference_measure(mask, DomainMask(grid, flipped))

        expected = np.pi * grid.weights[node] * (1.0 - abs(grid.nodes[node]) ** 2) ** 2
        assert measure == pytest.approx(expected, rel=1e-12)
        np.testing.assert_allclose(grid.cell_areas[lattice], 0.05**2, rtol=1e-12)
        assert not np.allclose(grid.cell_areas[mirror], 0.05**2, rtol=1e-6)

    def test_grid_mismatch(self, centered_disk):
        _, a = build_grid(centered_disk, 0.05)
        _, b = build_grid(centered_disk, 0.05)

        with pytest.raises(GridMismatchError):
            symmetric_difference_measure(a, b)
