import math

import numpy as np
import pytest

from module.hypgeo import (
    Geodesic,
    InvalidGeodesicError,
    Side,
    geodesic_side,
    geodesic_through_points,
    orthogonal_geodesic,
    pseudo_distance,
    reflect,
    reflection_jacobian,
    side_signs,
)
from module.experiments import random_disk_points

GEODESICS = [
    Geodesic.diameter(0.0),
    Geodesic.diameter(math.pi / 2),
    Geodesic.diameter(2.3),
    Geodesic.arc(0.0, 0.5),
    Geodesic.arc(1.1, 0.2),
    Geodesic.arc(4.5, 0.85),
]


def fd_jacobian(g: Geodesic, z: complex, h: float = 1e-5) -> float:
    dx = (reflect(g, z + h) - reflect(g, z - h)) / (2 * h)
    dy = (reflect(g, z + 1j * h) - reflect(g, z - 1j * h)) / (2 * h)
    return abs(dx.real * dy.imag - dx.imag * dy.real)


class TestGeodesicSide:
    @pytest.mark.parametrize(
        "g, z, expected",
        [
            (Geodesic.arc(0.0, 0.5), 0.0, Side.NEGATIVE),
            (Geodesic.arc(0.0, 0.5), 0.5, Side.ON),
            (Geodesic.arc(0.0, 0.5), 0.9, Side.POSITIVE),
            (Geodesic.diameter(math.pi / 2), 0.3, Side.POSITIVE),
            (Geodesic.diameter(math.pi / 2), -0.3, Side.NEGATIVE),
            (Geodesic.diameter(math.pi / 2), 0.4j, Side.ON),
        ],
    )
    def test_examples(self, g, z, expected):
        assert geodesic_side(g, z) == expected

    def test_signs_are_vectorized(self):
        signs = side_signs(Geodesic.diameter(math.pi / 2), np.array([0.3, -0.3, 0.2j]))

        assert signs.tolist() == [1, -1, 0]
        assert signs.dtype == np.int8


class TestReflect:
    def test_diameter_examples(self):
        assert reflect(Geodesic.diameter(math.pi / 2), 0.3 + 0.2j) == pytest.approx(
            -0.3 + 0.2j, abs=1e-15
        )
        theta = 0.4
        z = 0.1 + 0.5j
        assert reflect(Geodesic.diameter(theta), z) == pytest.approx(
            np.exp(2j * theta) * np.conj(z), abs=1e-15
        )

    def test_fixes_arc_intercept(self):
        assert reflect(Geodesic.arc(0.0, 0.5), 0.5) == pytest.approx(0.5, abs=1e-15)

    @pytest.mark.parametrize("g", GEODESICS)
    def test_involution(self, g, rng):
        z = random_disk_points(rng, 500)

        np.testing.assert_allclose(reflect(g, reflect(g, z)), z, atol=1e-12)

    @pytest.mark.parametrize("g", GEODESICS)
    def test_fixes_geodesic(self, g):
        points = g.sample(50, margin=1e-2)

        np.testing.assert_allclose(reflect(g, points), points, atol=1e-12)

    @pytest.mark.parametrize("g", GEODESICS)
    def test_swaps_sides(self, g, rng):
        z = random_disk_points(rng, 300)
        signs = side_signs(g, z)
        off = signs != 0

        assert np.all(side_signs(g, reflect(g, z))[off] == -signs[off])

    @pytest.mark.parametrize("g", GEODESICS)
    def test_isometry_and_cross_reflection(self, g, rng):
        z = random_disk_points(rng, 300)
        w = random_disk_points(rng, 300)
        sz, sw = reflect(g, z), reflect(g, w)

        np.testing.assert_allclose(pseudo_distance(sz, sw), pseudo_distance(z, w), atol=1e-12)
        np.testing.assert_allclose(pseudo_distance(z, sw), pseudo_distance(sz, w), atol=1e-12)

    @pytest.mark.parametrize("g", GEODESICS)
    def test_same_side_points_are_closer_than_mirror(self, g, rng):
        z = random_disk_points(rng, 400)
        w = random_disk_points(rng, 400)
        signs_z, signs_w = side_signs(g, z), side_signs(g, w)
        same = (signs_z == signs_w) & (signs_z != 0)

        gap = pseudo_distance(z[same], reflect(g, w[same])) - pseudo_distance(z[same], w[same])

        assert same.any()
        assert np.all(gap > 0.0)


class TestReflectionJacobian:
    def test_one_for_diameters(self, rng):
        z = random_disk_points(rng, 50)

        np.testing.assert_allclose(reflection_jacobian(Geodesic.diameter(1.0), z), 1.0, atol=1e-12)

    @pytest.mark.parametrize("g", GEODESICS)
    def test_one_on_geodesic(self, g):
        np.testing.assert_allclose(reflection_jacobian(g, g.sample(20, margin=0.05)), 1.0, atol=1e-10)

    def test_example_matches_finite_differences(self):
        g = Geodesic.arc(0.0, 0.5)

        assert reflection_jacobian(g, 0.2) == pytest.approx(fd_jacobian(g, 0.2), abs=1e-6)

    @pytest.mark.parametrize("g", GEODESICS[3:])
    def test_matches_finite_differences(self, g, rng):
        for z in random_disk_points(rng, 100, 0.8):
            assert reflection_jacobian(g, z) == pytest.approx(fd_jacobian(g, z), rel=1e-6)


class TestGeodesicThroughPoints:
    @pytest.mark.parametrize("g", GEODESICS)
    def test_recovers_canonical_form(self, g):
        p1, p2, p3 = g.sample(3, margin=0.2)
        h = geodesic_through_points(p1, p2, p3)

        assert h.kind == g.kind
        assert h.theta == pytest.approx(g.theta, abs=1e-9)
        if g.a is not None:
            assert h.a == pytest.approx(g.a, abs=1e-9)

    def test_rejects_non_geodesic_circle(self):
        with pytest.raises(InvalidGeodesicError):
            geodesic_through_points(0.1, 0.1j, -0.1)


class TestOrthogonalGeodesic:
    @pytest.mark.parametrize("g", GEODESICS)
    def test_reflection_preserves_orthogonal_geodesic(self, g):
        p = g.sample(5, margin=0.1)[1]
        h = orthogonal_geodesic(g, p)
        points = h.sample(40, margin=1e-2)

        images = reflect(g, points)

        assert all(geodesic_side(h, w, tol=1e-10) == Side.ON for w in images)

    @pytest.mark.parametrize("g", GEODESICS)
    def test_points_on_geodesic_equidistant_from_mirror_pair(self, g, rng):
        p = g.sample(5, margin=0.1)[3]
        h = orthogonal_geodesic(g, p)
        z = random_disk_points(rng, 50)

        for w in h.sample(10, margin=0.05):
            np.testing.assert_allclose(
                pseudo_distance(reflect(h, z), w), pseudo_distance(z, w), atol=1e-12
            )

    def test_rejects_point_off_geodesic(self):
        with pytest.raises(InvalidGeodesicError):
            orthogonal_geodesic(Geodesic.arc(0.0, 0.5), 0.0)
