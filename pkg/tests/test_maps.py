import cmath
import math

import pytest

from jmetric.domains import (
    Disk,
    UnitDisk,
    UpperHalfPlane,
    contains,
    signed_boundary_offset,
)
from jmetric.errors import DomainError, PoleEncountered, UnsupportedImage
from jmetric.maps import (
    Blaschke,
    Compose,
    Extremal,
    Mobius,
    apply,
    compose_maps,
    derivative,
    image_modulus_bound,
    is_self_map_sampled,
    maps_into_sampled,
    mobius_compose,
    mobius_image_domain,
    mobius_inverse,
)
from jmetric.sampling import Uniforms, sample_interior, substream
from jmetric.verify import random_blaschke, random_halfplane_map, random_halfplane_mobius

IDENTITY = Mobius(1, 0, 0, 1)
CAYLEY = Mobius(1, -1j, 1, 1j)
D = UnitDisk()
H = UpperHalfPlane()


class TestApply:
    def test_extremal_at_i(self):
        # a = b = 0 gives z -> -1/z, and -1/i = i
        assert abs(apply(Extremal(0, 0), 1j) - 1j) < 1e-15

    def test_identity(self):
        for z in (0.3 + 0.4j, -2 + 5j, 1j):
            assert apply(IDENTITY, z) == z

    def test_blaschke_zero(self):
        assert apply(Blaschke(0.0, (0.5,)), 0.5 + 0j) == 0j

    def test_empty_blaschke_is_rotation_constant(self):
        m = Blaschke(0.7, ())
        assert abs(apply(m, 0.3 + 0.1j) - cmath.exp(0.7j)) < 1e-15

    def test_poles(self):
        with pytest.raises(PoleEncountered):
            apply(Extremal(1.0, 2.0), -2.0 + 0j)
        with pytest.raises(PoleEncountered):
            apply(Mobius(1, 0, 1, -1), 1.0 + 0j)


class TestDerivative:
    def test_identity(self):
        assert derivative(IDENTITY, 3 - 2j) == 1.0 + 0j

    def test_extremal_hand_value(self):
        # derivative is 1/(b+z)^2; at z = i - b that is 1/i^2 = -1
        b = 1.7
        assert abs(derivative(Extremal(0.3, b), 1j - b) - (-1.0)) < 1e-12

    def test_blaschke_single_zero_at_origin(self):
        assert abs(derivative(Blaschke(0.0, (0j,)), 0j) - 1.0) < 1e-15

    def test_matches_central_differences(self):
        u = Uniforms(substream(2024, 0))
        step = 1e-6
        for _ in range(1000):
            pick = u.next()
            if pick < 0.4:
                m, domain = random_blaschke(u), D
            elif pick < 0.8:
                m, domain = random_halfplane_map(u), H
            else:
                m, domain = Compose(random_blaschke(u, 2), random_blaschke(u, 2)), D
            z = sample_interior(domain, u, margin=1e-2)
            got = derivative(m, z)
            fd = (apply(m, z + step) - apply(m, z - step)) / (2.0 * step)
            assert abs(got - fd) <= 1e-6 * max(1.0, abs(got))


class TestMobiusAlgebra:
    def sample_points(self, count=100, seed=3):
        u = Uniforms(substream(seed, 0))
        return [complex(u.uniform(-2, 2), u.uniform(0.1, 2)) for _ in range(count)]

    def test_compose_matches_pointwise(self):
        u = Uniforms(substream(11, 0))
        pts = self.sample_points()
        for _ in range(200):
            m1 = random_halfplane_mobius(u)
            m2 = random_halfplane_mobius(u)
            m = mobius_compose(m1, m2)
            for z in pts[:10]:
                assert abs(apply(m, z) - apply(m1, apply(m2, z))) < 1e-12

    def test_translation_inverse(self):
        shift = Mobius(1, 1, 0, 1)
        inv = mobius_inverse(shift)
        assert (inv.a, inv.b, inv.c, inv.d) == (1 + 0j, -1 + 0j, 0j, 1 + 0j)

    def test_inversion_squares_to_identity_action(self):
        flip = Mobius(0, -1, 1, 0)
        twice = mobius_compose(flip, flip)
        for z in self.sample_points(25):
            assert abs(apply(twice, z) - z) < 1e-12

    def test_cayley_inverse_coefficients(self):
        inv = mobius_inverse(CAYLEY)
        assert (inv.a, inv.b, inv.c, inv.d) == (1j, 1j, -1 + 0j, 1 + 0j)

    def test_inverse_round_trip(self):
        u = Uniforms(substream(17, 0))
        pts = self.sample_points()
        for _ in range(100):
            m = random_halfplane_mobius(u)
            back = mobius_compose(m, mobius_inverse(m))
            for z in pts[:10]:
                assert abs(apply(back, z) - z) < 1e-12

    def test_associativity_pointwise(self):
        u = Uniforms(substream(23, 0))
        pts = self.sample_points(10)
        for _ in range(1000):
            m1, m2, m3 = (random_halfplane_mobius(u) for _ in range(3))
            left = mobius_compose(mobius_compose(m1, m2), m3)
            right = mobius_compose(m1, mobius_compose(m2, m3))
            for z in pts[:3]:
                assert abs(apply(left, z) - apply(right, z)) < 1e-12

    def test_degenerate_rejected(self):
        with pytest.raises(DomainError):
            Mobius(1, 2, 2, 4)

    def test_compose_maps_collapses_mobius_chains(self):
        u = Uniforms(substream(53, 0))
        m1, m2 = random_halfplane_mobius(u), random_halfplane_mobius(u)
        collapsed = compose_maps(m1, m2)
        assert isinstance(collapsed, Mobius)
        for z in self.sample_points(10):
            assert abs(apply(collapsed, z) - apply(m1, apply(m2, z))) < 1e-12
        mixed = compose_maps(Extremal(1, 1), m2)
        assert isinstance(mixed, Compose)


def test_halfplane_mobius_height_identity():
    u = Uniforms(substream(31, 0))
    for _ in range(500):
        m = random_halfplane_mobius(u)
        det = (m.a * m.d - m.b * m.c).real
        z = complex(u.uniform(-50, 50), u.uniform(1e-3, 50))
        expected = det * z.imag / abs(m.c * z + m.d) ** 2
        got = apply(m, z).imag
        assert abs(got - expected) <= 1e-12 * max(abs(expected), 1e-30)
        assert got > 0.0


def test_extremal_height_identity():
    u = Uniforms(substream(37, 0))
    for _ in range(500):
        m = Extremal(u.uniform(-3, 3), u.uniform(-3, 3))
        z = complex(u.uniform(-50, 50), u.uniform(1e-3, 50))
        lhs = apply(m, z).imag * abs(m.b + z) ** 2
        assert abs(lhs - z.imag) <= 1e-12 * z.imag


def test_blaschke_is_strict_disk_self_map():
    u = Uniforms(substream(41, 0))
    for _ in range(10_000):
        m = random_blaschke(u)
        z = sample_interior(D, u, margin=1e-3)
        assert abs(apply(m, z)) < 1.0


class TestImageDomain:
    def test_cayley_sends_halfplane_to_unit_disk(self):
        assert mobius_image_domain(CAYLEY, H) == UnitDisk()

    def test_identity_fixes_unit_disk(self):
        assert mobius_image_domain(IDENTITY, D) == UnitDisk()

    def test_doubling_scales_disk(self):
        assert mobius_image_domain(Mobius(2, 0, 0, 1), D) == Disk(0j, 2.0)

    def test_inverse_cayley_sends_disk_to_halfplane(self):
        inv = mobius_inverse(CAYLEY)
        assert mobius_image_domain(inv, D) == UpperHalfPlane()

    def test_real_mobius_fixes_halfplane(self):
        assert mobius_image_domain(Mobius(2, 1, 1, 1), H) == UpperHalfPlane()

    def test_pole_inside_source_rejected(self):
        # pole at 0 sits inside the unit disk: image is a circle exterior
        with pytest.raises(UnsupportedImage):
            mobius_image_domain(Mobius(0, 1, 1, 0), D)

    def test_near_tangent_pole_ambiguous(self):
        m = Mobius(1, 0, 1, 1 + 1e-13)  # pole at -(1 + 1e-13), almost on the circle
        with pytest.raises(UnsupportedImage):
            mobius_image_domain(m, D)

    def test_sampled_consistency(self):
        u = Uniforms(substream(47, 0))
        from jmetric.verify import _random_image_source_and_mobius

        for _ in range(20):
            src, m = _random_image_source_and_mobius(u)
            image = mobius_image_domain(m, src)
            for _ in range(50):
                z = sample_interior(src, u, margin=1e-3)
                assert contains(image, apply(m, z))
        # boundary points land within 1e-9 of the image boundary
        src = Disk(0.5 + 0.25j, 1.5)
        m = Mobius(1, 2j, 1, 3 + 1j)  # pole at -3-1j, well outside src
        image = mobius_image_domain(m, src)
        for k in range(100):
            theta = 2.0 * math.pi * k / 100.0
            p = src.center + src.radius * cmath.exp(1j * theta)
            assert abs(signed_boundary_offset(image, apply(m, p))) <= 1e-9

    def test_tilted_halfplane_source(self):
        from jmetric.domains import HalfPlane, halfplane_frame

        normal = complex(math.cos(2.2), math.sin(2.2))
        src = HalfPlane(normal, 0.75)
        m = Mobius(1 + 0.5j, 2, 1, 5 + 5j)  # pole at -5-5j, outside the half-plane
        image = mobius_image_domain(m, src)
        assert isinstance(image, Disk)
        u = Uniforms(substream(59, 0))
        for _ in range(200):
            z = sample_interior(src, u, margin=1e-3, span=5.0)
            assert contains(image, apply(m, z))
        base, tangent, _ = halfplane_frame(src)
        for k in range(-50, 51):
            p = base + 0.2 * k * tangent
            assert abs(signed_boundary_offset(image, apply(m, p))) <= 1e-9

    def test_affine_tilted_halfplane(self):
        from jmetric.domains import HalfPlane

        normal = complex(math.cos(0.5), math.sin(0.5))
        src = HalfPlane(normal, -0.5)
        m = Mobius(2j, 1 - 1j, 0, 1)  # affine rotation-scale plus shift
        image = mobius_image_domain(m, src)
        assert isinstance(image, HalfPlane)
        u = Uniforms(substream(60, 0))
        for _ in range(200):
            z = sample_interior(src, u, margin=1e-3, span=5.0)
            assert contains(image, apply(m, z))


class TestSelfMapSampling:
    def test_extremal_preserves_halfplane(self):
        assert is_self_map_sampled(Extremal(1.3, -0.7), H, 1000, 42)
        assert is_self_map_sampled(Extremal(0.0, 0.0), H, 1000, 42)

    def test_blaschke_preserves_disk(self):
        assert is_self_map_sampled(Blaschke(0.3, (0.5, -0.2 + 0.1j)), D, 1000, 42)

    def test_translation_leaves_disk(self):
        assert not is_self_map_sampled(Mobius(1, 1j, 0, 1), D, 1000, 42)

    def test_cayley_into_disk(self):
        assert maps_into_sampled(CAYLEY, H, D, 1000, 42)


class TestImageModulusBound:
    def test_hand_value(self):
        assert abs(image_modulus_bound(0.5, 0.5) - 0.8) < 1e-15

    def test_zero_center_value(self):
        assert image_modulus_bound(0.0, 0.37) == 0.37

    def test_at_origin(self):
        assert image_modulus_bound(0.42, 0.0) == 0.42

    def test_range_checked(self):
        with pytest.raises(DomainError):
            image_modulus_bound(1.0, 0.5)
        with pytest.raises(DomainError):
            image_modulus_bound(0.5, -0.1)


def test_blaschke_zero_bound_enforced():
    Blaschke(0.0, (complex(1.0 - 1e-12, 0.0),))  # boundary of the allowed set
    with pytest.raises(DomainError):
        Blaschke(0.0, (complex(1.0 - 1e-13, 0.0),))


def test_compose_requires_map_expressions():
    with pytest.raises(TypeError):
        Compose(IDENTITY, "not a map")


def test_certification_needs_samples():
    with pytest.raises(DomainError):
        is_self_map_sampled(IDENTITY, D, 0, 1)


def test_nan_never_reaches_a_map():
    nan = complex(float("nan"), 1.0)
    with pytest.raises(DomainError):
        Mobius(nan, 0, 0, 1)
    with pytest.raises(DomainError):
        Extremal(float("inf"), 0.0)
    with pytest.raises(DomainError):
        Blaschke(float("nan"), ())
