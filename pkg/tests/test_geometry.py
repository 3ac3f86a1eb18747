"""Parallelism/perpendicularity predicates and paravector angles."""

import math

import pytest
from hypothesis import given

from _strategies import components, paravectors, proper_paravectors
from paravec import (
    ONE,
    Angle,
    ImproperParavector,
    Orientation,
    OrientationMismatch,
    Paravector,
    SingularParavector,
    Tolerance,
    angle,
    approx_eq,
    compose_angles,
    explement,
    is_parallel,
    is_perpendicular,
    is_singularly_parallel,
    is_spatially_parallel,
    parallel_ratio,
    scalar_product,
)

RIGHT, LEFT = Orientation.RIGHT, Orientation.LEFT
TOL8 = Tolerance(1e-8, 1e-8)


class TestParallel:
    def test_scaled_copy_is_parallel(self):
        g = Paravector(2, (1, 0, 0))
        assert is_parallel(g, g * (2 - 1j))
        assert is_parallel(g, g)

    def test_generic_pair_is_not_parallel(self):
        assert not is_parallel(Paravector(2, (1, 0, 0)), Paravector(2, (0, 1, 0)))

    def test_singular_operand_raises(self):
        with pytest.raises(SingularParavector):
            is_parallel(Paravector(1, (1, 0, 0)), ONE)

    def test_ratio_recovery(self):
        g = Paravector(2, (1, 1j, 0))
        lam = 0.5 + 2j
        assert parallel_ratio(g * lam, g) == pytest.approx(lam)

    @given(paravectors(), components, components)
    def test_scalar_multiples_are_parallel_both_ways(self, g, re, im):
        d = g.s * g.s - (g.v[0] ** 2 + g.v[1] ** 2 + g.v[2] ** 2)
        lam = complex(re, im)
        if abs(d) < 0.05 or abs(lam) < 0.1:
            return
        h = g * lam
        assert is_parallel(g, h) and is_parallel(h, g)
        assert approx_eq(h, g * parallel_ratio(h, g), TOL8)


class TestPerpendicular:
    def test_scalar_and_imaginary_vector(self):
        assert is_perpendicular(ONE, Paravector(0, (0, 1j, 0)))

    def test_never_perpendicular_to_itself(self):
        g = Paravector(2, (1, 0, 0))
        assert not is_perpendicular(g, g)

    def test_frozen_real_pair(self):
        assert is_perpendicular(Paravector(2, (1, 0, 0)), Paravector(1, (2, 0, 0)))

    def test_self_perpendicularity_marks_singularity(self):
        g = Paravector(1, (1, 0, 0))
        assert scalar_product(g, g) == 0

    @given(proper_paravectors(), paravectors(), components, components)
    def test_transports_along_parallelism(self, a, raw, re, im):
        da = a.det()
        k = scalar_product(a, raw) / da
        b = raw - a * k
        mu = complex(re, im)
        if abs(b.det()) < 0.05 or abs(mu) < 0.1:
            return
        assert is_perpendicular(a, b, TOL8)
        assert is_perpendicular(b, a, TOL8)
        assert is_perpendicular(a, b * mu, TOL8)


class TestSpatialParallel:
    def test_collinear_vector_parts(self):
        a = Paravector(5, (1, 2, 3))
        b = Paravector(-1j, (2, 4, 6))
        assert is_spatially_parallel(a, b)

    def test_parallel_implies_spatially_parallel(self):
        g = Paravector(2, (1, 0, 0))
        assert is_spatially_parallel(g, g * (1 + 3j))

    def test_independent_vector_parts(self):
        assert not is_spatially_parallel(Paravector(1, (1, 0, 0)), Paravector(1, (0, 1, 0)))

    def test_spatially_parallel_without_parallel(self):
        # same vector direction but incompatible scalars
        a = Paravector(2, (1, 0, 0))
        b = Paravector(3, (2, 0, 0))
        assert is_spatially_parallel(a, b)
        assert not is_parallel(a, b)


class TestSingularParallel:
    def test_singular_with_itself(self):
        g = Paravector(1, (1, 0, 0))
        assert is_singularly_parallel(g, g)

    def test_different_null_directions(self):
        assert not is_singularly_parallel(
            Paravector(1, (1, 0, 0)), Paravector(1, (0, 1, 0))
        )

    def test_verdict_forces_both_singular(self):
        from paravec import classify

        g = Paravector(1, (1, 0, 0))
        h = g * (2 + 1j)
        assert is_singularly_parallel(g, h)
        assert classify(g).is_singular and classify(h).is_singular


class TestAngle:
    def test_zero_angle(self):
        g = Paravector(2, (1, 0, 0))
        assert approx_eq(angle(g, g, RIGHT).value, ONE)

    def test_imaginary_unit_vectors_give_a_quarter_turn(self):
        a = Paravector(0, (1j, 0, 0))
        b = Paravector(0, (0, 1j, 0))
        got = angle(a, b, RIGHT)
        assert approx_eq(got.value, Paravector(0, (0, 0, 1j)))

    def test_cosinis_of_a_real_pair(self):
        a = Paravector(2, (1, 0, 0))
        b = Paravector(2, (0, 1, 0))
        got = angle(a, b, RIGHT)
        assert got.cosinis == pytest.approx(4 / 3)
        assert got.value.det() == pytest.approx(1 + 0j)

    def test_improper_operand_raises(self):
        with pytest.raises(ImproperParavector):
            angle(Paravector(1, (1, 0, 0)), ONE, RIGHT)
        with pytest.raises(ImproperParavector):
            angle(Paravector(1, (2, 0, 0)), ONE, RIGHT)

    def test_angle_value_must_have_unit_determinant(self):
        from paravec import InvariantViolation

        with pytest.raises(InvariantViolation):
            Angle(Paravector(2, (0, 0, 0)), RIGHT)

    @given(proper_paravectors(), proper_paravectors())
    def test_determinant_one_for_both_orientations(self, a, b):
        for o in (RIGHT, LEFT):
            d = angle(a, b, o).value.det()
            assert abs(d - 1.0) <= 1e-7 * max(1.0, abs(d))


class TestAngleComposition:
    def test_identity_composes_neutrally(self):
        a = Paravector(2, (1, 0, 0))
        b = Paravector(2, (0, 1, 0))
        f = angle(a, b, LEFT)
        assert approx_eq(compose_angles(f, Angle.identity(LEFT)).value, f.value)

    def test_two_quarter_turns_make_a_half_turn(self):
        quarter = Angle(
            Paravector(math.cos(math.pi / 4), (0, 0, 1j * math.sin(math.pi / 4))),
            LEFT,
        )
        got = compose_angles(quarter, quarter)
        assert approx_eq(got.value, Paravector(0, (0, 0, 1j)))

    def test_mixed_orientations_refuse_to_compose(self):
        f = Angle.identity(LEFT)
        g = Angle.identity(RIGHT)
        with pytest.raises(OrientationMismatch):
            compose_angles(f, g)

    @given(proper_paravectors(), proper_paravectors())
    def test_doubling_rows(self, a, b):
        f = angle(a, b, LEFT)
        doubled = compose_angles(f, f)
        cosi = f.cosinis * f.cosinis + sum(z * z for z in f.sinis)
        scale = max(1.0, abs(doubled.cosinis), abs(cosi))
        assert abs(doubled.cosinis - cosi) <= 1e-7 * scale
        for k in range(3):
            want = 2 * f.cosinis * f.sinis[k]
            assert abs(doubled.sinis[k] - want) <= 1e-7 * max(1.0, abs(want))


class TestExplement:
    def test_swaps_the_arguments(self):
        a = Paravector(2, (1, 1j, 0))
        b = Paravector(3, (0, 1, 1j))
        assert approx_eq(
            explement(angle(a, b, LEFT)).value, angle(b, a, LEFT).value, TOL8
        )

    def test_identity_is_its_own_explement(self):
        assert explement(Angle.identity(LEFT)).value == ONE

    def test_involution(self):
        a = Paravector(2, (1, 0, 0))
        b = Paravector(2, (0, 1, 0))
        f = angle(a, b, RIGHT)
        assert approx_eq(explement(explement(f)).value, f.value)

    def test_keeps_cosinis_and_negates_the_vector(self):
        a = Paravector(2, (1, 0, 0))
        b = Paravector(2, (0, 1, 1j))
        f = angle(a, b, LEFT)
        e = explement(f)
        assert e.cosinis == f.cosinis
        assert e.sinis == tuple(-z for z in f.sinis)


def test_left_and_right_angles_are_not_explementary():
    # composing the left and the right angle of the same pair does not
    # give the identity; one concrete witness is enough
    a = Paravector(2, (1, 0, 0))
    b = Paravector(2, (0, 1, 0))
    left = angle(a, b, LEFT)
    right = angle(a, b, RIGHT)
    product = left.value * right.value
    assert not approx_eq(product, ONE)
    assert product.s == pytest.approx(7 / 9)


class TestDeterminantMetricLaws:
    @given(paravectors(), paravectors())
    def test_polarization_identity(self, a, b):
        lhs = (a + b).det()
        rhs = a.det() + 2 * scalar_product(a, b) + b.det()
        assert abs(lhs - rhs) <= 1e-8 * max(1.0, abs(lhs), abs(rhs))

    @given(paravectors(), paravectors())
    def test_parallelogram_law(self, a, b):
        lhs = (a + b).det() + (a - b).det()
        rhs = 2 * a.det() + 2 * b.det()
        assert abs(lhs - rhs) <= 1e-8 * max(1.0, abs(lhs), abs(rhs))

    @given(proper_paravectors(), paravectors())
    def test_pythagorean_for_perpendicular_pairs(self, a, raw):
        k = scalar_product(a, raw) / a.det()
        b = raw - a * k
        lhs = (a + b).det()
        rhs = a.det() + b.det()
        assert abs(lhs - rhs) <= 1e-7 * max(1.0, abs(lhs), abs(rhs))


class TestAngleCharacter:
    def test_trigonometric_pair(self):
        w1, w2 = (1.0, 0.5, -0.25), (0.0, 2.0, 1.0)
        a = Paravector(0, tuple(1j * x for x in w1))
        b = Paravector(0, tuple(1j * x for x in w2))
        f = angle(a, b, RIGHT)
        assert f.cosinis.imag == pytest.approx(0.0, abs=1e-12)
        assert all(z.real == pytest.approx(0.0, abs=1e-12) for z in f.dextis)
        m2 = sum(z.imag ** 2 for z in f.dextis)
        assert f.cosinis.real ** 2 + m2 == pytest.approx(1.0)

    def test_hyperbolic_pair(self):
        n = (0.6, 0.8, 0.0)
        a = Paravector(1.5 * math.cosh(0.7), tuple(1.5 * x for x in n))
        b = Paravector(-0.5 * math.cosh(1.1), tuple(0.5 * x for x in n))
        f = angle(a, b, RIGHT)
        assert f.cosinis.imag == pytest.approx(0.0, abs=1e-12)
        assert all(z.imag == pytest.approx(0.0, abs=1e-12) for z in f.dextis)
        d2 = sum(z.real ** 2 for z in f.dextis)
        assert f.cosinis.real ** 2 - d2 == pytest.approx(1.0)
