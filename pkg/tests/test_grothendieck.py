from fractions import Fraction
from math import comb, factorial, prod

import pytest

from detarcs.grothendieck import (
    ONE,
    L,
    LaurentPoly,
    ParabolicData,
    class_flag_quotient,
    class_gl,
    class_grassmannian,
    class_levi,
    expand_at_one,
    jet_orbit_class,
    orbit_volume,
    parabolic_data,
)
from detarcs.partitions import PrePartition


class TestLaurentPoly:
    def test_arithmetic(self):
        f = L - 1
        assert f * f == L**2 - 2 * L + 1
        assert (f + 1) == L
        assert 1 - L == -f
        assert L**-2 == LaurentPoly.monomial(-2)
        assert (L**3).shift(-1) == L**2
        assert ONE.is_zero() is False and (f - f).is_zero()

    def test_division(self):
        g = (L**2 + L + 1) * (L - 1)
        assert g.exact_div(L - 1) == L**2 + L + 1
        assert (g.shift(-3)).exact_div(L - 1) == (L**2 + L + 1).shift(-3)
        with pytest.raises(ArithmeticError):
            (L**2 + 1).exact_div(L - 1)
        with pytest.raises(ZeroDivisionError):
            L.exact_div(LaurentPoly())

    def test_evaluation_and_printing(self):
        f = L**2 - 2 * L + LaurentPoly.monomial(-1)
        assert f(2) == Fraction(1, 2)
        assert str(f) == "L^2 - 2*L + L^-1"
        assert str(LaurentPoly()) == "0"
        assert (L**2 + 3).coefficients() == [3, 0, 1]
        assert f.degree == 2 and f.low_degree == -1

    def test_non_unit_inverse(self):
        with pytest.raises(ValueError):
            (2 * L) ** -1


class TestClasses:
    def test_gl(self):
        assert class_gl(1) == L - 1
        assert class_gl(2) == (L**2 - 1) * (L**2 - L)
        assert class_gl(2)(2) == 6
        assert class_gl(0) == ONE

    def test_gl_counts(self):
        for d in range(5):
            for q in (2, 3):
                assert class_gl(d)(q) == prod(q**d - q**i for i in range(d))

    def test_grassmannian(self):
        assert class_grassmannian(1, 2) == 1 + L
        assert class_grassmannian(0, 5) == ONE
        assert class_grassmannian(1, 3)(2) == 7
        with pytest.raises(ValueError):
            class_grassmannian(3, 2)

    def test_grassmannian_duality_and_euler_characteristic(self):
        for v in range(9):
            for u in range(v + 1):
                g = class_grassmannian(u, v)
                assert g == class_grassmannian(v - u, v)
                assert g(1) == comb(v, u)

    def test_parabolic_data(self):
        pd = parabolic_data(PrePartition.of((4, 4, 4, 1, 1), 6))
        assert pd.signature == (3, 5, 6) and pd.blocks == (3, 2, 1)
        pd = parabolic_data(PrePartition.of((), 4))
        assert pd.signature == (4,) and pd.blocks == (4,)
        assert parabolic_data(PrePartition((2, 1, 0))).blocks == (1, 1, 1)
        with pytest.raises(ValueError):
            ParabolicData((2, 2))

    def test_flag_and_levi(self):
        assert class_flag_quotient(ParabolicData((1, 2))) == 1 + L
        assert class_flag_quotient(ParabolicData((3,))) == ONE
        assert class_flag_quotient(ParabolicData((1, 2, 3)))(2) == 21
        assert class_levi(ParabolicData((1, 2))) == (L - 1) ** 2
        assert class_levi(ParabolicData((2,))) == (L**2 - 1) * (L**2 - L)
        assert class_levi(ParabolicData((2, 3)))(2) == 6

    def test_flag_quotient_is_gl_over_parabolic(self):
        # |GL_r / P| over F_q equals |GL_r| / (|Levi| q^dim(unipotent))
        for sig in [(1, 2), (1, 3), (2, 3), (1, 2, 3), (2, 4), (1, 3, 4)]:
            pd = ParabolicData(sig)
            r = pd.r
            unip = (r * r - sum(d * d for d in pd.blocks)) // 2
            for q in (2, 3):
                assert class_flag_quotient(pd)(q) * class_levi(pd)(q) * q**unip == class_gl(r)(q)

    def test_flag_at_one_is_multinomial(self):
        for r in range(1, 5):
            full = PrePartition(tuple(range(r, 0, -1)))
            assert expand_at_one(class_flag_quotient(parabolic_data(full)), 1) == [factorial(r)]


class TestVolumes:
    def test_dense_orbit(self):
        for r in range(1, 4):
            v = orbit_volume(PrePartition.of((), r))
            assert v.b == 0 and v.cls == class_gl(r)

    def test_rank_one(self):
        for m in range(4):
            v = orbit_volume(PrePartition((m,)))
            assert v.b == m and v.cls == L - 1
            assert v.volume == (L - 1).shift(-m)

    def test_small_square(self):
        v = orbit_volume(PrePartition((1, 0)))
        assert v.b == 1 and v.cls == (1 + L) ** 2 * (L - 1) ** 2
        assert v.evaluate(2) == Fraction(9, 2)

    def test_thin_orbit_rejected(self):
        from detarcs.partitions import INF

        with pytest.raises(ValueError):
            orbit_volume(PrePartition((INF, 0)))

    def test_jet_classes(self):
        assert jet_orbit_class(PrePartition((1,)), 1, 1) == L - 1
        # over F_2 only b*t with b = 1 has order exactly one
        assert jet_orbit_class(PrePartition((1,)), 1, 1)(2) == 1
        assert jet_orbit_class(PrePartition((0,)), 1, 0) == L - 1
        assert jet_orbit_class(PrePartition((1, 0)), 2, 1)(2) == 72
        with pytest.raises(ValueError):
            jet_orbit_class(PrePartition((2, 0)), 2, 1)

    def test_volumes_sum_to_one(self):
        # total measure of the arc space of 1x1 matrices at q = 2
        total = sum(orbit_volume(PrePartition((m,))).evaluate(2) for m in range(60))
        assert abs(total - 2) < Fraction(1, 2**50)


class TestExpandAtOne:
    def test_examples(self):
        assert expand_at_one(L - 1, 3) == [0, 1, 0]
        assert expand_at_one(1 + L + L**2, 1) == [3]
        c = expand_at_one(class_gl(2), 4)
        assert c[:2] == [0, 0] and c[2] == 2

    def test_negative_exponents(self):
        # L^-1 = 1 - u + u^2 - ...
        assert expand_at_one(LaurentPoly.monomial(-1), 4) == [1, -1, 1, -1]

    def test_bad_order(self):
        with pytest.raises(ValueError):
            expand_at_one(L, 0)
