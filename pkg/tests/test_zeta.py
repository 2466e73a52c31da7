from fractions import Fraction

import pytest

from detarcs.grothendieck import L, class_gl
from detarcs.invariants import lct
from detarcs.orbits import MatrixShape
from detarcs.zeta import (
    LinearForm,
    RationalFunction,
    eta_class,
    evaluate_motivic_zeta,
    motivic_zeta_terms,
    psi_exponents,
    series_zeta_oracle,
    specialize_to_topological,
    term_u_valuation,
    topological_zeta,
    zeta_poles,
)


def test_psi():
    assert psi_exponents(2, 1) == [LinearForm(1, 1), LinearForm(2, 4)]
    assert psi_exponents(3, 0) == [LinearForm(0, 1), LinearForm(0, 4), LinearForm(1, 9)]
    assert psi_exponents(1, 0) == [LinearForm(1, 1)]
    assert str(LinearForm(2, 4)) == "4 + 2*s"
    with pytest.raises(ValueError):
        psi_exponents(2, 2)


def test_eta():
    assert eta_class((), 2) == (L - 1) ** 2 * (1 + L) ** 2
    assert eta_class((1,), 2) == class_gl(2)
    assert eta_class((), 1) == L - 1
    with pytest.raises(ValueError):
        eta_class((2,), 2)


def test_terms_shape():
    (t,) = motivic_zeta_terms(1, 0)
    assert t.eta == L - 1 and t.denominators == (LinearForm(1, 1),) and t.prefactor == LinearForm(1, 1)
    t0, t1 = motivic_zeta_terms(2, 1)
    assert len(t0.denominators) == 2 and len(t1.denominators) == 1
    assert len(motivic_zeta_terms(3, 1)) == 4


def test_evaluate():
    assert evaluate_motivic_zeta(motivic_zeta_terms(1, 0), 2, 0) == 2
    assert evaluate_motivic_zeta(motivic_zeta_terms(2, 1), 2, 1) == Fraction(64, 7)
    with pytest.raises(ValueError):
        evaluate_motivic_zeta(motivic_zeta_terms(1, 0), 1, 0)


def test_rank_one_closed_form():
    # the only orbits are (m), m >= 0, of volume (q-1) q^-m, contact order m
    for q in (Fraction(2), Fraction(3), Fraction(5, 2)):
        for s0 in (0, 1, 2):
            want = (q - 1) * q ** (1 + s0) / (q ** (1 + s0) - 1)
            assert evaluate_motivic_zeta(motivic_zeta_terms(1, 0), q, s0) == want


def test_series_oracle():
    value = evaluate_motivic_zeta(motivic_zeta_terms(2, 1), 2, 1)
    lo, hi = series_zeta_oracle(2, 1, 2, 1, 8)
    assert lo <= value <= hi
    lo0, hi0 = series_zeta_oracle(2, 1, 2, 1, 0)
    assert lo0 <= value <= hi0 and hi0 - lo0 > hi - lo
    with pytest.raises(ValueError):
        series_zeta_oracle(2, 1, 1, 1, 3)


def test_series_oracle_tightens():
    widths = [float(b - a) for a, b in (series_zeta_oracle(3, 1, 4, 1, n) for n in (2, 4, 8))]
    assert widths[0] > widths[1] > widths[2]


def test_topological():
    assert str(topological_zeta(1, 0)) == "1/(s+1)"
    assert topological_zeta(2, 1) == RationalFunction((1,), (1, Fraction(3, 2), Fraction(1, 2)))
    z = topological_zeta(3, 1)
    assert z(1) == 1 / ((1 + Fraction(2, 9)) * (1 + Fraction(1, 4)))


def test_poles():
    assert zeta_poles(2, 1) == [-2, -1]
    assert zeta_poles(3, 2) == [-3, -2, -1]
    for r in range(1, 5):
        assert zeta_poles(r, 0) == [-r * r]


def test_nearest_pole_is_minus_lct():
    for r in range(1, 6):
        for k in range(r):
            assert max(zeta_poles(r, k)) == -lct(MatrixShape(r, r), k)


def test_specialization():
    assert specialize_to_topological(motivic_zeta_terms(2, 1), 2) == Fraction(1, 6)
    for r in range(1, 5):
        for k in range(r):
            assert specialize_to_topological(motivic_zeta_terms(r, k), 0) == 1
    assert specialize_to_topological(motivic_zeta_terms(3, 0), 9) == Fraction(1, 2)


def test_only_empty_subset_survives():
    for r in range(1, 5):
        for k in range(r):
            for t in motivic_zeta_terms(r, k):
                assert term_u_valuation(t) == len(t.subset)


def test_rational_function_reduction():
    f = RationalFunction((2, 2), (2, 4, 2))
    assert f.numerator == (1,) and f.denominator == (1, 1)
    assert str(RationalFunction((1, 1), (1,))) == "s+1"
    with pytest.raises(ZeroDivisionError):
        RationalFunction((1,), ())
