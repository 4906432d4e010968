"""Exact multiplier values, branch selection, and the decomposition path."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from theta_kernel.multiplier import (
    GVariant,
    MultiplierBranch,
    ResidueClass,
    Root24,
    branch_of,
    decomposition_factors,
    f_value,
    g_value,
    membership,
    nu_eta,
    nu_F,
    nu_G,
    nu_power,
    nu_via_decomposition,
)
from theta_kernel.sl2z import IDENTITY, S, T, Mat2, random_subgroup_element

NEG_I = Mat2(-1, 0, 0, -1)


# -- Root24 ------------------------------------------------------------------

def test_root24_validation_and_labels():
    assert Root24(0).label() == "1"
    assert Root24(6).label() == "i"
    assert Root24(12).label() == "-1"
    assert Root24(18).label() == "-i"
    assert Root24(5).label() == "exp(2*pi*i*5/24)"
    with pytest.raises(ValueError):
        Root24(24)
    with pytest.raises(ValueError):
        Root24(-1)


def test_root24_from_twelfth():
    assert Root24.from_twelfth(1).exponent == 1
    assert Root24.from_twelfth(-3).exponent == 21
    assert Root24.from_twelfth(0, -1).exponent == 12
    with pytest.raises(ValueError):
        Root24.from_twelfth(0, 0)


@settings(max_examples=200)
@given(st.integers(0, 23), st.integers(0, 23))
def test_root24_multiplication_matches_complex(k1, k2):
    lhs = (Root24(k1) * Root24(k2)).value()
    rhs = Root24(k1).value() * Root24(k2).value()
    assert abs(lhs - rhs) < 1e-12


@settings(max_examples=100)
@given(st.integers(0, 23))
def test_root24_inverse(k):
    assert Root24(k) * Root24(k).inverse() == Root24(0)
    assert abs(Root24(k).value()) == pytest.approx(1.0)


# -- membership and branches -------------------------------------------------

def test_membership_examples():
    assert membership(T, 3)
    assert not membership(S, 3)
    assert membership(Mat2(1, 2, 2, 5), 4)
    assert membership(S, 1)
    # level 2 is the classical theta group condition
    assert membership(Mat2(1, 2, 0, 1), 2)
    assert not membership(S, 2)
    with pytest.raises(ValueError):
        membership(S, 0)


def test_branch_examples():
    assert branch_of(T, 3) == MultiplierBranch(3, ResidueClass.PM_T, True)
    assert branch_of(NEG_I, 3) == MultiplierBranch(3, ResidueClass.PM_IDENTITY, False)
    assert branch_of(Mat2(2, 3, 1, 2), 4) == MultiplierBranch(4, ResidueClass.PM_S2, True)
    assert branch_of(Mat2(1, 2, 2, 5), 4) == MultiplierBranch(4, ResidueClass.PM_S2, False)
    assert branch_of(T, 4) == MultiplierBranch(4, ResidueClass.PM_T, True)
    with pytest.raises(ValueError):
        branch_of(S, 3)
    with pytest.raises(ValueError):
        branch_of(S, 5)


# -- eta multiplier ----------------------------------------------------------

def test_nu_eta_spot_values():
    assert nu_eta(S) == Root24(1)       # forced by the q^{1/24} prefactor
    assert nu_eta(T) == Root24(21)      # e^{-pi i/4}
    assert nu_eta(IDENTITY) == Root24(0)
    assert nu_eta(NEG_I) == Root24(18)  # (-1)^{-1/2} = -i


def test_nu_eta_translation_composition():
    # Multiplying by S on either side never changes c, and the weight-1/2
    # cocycle is trivial for translations.
    rng = random.Random(17)
    s_exp = nu_eta(S).exponent
    for _ in range(400):
        m = random_subgroup_element(rng, lambda x: True)
        assert nu_eta(m * S).exponent == (nu_eta(m).exponent + s_exp) % 24
        assert nu_eta(S * m).exponent == (nu_eta(m).exponent + s_exp) % 24


# -- branch integers ---------------------------------------------------------

def test_f_spot_values():
    assert f_value(IDENTITY) == 0
    assert f_value(T) == 9
    assert f_value(Mat2(4, 9, 3, 7)) == 104
    assert f_value(NEG_I) == -6
    assert f_value(S ** 3) == 1
    assert f_value(S ** 6) == 2


def test_g_spot_values():
    assert g_value(IDENTITY) == 0
    assert g_value(T) == -3
    assert g_value(NEG_I) == -6
    assert g_value(S ** 4) == 1
    assert g_value(Mat2(2, 3, 1, 2)) == -2


def test_g_variants_disagree_only_mod12_sometimes():
    m = Mat2(2, 3, 1, 2)
    assert g_value(m, GVariant.PRIMARY) == -2
    assert g_value(m, GVariant.ALTERNATE) == 0
    # c-even members have a single reading
    m_even = Mat2(1, 2, 2, 5)
    assert g_value(m_even, GVariant.PRIMARY) == g_value(m_even, GVariant.ALTERNATE)


def test_branch_values_reject_non_members():
    with pytest.raises(ValueError):
        f_value(S)
    with pytest.raises(ValueError):
        g_value(S)


def test_divisibility_guard():
    from theta_kernel.multiplier import DivisibilityError, _exact_div

    assert issubclass(DivisibilityError, ArithmeticError)
    assert _exact_div(9, 3) == 3
    with pytest.raises(DivisibilityError):
        _exact_div(10, 3)


def test_branch_integers_are_integers_on_random_members():
    rng = random.Random(23)
    for level, fn in ((3, f_value), (4, g_value)):
        for _ in range(2000):
            m = random_subgroup_element(rng, lambda x: membership(x, level))
            fn(m)  # DivisibilityError would propagate


# -- closed-form multipliers -------------------------------------------------

def test_nu_spot_values():
    assert nu_F(T) == Root24(18) and nu_F(T).label() == "-i"
    assert nu_G(T) == Root24(18) and nu_G(T).label() == "-i"
    assert nu_F(IDENTITY) == Root24(0)
    assert nu_G(IDENTITY) == Root24(0)
    assert nu_F(NEG_I) == Root24(12)
    assert nu_G(NEG_I) == Root24(12)


def test_nu_value_on_unit_circle():
    rng = random.Random(5)
    for level, nu in ((3, nu_F), (4, nu_G)):
        for _ in range(50):
            m = random_subgroup_element(rng, lambda x: membership(x, level))
            assert abs(abs(nu(m).value()) - 1) < 1e-12


def test_negation_consistency():
    rng = random.Random(31)
    for level, nu in ((3, nu_F), (4, nu_G)):
        for _ in range(300):
            m = random_subgroup_element(rng, lambda x: membership(x, level))
            assert nu(-m) == nu(NEG_I) * nu(m)


def test_nu_power_is_power_of_nu():
    rng = random.Random(37)
    for level in (3, 4):
        for _ in range(100):
            m = random_subgroup_element(rng, lambda x: membership(x, level))
            base = nu_power(m, 1, level)
            for k in range(12):
                assert nu_power(m, k, level) == base ** k


# -- decomposition path ------------------------------------------------------

def test_decomposition_factor_examples():
    m1, m2 = decomposition_factors(T, 3)
    assert m1 == Mat2(-1, 0, 3, -1)
    assert m2 == Mat2(1, 0, 3, 1)
    assert decomposition_factors(IDENTITY, 3) == (IDENTITY, IDENTITY)
    assert nu_via_decomposition(IDENTITY, 3) == Root24(0)
    assert nu_via_decomposition(T, 3) == Root24(18)


def test_decomposition_factors_structure():
    rng = random.Random(41)
    for level in (3, 4):
        for _ in range(300):
            m = random_subgroup_element(rng, lambda x: membership(x, level))
            m1, m2 = decomposition_factors(m, level)
            assert m1.c == m2.c == level * m.c
            assert {m1.d, m2.d} == {m.d + m.c, m.d - m.c}


def test_closed_form_equals_decomposition():
    rng = random.Random(43)
    for level, nu in ((3, nu_F), (4, nu_G)):
        for _ in range(2000):
            m = random_subgroup_element(rng, lambda x: membership(x, level))
            assert nu(m) == nu_via_decomposition(m, level)


def test_character_law_sampled():
    rng = random.Random(47)
    for level, nu in ((3, nu_F), (4, nu_G)):
        for _ in range(1000):
            m1 = random_subgroup_element(rng, lambda x: membership(x, level))
            m2 = random_subgroup_element(rng, lambda x: membership(x, level))
            assert nu(m1 * m2) == nu(m1) * nu(m2)


def test_root24_exponent_is_doubled_branch_integer():
    rng = random.Random(53)
    for _ in range(200):
        m = random_subgroup_element(rng, lambda x: membership(x, 3))
        assert nu_F(m).exponent == 2 * (f_value(m) % 12)
