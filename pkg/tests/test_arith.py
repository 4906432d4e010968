"""Jacobi symbol and starred variants against brute-force oracles."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from theta_kernel.arith import (
    jacobi,
    lemma_symbol_product,
    sign,
    symbol_lower_star,
    symbol_upper_star,
)


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        while n % p == 0:
            out.append(p)
            n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def jacobi_bruteforce(c: int, d: int) -> int:
    """Independent oracle: Euler criterion per odd prime factor of d."""
    result = 1
    for p in _prime_factors(d):
        if c % p == 0:
            return 0
        result *= 1 if pow(c % p, (p - 1) // 2, p) == 1 else -1
    return result


def test_empty_product_convention():
    assert jacobi(1, 1) == 1
    assert jacobi(17, 1) == 1


def test_spot_values_against_bruteforce():
    # 3 is not a square mod 5; (2/15) = (2/3)(2/5) = (-1)(-1).
    assert jacobi_bruteforce(3, 5) == -1
    assert jacobi(3, 5) == -1
    assert jacobi_bruteforce(2, 15) == 1
    assert jacobi(2, 15) == 1


def test_rejects_bad_denominators():
    for d in (0, -3, 4, -8):
        with pytest.raises(ValueError):
            jacobi(1, d)


@settings(max_examples=300)
@given(st.integers(-10**6, 10**6), st.integers(1, 2001).map(lambda n: 2 * n - 1))
def test_matches_bruteforce(c, d):
    assert jacobi(c, d) == jacobi_bruteforce(c % d, d)


@settings(max_examples=200)
@given(st.integers(-10**9, 10**9), st.integers(1, 10**4).map(lambda n: 2 * n - 1))
def test_periodicity(c, d):
    assert jacobi(c, d) == jacobi(c % d, d)


@settings(max_examples=200)
@given(st.integers(-10**4, 10**4), st.integers(-10**4, 10**4),
       st.integers(1, 10**4).map(lambda n: 2 * n - 1))
def test_multiplicativity_in_numerator(c1, c2, d):
    assert jacobi(c1 * c2, d) == jacobi(c1, d) * jacobi(c2, d)


def test_quadratic_reciprocity_exhaustive():
    for a in range(3, 200, 2):
        for b in range(3, 200, 2):
            if math.gcd(a, b) != 1:
                continue
            flip = -1 if a % 4 == 3 and b % 4 == 3 else 1
            assert jacobi(a, b) * jacobi(b, a) == flip


def test_sign_of_zero_is_positive():
    assert sign(0) == 1
    assert sign(-5) == -1
    assert sign(5) == 1


def test_upper_star_spot_values():
    assert symbol_upper_star(2, -3) == -1  # (2/3)
    assert symbol_upper_star(0, 1) == 1
    assert symbol_upper_star(5, 3) == -1  # 5 = 2 mod 3 is a non-square


def test_lower_star_spot_values():
    assert symbol_lower_star(-1, -1) == -1
    assert symbol_lower_star(2, -3) == -1
    assert symbol_lower_star(0, 1) == 1


def test_star_symbols_reject_bad_input():
    with pytest.raises(ValueError):
        symbol_upper_star(2, 4)
    with pytest.raises(ValueError):
        symbol_upper_star(3, 0)
    with pytest.raises(ValueError):
        symbol_upper_star(3, 9)
    with pytest.raises(ValueError):
        symbol_lower_star(2, 6)


@settings(max_examples=400)
@given(st.integers(-500, 500).filter(lambda c: c != 0),
       st.integers(-501, 501).map(lambda d: d | 1))
def test_lower_star_sign_relation(c, d):
    if math.gcd(c, d) != 1:
        return
    upper = symbol_upper_star(c, d)
    lower = symbol_lower_star(c, d)
    if c < 0 and d < 0:
        assert lower == -upper
    else:
        assert lower == upper


def test_lemma_product_spot_values():
    assert lemma_symbol_product(1, 0) == 1
    assert lemma_symbol_product(3, 2) == -1
    assert lemma_symbol_product(-3, 2) == 1


@settings(max_examples=500)
@given(st.integers(-10**4, 10**4).map(lambda c: c | 1),
       st.integers(-5 * 10**3, 5 * 10**3).map(lambda d: 2 * d))
def test_lemma_product_identity(c, d):
    if math.gcd(c, d) != 1:
        return
    expected = -1 if ((c - 1) // 2) % 2 else 1
    assert lemma_symbol_product(c, d) == expected


def test_lemma_product_rejects_bad_parity():
    with pytest.raises(ValueError):
        lemma_symbol_product(2, 4)
    with pytest.raises(ValueError):
        lemma_symbol_product(3, 5)
    with pytest.raises(ValueError):
        lemma_symbol_product(3, 6)
