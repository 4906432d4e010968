"""Integer number theory: Jacobi symbol and its signed-argument variants.

The classical Jacobi symbol ``(c/d)`` is only defined for positive odd
``d``.  The two starred variants extend it to negative odd denominators:

    (c/d)^*  =  (c/|d|)
    (c/d)_*  =  (c/|d|) * (-1)^{((sign c - 1)/2) * ((sign d - 1)/2)}

so the lower-star symbol picks up a sign exactly when both arguments are
negative.  ``sign(0)`` is taken to be ``+1`` so that ``(0/1)_* = 1``;
the numerator 0 occurs for translation matrices.
"""

from __future__ import annotations

from math import gcd

__all__ = [
    "jacobi",
    "sign",
    "symbol_upper_star",
    "symbol_lower_star",
    "lemma_symbol_product",
]


def jacobi(c: int, d: int) -> int:
    """Jacobi symbol (c/d) for positive odd d, by iterative reciprocity.

    Returns 0 iff gcd(c, d) > 1.  Never factors its arguments, so inputs
    of arbitrary magnitude are fine.
    """
    if d <= 0 or d % 2 == 0:
        raise ValueError(f"jacobi requires a positive odd denominator, got {d}")
    c %= d
    result = 1
    while c:
        while c % 2 == 0:
            c //= 2
            if d % 8 in (3, 5):
                result = -result
        c, d = d, c
        if c % 4 == 3 and d % 4 == 3:
            result = -result
        c %= d
    return result if d == 1 else 0


def sign(n: int) -> int:
    """Sign of n, with sign(0) = +1."""
    return -1 if n < 0 else 1


def _check_symbol_args(c: int, d: int) -> None:
    if d == 0 or d % 2 == 0:
        raise ValueError(f"starred symbols require an odd nonzero denominator, got {d}")
    if gcd(c, d) != 1:
        raise ValueError(f"starred symbols require coprime arguments, got ({c}, {d})")


def symbol_upper_star(c: int, d: int) -> int:
    """Upper-star symbol (c/d)^* = (c/|d|), for odd d coprime to c."""
    _check_symbol_args(c, d)
    return jacobi(c, abs(d))


def symbol_lower_star(c: int, d: int) -> int:
    """Lower-star symbol (c/d)_*.

    Equals (c/d)^* unless both c < 0 and d < 0, in which case the sign
    flips.
    """
    _check_symbol_args(c, d)
    value = jacobi(c, abs(d))
    if ((sign(c) - 1) // 2) * ((sign(d) - 1) // 2) % 2:
        value = -value
    return value


def lemma_symbol_product(c: int, d: int) -> int:
    """The product (c/(d-c))_* (c/(d+c))_* for odd c, even d, gcd(c,d)=1.

    This product collapses to (-1)^((c-1)/2); callers and tests assert
    that identity, this function evaluates the left-hand side honestly.
    """
    if c % 2 == 0:
        raise ValueError(f"numerator must be odd, got {c}")
    if d % 2 != 0:
        raise ValueError(f"shift must be even, got {d}")
    if gcd(c, d) != 1:
        raise ValueError(f"arguments must be coprime, got ({c}, {d})")
    return symbol_lower_star(c, d - c) * symbol_lower_star(c, d + c)
