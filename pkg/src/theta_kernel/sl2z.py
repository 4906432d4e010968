"""Exact arithmetic in SL(2,Z) and SL(2,Z/N).

Matrices are immutable and carry arbitrary-precision entries: the branch
integers evaluated elsewhere contain degree-4 monomials (c^3*d and the
like) that overflow 64-bit words once entries pass a few ten thousand.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd

__all__ = [
    "Mat2",
    "ResidueMat",
    "IDENTITY",
    "S",
    "T",
    "mul",
    "inverse",
    "moebius",
    "reduce_mod",
    "enumerate_sl2",
    "sl2_order",
    "word_to_matrix",
    "random_element",
    "random_subgroup_element",
]

GENERATOR_TOKENS = ("S", "T", "S^-1", "T^-1")


@dataclass(frozen=True)
class Mat2:
    """Unimodular integer matrix (a, b; c, d) with a*d - b*c = 1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant must be 1: {self.entries()}")

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __mul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> "Mat2":
        return Mat2(self.d, -self.b, -self.c, self.a)

    def __pow__(self, n: int) -> "Mat2":
        if n < 0:
            return self.inverse() ** (-n)
        result, base = IDENTITY, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def moebius(self, tau: complex) -> complex:
        """Apply (a*tau + b)/(c*tau + d); tau must lie in the upper half plane."""
        if not tau.imag > 0:
            raise ValueError(f"moebius needs Im tau > 0, got {tau}")
        return (self.a * tau + self.b) / (self.c * tau + self.d)

    @classmethod
    def from_csv(cls, text: str) -> "Mat2":
        """Parse the CLI wire format "a,b,c,d" (row major, no whitespace)."""
        parts = text.split(",")
        if len(parts) != 4:
            raise ValueError(f"expected 4 comma-separated integers, got {text!r}")
        return cls(*(int(p) for p in parts))

    def to_csv(self) -> str:
        return f"{self.a},{self.b},{self.c},{self.d}"


IDENTITY = Mat2(1, 0, 0, 1)
S = Mat2(1, 1, 0, 1)
T = Mat2(0, -1, 1, 0)

_GENERATORS = {
    "S": S,
    "T": T,
    "S^-1": S.inverse(),
    "T^-1": T.inverse(),
}


def mul(m1: Mat2, m2: Mat2) -> Mat2:
    return m1 * m2


def inverse(m: Mat2) -> Mat2:
    return m.inverse()


def moebius(m: Mat2, tau: complex) -> complex:
    return m.moebius(tau)


@dataclass(frozen=True)
class ResidueMat:
    """Entries of a Mat2 reduced mod N (least nonnegative residues)."""

    a: int
    b: int
    c: int
    d: int
    modulus: int

    def __post_init__(self):
        n = self.modulus
        if n < 2:
            raise ValueError(f"modulus must be >= 2, got {n}")
        if any(not 0 <= x < n for x in (self.a, self.b, self.c, self.d)):
            raise ValueError("entries must be reduced residues")
        if (self.a * self.d - self.b * self.c) % n != 1 % n:
            raise ValueError(f"determinant must be 1 mod {n}")

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)


def reduce_mod(m: Mat2, n: int) -> ResidueMat:
    """Entrywise reduction of m into SL(2, Z/N)."""
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    return ResidueMat(m.a % n, m.b % n, m.c % n, m.d % n, n)


def sl2_order(n: int) -> int:
    """|SL(2, Z/N)| = N^3 * prod_{p | N} (1 - p^-2)."""
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    order = n ** 3
    m, p = n, 2
    while p * p <= m:
        if m % p == 0:
            order = order // (p * p) * (p * p - 1)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        order = order // (m * m) * (m * m - 1)
    return order


_ENUM_BOUND = 64


def enumerate_sl2(n: int) -> set[ResidueMat]:
    """All of SL(2, Z/N), for 2 <= N <= 64.

    For each (a, b, c) the congruence a*d = 1 + b*c (mod N) is solved for
    d directly, so the loop is N^3 rather than N^4.
    """
    if not 2 <= n <= _ENUM_BOUND:
        raise ValueError(f"enumeration supports 2 <= N <= {_ENUM_BOUND}, got {n}")
    result: set[ResidueMat] = set()
    for a in range(n):
        g = gcd(a, n)
        step = n // g
        a_inv = pow(a // g, -1, step) if step > 1 else 0
        for b in range(n):
            for c in range(n):
                rhs = (1 + b * c) % n
                if rhs % g:
                    continue
                d0 = (rhs // g) * a_inv % step
                for t in range(g):
                    result.add(ResidueMat(a, b, c, d0 + t * step, n))
    return result


def word_to_matrix(word: str) -> Mat2:
    """Product of comma-separated generator tokens; "" gives the identity.

    Tokens are S, T, S^-1, T^-1, e.g. "S,T" -> (1,-1;1,0).
    """
    result = IDENTITY
    if not word:
        return result
    for token in word.split(","):
        if token not in _GENERATORS:
            raise ValueError(f"unknown generator token {token!r}")
        result = result * _GENERATORS[token]
    return result


def random_element(rng: random.Random | int, max_word_length: int = 20) -> Mat2:
    """Pseudo-random product of generators, deterministic for a fixed seed.

    The word length is uniform on [1, max_word_length] and each factor is
    uniform on {S, S^-1, T, T^-1}.
    """
    if max_word_length < 1:
        raise ValueError(f"max_word_length must be >= 1, got {max_word_length}")
    if isinstance(rng, int):
        rng = random.Random(rng)
    result = IDENTITY
    for _ in range(rng.randint(1, max_word_length)):
        result = result * _GENERATORS[rng.choice(GENERATOR_TOKENS)]
    return result


def random_subgroup_element(rng: random.Random | int, predicate,
                            max_word_length: int = 20,
                            max_attempts: int = 100_000) -> Mat2:
    """Rejection-sample a random word until `predicate` accepts it.

    No generator set for the target subgroups is assumed; at word length
    <= 20 the acceptance rate is ample for test-suite use.
    """
    if isinstance(rng, int):
        rng = random.Random(rng)
    for _ in range(max_attempts):
        m = random_element(rng, max_word_length)
        if predicate(m):
            return m
    raise RuntimeError("rejection sampling failed; predicate too restrictive")
