"""Exact multiplier systems on the level-N theta groups.

The group is

    G_N = { (a,b;c,d) in SL(2,Z) : a = d and b = -c  (mod N) },

and the objects computed here are 24th roots of unity:

* ``nu_eta(M)`` -- the eta multiplier, from the closed formula

      (d/c)^* exp{(pi i/12)[(a+d)c - bd(c^2-1) - 3c]}          c odd
      (c/d)_* exp{(pi i/12)[(a+d)c - bd(c^2-1) + 3d - 3 - 3cd]} c even

* ``f_value(M)`` / ``g_value(M)`` -- branch integers for the weight-1
  eta quotients at levels 3 and 4; the multiplier is exp(pi*i*f/6)
  resp. exp(pi*i*g/6), a 12th root of unity.

* ``nu_via_decomposition`` -- the independent construction of the same
  value as a product nu_eta(M1) * nu_eta(M2) of two eta multipliers,
  where M1, M2 act on the shifted arguments (tau -/+ 1)/N.

For level 4 with c odd there are two candidate readings of the branch
integer that disagree mod 12; both are implemented (``GVariant``) and
the q-series oracle arbitrates between them.  The primary reading wins.
"""

from __future__ import annotations

import cmath
import enum
from dataclasses import dataclass

from .arith import symbol_lower_star, symbol_upper_star
from .sl2z import Mat2

__all__ = [
    "DivisibilityError",
    "Root24",
    "ResidueClass",
    "MultiplierBranch",
    "GVariant",
    "membership",
    "nu_eta",
    "branch_of",
    "f_value",
    "g_value",
    "nu_F",
    "nu_G",
    "nu_level",
    "nu_power",
    "nu_via_decomposition",
    "decomposition_factors",
]


class DivisibilityError(ArithmeticError):
    """An exact division by 3 or 4 left a remainder.

    Unreachable for genuine members; raised instead of silently
    truncating so that a branch-selection bug cannot go unnoticed.
    """


def _exact_div(numerator: int, divisor: int) -> int:
    q, r = divmod(numerator, divisor)
    if r:
        raise DivisibilityError(f"{numerator} is not divisible by {divisor}")
    return q


_VALUE_LABELS = {0: "1", 6: "i", 12: "-1", 18: "-i"}


@dataclass(frozen=True)
class Root24:
    """Exact 24th root of unity exp(2*pi*i*k/24), 0 <= k < 24."""

    exponent: int

    def __post_init__(self):
        if not 0 <= self.exponent < 24:
            raise ValueError(f"exponent must lie in [0, 24), got {self.exponent}")

    @classmethod
    def from_twelfth(cls, m: int, symbol: int = 1) -> "Root24":
        """Value symbol * exp(pi*i*m/12) with symbol in {+1, -1}."""
        if symbol not in (1, -1):
            raise ValueError(f"symbol must be +-1, got {symbol}")
        return cls((m + (12 if symbol == -1 else 0)) % 24)

    def __mul__(self, other: "Root24") -> "Root24":
        return Root24((self.exponent + other.exponent) % 24)

    def __pow__(self, n: int) -> "Root24":
        return Root24(self.exponent * n % 24)

    def inverse(self) -> "Root24":
        return Root24(-self.exponent % 24)

    def value(self) -> complex:
        return cmath.exp(2j * cmath.pi * self.exponent / 24)

    def label(self) -> str:
        """Human-readable value: "1", "i", "-1", "-i" or the exponential."""
        return _VALUE_LABELS.get(self.exponent, str(self))

    def __str__(self) -> str:
        return f"exp(2*pi*i*{self.exponent}/24)"


class ResidueClass(enum.Enum):
    """Which signed residue class of the level group M falls in.

    PM_IDENTITY covers +-I (and at level 4 also +-(1,2;2,1), the c-even
    classes); PM_T covers +-(0,-1;1,0) (and at level 4 +-(2,-1;1,2), the
    c-odd classes).  PM_S2 marks the two extra level-4 classes when the
    finer distinction is wanted.
    """

    PM_IDENTITY = "pm_identity"
    PM_T = "pm_t"
    PM_S2 = "pm_s2"


@dataclass(frozen=True)
class MultiplierBranch:
    """Branch selector: level, coarse residue class, parity of c."""

    level: int
    residue_class: ResidueClass
    c_odd: bool


def membership(m: Mat2, level: int) -> bool:
    """True iff a = d and b = -c mod N; level 1 accepts everything."""
    if level < 1:
        raise ValueError(f"level must be >= 1, got {level}")
    return (m.a - m.d) % level == 0 and (m.b + m.c) % level == 0


def _require_member(m: Mat2, level: int) -> None:
    if not membership(m, level):
        raise ValueError(f"{m.entries()} is not a level-{level} member")


def nu_eta(m: Mat2) -> Root24:
    """The eta multiplier of any M in SL(2,Z), as an exact Root24."""
    a, b, c, d = m.entries()
    if c % 2:
        symbol = symbol_upper_star(d, c)
        bracket = (a + d) * c - b * d * (c * c - 1) - 3 * c
    else:
        symbol = symbol_lower_star(c, d)
        bracket = (a + d) * c - b * d * (c * c - 1) + 3 * d - 3 - 3 * c * d
    return Root24.from_twelfth(bracket % 24, symbol)


def branch_of(m: Mat2, level: int) -> MultiplierBranch:
    """The unique branch applying to a member M of the level-3/4 group."""
    if level not in (3, 4):
        raise ValueError(f"branch selection requires level 3 or 4, got {level}")
    _require_member(m, level)
    c_odd = m.c % 2 == 1
    if level == 3:
        # +-I mod 3 has c = 0 mod 3; the only other classes are +-T.
        cls = ResidueClass.PM_IDENTITY if m.c % 3 == 0 else ResidueClass.PM_T
        return MultiplierBranch(3, cls, c_odd)
    if c_odd:
        # c odd: +-T (a = 0 mod 4) or +-(2,-1;1,2) (a = 2 mod 4).
        cls = ResidueClass.PM_T if m.a % 4 == 0 else ResidueClass.PM_S2
    else:
        # c even: +-I (c = 0 mod 4) or +-(1,2;2,1) (c = 2 mod 4).
        cls = ResidueClass.PM_IDENTITY if m.c % 4 == 0 else ResidueClass.PM_S2
    if c_odd != (m.a % 2 == 0):
        raise AssertionError("residue class inconsistent with parity of c")
    return MultiplierBranch(4, cls, c_odd)


def _identity_type(branch: MultiplierBranch) -> bool:
    if branch.level == 3:
        return branch.residue_class is ResidueClass.PM_IDENTITY
    # Level 4 groups {+-I, +-(1,2;2,1)} (c even) against {+-T, +-(2,-1;1,2)}.
    return not branch.c_odd


def f_value(m: Mat2) -> int:
    """Branch integer for level 3; the multiplier is exp(pi*i*f/6)."""
    _require_member(m, 3)
    a, b, c, d = m.entries()
    if _identity_type(branch_of(m, 3)):
        if c % 2:
            return 3 * c + _exact_div((a + d) * c, 3) + _exact_div(4 * b * d, 3)
        return 3 * (d - 1) + _exact_div((b - c) * d, 3)
    if c % 2:
        return 3 * (c + 2) + _exact_div((a + d) * c, 3)
    return 3 * (d + 1) + _exact_div((b - c) * d, 3) + _exact_div(4 * a * c, 3)


class GVariant(enum.Enum):
    """The two candidate readings of the level-4 c-odd branch integer.

    PRIMARY:   3(c+d-2) + (a+d)c/4 + (b+c)d/4 - cd(1+bc)
    ALTERNATE: 3(d-1)   + (a+d)c/4 + (b+c)d/4 - cd(1+cd)

    They disagree mod 12 on matrices such as (2,3;1,2); the
    transformation-law oracle singles out PRIMARY.
    """

    PRIMARY = "primary"
    ALTERNATE = "alternate"


def g_value(m: Mat2, variant: GVariant = GVariant.PRIMARY) -> int:
    """Branch integer for level 4; the multiplier is exp(pi*i*g/6)."""
    _require_member(m, 4)
    a, b, c, d = m.entries()
    if c % 2:
        mixed = _exact_div((a + d) * c, 4) + _exact_div((b + c) * d, 4)
        if variant is GVariant.PRIMARY:
            return 3 * (c + d - 2) + mixed - c * d * (1 + b * c)
        return 3 * (d - 1) + mixed - c * d * (1 + c * d)
    return (3 * (d - c - 1) + _exact_div((b - c) * d, 4)
            + _exact_div((a - d) * c, 4) + c * d * (1 - a * d))


def nu_F(m: Mat2) -> Root24:
    """Multiplier of the level-3 eta quotient eta((t-1)/3) eta((t+1)/3)."""
    return Root24(2 * f_value(m) % 24)


def nu_G(m: Mat2, variant: GVariant = GVariant.PRIMARY) -> Root24:
    """Multiplier of the level-4 eta quotient eta((t-1)/4) eta((t+1)/4)."""
    return Root24(2 * g_value(m, variant) % 24)


def nu_level(m: Mat2, level: int, variant: GVariant = GVariant.PRIMARY) -> Root24:
    if level == 3:
        return nu_F(m)
    if level == 4:
        return nu_G(m, variant)
    raise ValueError(f"multiplier implemented for levels 3 and 4, got {level}")


def nu_power(m: Mat2, k: int, level: int) -> Root24:
    """Multiplier of the k-th power of the level-N quotient: exp(pi*i*k*f/6)."""
    if level not in (3, 4):
        raise ValueError(f"multiplier implemented for levels 3 and 4, got {level}")
    branch_value = f_value(m) if level == 3 else g_value(m)
    return Root24(2 * k * branch_value % 24)


def decomposition_factors(m: Mat2, level: int) -> tuple[Mat2, Mat2]:
    """The pair (M1, M2) with nu(M) = nu_eta(M1) * nu_eta(M2).

    M1 and M2 move the shifted points (tau -/+ 1)/N:  on the identity-type
    branch M1 fixes the "-1" shift and M2 the "+1" shift; on the T-type
    branch the two shifts are swapped.  The fractional upper-right entries
    are integers precisely because M is a member.
    """
    if level not in (3, 4):
        raise ValueError(f"decomposition requires level 3 or 4, got {level}")
    _require_member(m, level)
    a, b, c, d = m.entries()
    n = level
    if _identity_type(branch_of(m, level)):
        m1 = Mat2(a - c, _exact_div(b - d + a - c, n), n * c, d + c)
        m2 = Mat2(a + c, _exact_div(b + d - a - c, n), n * c, d - c)
    else:
        m1 = Mat2(a - c, _exact_div(b - d - a + c, n), n * c, d - c)
        m2 = Mat2(a + c, _exact_div(b + d + a + c, n), n * c, d + c)
    return m1, m2


def nu_via_decomposition(m: Mat2, level: int) -> Root24:
    """nu_eta(M1) * nu_eta(M2); equals nu_F / nu_G exactly."""
    m1, m2 = decomposition_factors(m, level)
    return nu_eta(m1) * nu_eta(m2)
