"""Coset decomposition of SL(2,Z) modulo the level groups, and cusps.

The index-6 right-coset decompositions are hard-coded representative
lists; ``coset_rep_of`` mechanically witnesses that they partition the
group (raising if a matrix matches zero or two representatives).  The
index is recomputed independently by enumerating SL(2,Z/N) and the
image of the group under entrywise reduction.

Parabolic points (cusps) are rationals or infinity; two cusps are
equivalent when a group element maps one to the other.  With x = A(inf)
and y = B(inf), every element sending y to x has the form +-A S^n B^-1,
and the stabilizer width of an index-6 subgroup containing -I is at
most 6, so scanning |n| <= index decides equivalence.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .multiplier import membership
from .sl2z import IDENTITY, Mat2, S, enumerate_sl2, sl2_order

__all__ = [
    "CuspPoint",
    "INFINITY",
    "PartitionError",
    "coset_reps",
    "coset_rep_of",
    "index",
    "apply_to_cusp",
    "cusp_equivalent",
    "cusp_classes",
    "cusp_class_count",
    "DEFAULT_CUSP_PROBES",
]


class PartitionError(RuntimeError):
    """A matrix matched zero or several coset representatives."""


@dataclass(frozen=True)
class CuspPoint:
    """A point of P^1(Q): p/q in lowest terms with q > 0, or infinity (1:0)."""

    p: int
    q: int

    def __post_init__(self):
        if self.q == 0:
            if self.p != 1:
                raise ValueError("infinity must be normalized as (1, 0)")
            return
        if self.q < 0 or gcd(self.p, self.q) != 1:
            raise ValueError(f"cusp must be in lowest terms with q > 0: {self.p}/{self.q}")

    @classmethod
    def make(cls, p: int, q: int) -> "CuspPoint":
        """Normalize an arbitrary integer pair (not both zero)."""
        if q == 0:
            if p == 0:
                raise ValueError("(0, 0) is not a point of P^1(Q)")
            return cls(1, 0)
        g = gcd(p, q)
        p, q = p // g, q // g
        if q < 0:
            p, q = -p, -q
        return cls(p, q)

    @classmethod
    def parse(cls, text: str) -> "CuspPoint":
        """CLI syntax: "inf", an integer, or "p/q"."""
        if text.strip().lower() in ("inf", "oo", "infinity"):
            return INFINITY
        if "/" in text:
            p_text, q_text = text.split("/", 1)
            return cls.make(int(p_text), int(q_text))
        return cls.make(int(text), 1)

    def is_infinity(self) -> bool:
        return self.q == 0

    def __str__(self) -> str:
        if self.is_infinity():
            return "inf"
        if self.q == 1:
            return str(self.p)
        return f"{self.p}/{self.q}"


INFINITY = CuspPoint(1, 0)

_REPS = {
    3: (
        IDENTITY,
        Mat2(1, 1, 0, 1),
        Mat2(1, 2, 0, 1),
        Mat2(1, 0, -1, 1),
        Mat2(1, 1, -1, 0),
        Mat2(-1, 1, 1, -2),
    ),
    4: (
        IDENTITY,
        Mat2(1, 1, 0, 1),
        Mat2(1, 2, 0, 1),
        Mat2(1, -1, 0, 1),
        Mat2(-1, 0, 1, -1),
        Mat2(-1, -1, 1, 0),
    ),
}


def _check_level(level: int) -> None:
    if level not in (3, 4):
        raise ValueError(f"coset data available for levels 3 and 4, got {level}")


def coset_reps(level: int) -> list[Mat2]:
    """The six right-coset representatives: SL(2,Z) = union of G_N * R_i."""
    _check_level(level)
    return list(_REPS[level])


def coset_rep_of(m: Mat2, level: int) -> int:
    """Index of the unique representative with M * R_i^-1 in the group."""
    _check_level(level)
    matches = [i for i, rep in enumerate(_REPS[level])
               if membership(m * rep.inverse(), level)]
    if len(matches) != 1:
        raise PartitionError(
            f"{m.entries()} matched representatives {matches}; "
            "the coset lists must partition the group")
    return matches[0]


def index(level: int) -> int:
    """[SL(2,Z) : G_N], via |SL(2,Z/N)| / |image of G_N mod N|.

    Independent of the representative lists: the image is the set of
    residue matrices with a = d and b = -c mod N, every one of which
    lifts to a group element.
    """
    _check_level(level)
    image = sum(
        1 for r in enumerate_sl2(level)
        if (r.a - r.d) % level == 0 and (r.b + r.c) % level == 0
    )
    return sl2_order(level) // image


def apply_to_cusp(m: Mat2, x: CuspPoint) -> CuspPoint:
    """Moebius action on P^1(Q): (p : q) -> (a p + b q : c p + d q)."""
    return CuspPoint.make(m.a * x.p + m.b * x.q, m.c * x.p + m.d * x.q)


def _matrix_sending_infinity_to(x: CuspPoint) -> Mat2:
    if x.is_infinity():
        return IDENTITY
    # First column (p, q); Bezout completes it to determinant 1.
    g, u, v = _egcd(x.p, x.q)
    assert g == 1
    return Mat2(x.p, -v, x.q, u)


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        quotient = old_r // r
        old_r, r = r, old_r - quotient * r
        old_s, s = s, old_s - quotient * s
        old_t, t = t, old_t - quotient * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def cusp_equivalent(x: CuspPoint, y: CuspPoint, level: int) -> bool:
    """True iff some group element maps x to y."""
    _check_level(level)
    a_mat = _matrix_sending_infinity_to(x)
    b_mat = _matrix_sending_infinity_to(y)
    b_inv = b_mat.inverse()
    width = index(level)
    for n in range(-width, width + 1):
        candidate = a_mat * (S ** n) * b_inv
        if membership(candidate, level) or membership(-candidate, level):
            return True
    return False


DEFAULT_CUSP_PROBES = (INFINITY, CuspPoint(0, 1), CuspPoint(-1, 1), CuspPoint(1, 1))


def cusp_classes(level: int,
                 probes: tuple[CuspPoint, ...] = DEFAULT_CUSP_PROBES) -> list[list[CuspPoint]]:
    """Equivalence classes among infinity and all coset-translated probes."""
    _check_level(level)
    points: list[CuspPoint] = [INFINITY]
    for rep in coset_reps(level):
        for probe in probes:
            moved = apply_to_cusp(rep, probe)
            if moved not in points:
                points.append(moved)
    classes: list[list[CuspPoint]] = []
    for point in points:
        for cls in classes:
            if cusp_equivalent(point, cls[0], level):
                cls.append(point)
                break
        else:
            classes.append([point])
    return classes


def cusp_class_count(level: int) -> int:
    """Number of parabolic-point classes seen from the standard probes."""
    return len(cusp_classes(level))
