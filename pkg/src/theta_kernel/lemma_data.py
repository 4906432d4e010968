"""Expected residue-class tables for the kernel lemmas.

Each lemma states a biconditional "branch integer = 0 mod r  <=>  linear
congruence on entries" and, alongside it, the exact list of residue
classes mod m realized by the kernel matrices of that branch.  The lists
below are those classes; the box scan in :mod:`theta_kernel.kernels`
checks both the biconditional and the equality of the attained class set
with these lists.

Matrices are stored as (a, b, c, d) tuples; ``expand_pm`` closes a list
under negation mod m.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["LemmaCase", "LemmaSpec", "LEMMAS", "lemma_ids"]

Klass = tuple[int, int, int, int]


def _norm(mat: Klass, modulus: int) -> Klass:
    return tuple(x % modulus for x in mat)  # type: ignore[return-value]


def expand_pm(mats: list[Klass], modulus: int) -> frozenset[Klass]:
    """Close the list under M -> -M and reduce mod the modulus."""
    out = set()
    for mat in mats:
        out.add(_norm(mat, modulus))
        out.add(_norm(tuple(-x for x in mat), modulus))  # type: ignore[arg-type]
    return frozenset(out)


def literal(mats: list[Klass], modulus: int) -> frozenset[Klass]:
    """Reduce an already-expanded list mod the modulus."""
    return frozenset(_norm(mat, modulus) for mat in mats)


@dataclass(frozen=True)
class LemmaCase:
    name: str
    condition: str  # human-readable congruence equivalent to fg = 0 mod r
    classes: frozenset[Klass]


@dataclass(frozen=True)
class LemmaSpec:
    lemma_id: str
    level: int
    divisor: int        # the lemma tests fg = 0 mod divisor
    class_modulus: int  # attained classes are collected mod this
    cases: tuple[LemmaCase, ...]


# -- level 3, classes mod 4 (branch integer mod 4) --------------------------

_L3_MOD4 = LemmaSpec(
    "level3-mod4", 3, 4, 4,
    (
        LemmaCase(
            "pm_identity_c_odd", "a+d = -1 (mod 4)",
            literal([(0, -1, 1, -1), (0, 1, -1, -1), (1, 1, 1, 2), (1, -1, -1, 2),
                     (2, 1, 1, 1), (2, -1, -1, 1), (-1, -1, 1, 0), (-1, 1, -1, 0)], 4)),
        LemmaCase(
            "pm_identity_c_even", "b-c = d-1 (mod 4)",
            literal([(1, 0, 0, 1), (1, 2, 2, 1), (-1, 0, 2, -1), (-1, 2, 0, -1)], 4)),
        LemmaCase(
            "pm_t_c_odd", "a+d = 1 (mod 4)",
            literal([(0, -1, 1, 1), (0, 1, -1, 1), (1, -1, 1, 0), (1, 1, -1, 0),
                     (2, 1, 1, -1), (2, -1, -1, -1), (-1, 1, 1, 2), (-1, -1, -1, 2)], 4)),
        LemmaCase(
            "pm_t_c_even", "b-c = -d-1 (mod 4)",
            literal([(-1, 0, 0, -1), (-1, 2, 2, -1), (1, 0, 2, 1), (1, 2, 0, 1)], 4)),
    ),
)

# -- level 3, classes mod 9 (branch integer mod 3) --------------------------

_L3_MOD9_IDENTITY = expand_pm(
    [(1, 0, 0, 1), (1, 3, 3, 1), (1, -3, -3, 1),
     (4, 0, 0, -2), (4, 3, 3, -2), (4, -3, -3, -2),
     (-2, 0, 0, 4), (-2, 3, 3, 4), (-2, -3, -3, 4)], 9)

_L3_MOD9_T = expand_pm(
    [(0, -1, 1, 0), (0, 2, 4, 0), (0, -4, -2, 0),
     (3, -1, 1, -3), (3, 2, 4, -3), (3, -4, -2, -3),
     (-3, -1, 1, 3), (-3, 2, 4, 3), (-3, -4, -2, 3)], 9)

_L3_MOD9 = LemmaSpec(
    "level3-mod9", 3, 3, 9,
    (
        LemmaCase("pm_identity_c_odd", "b/3 = c/3 (mod 3)", _L3_MOD9_IDENTITY),
        LemmaCase("pm_identity_c_even", "b/3 = c/3 (mod 3)", _L3_MOD9_IDENTITY),
        LemmaCase("pm_t_c_odd", "a/3 = -d/3 (mod 3)", _L3_MOD9_T),
        LemmaCase("pm_t_c_even", "a/3 = -d/3 (mod 3)", _L3_MOD9_T),
    ),
)

# -- level 4, classes mod 8 (branch integer mod 2) --------------------------

_L4_MOD8 = LemmaSpec(
    "level4-mod8", 4, 2, 8,
    (
        LemmaCase(
            "pm_identity", "b-c = 0 (mod 8)",
            expand_pm([(1, 0, 0, 1), (1, 4, 4, 1), (-3, 0, 0, -3), (-3, 4, 4, -3)], 8)),
        LemmaCase(
            "pm_s2_even", "b-c = 0 (mod 8)",
            expand_pm([(1, 2, 2, -3), (1, -2, -2, -3), (-3, 2, 2, 1), (-3, -2, -2, 1)], 8)),
        LemmaCase(
            "pm_t", "a+d = 4 (mod 8)",
            expand_pm([(0, -1, 1, 4), (0, 3, -3, 4), (4, -1, 1, 0), (4, 3, -3, 0)], 8)),
        LemmaCase(
            "pm_s2_odd", "a+d = 4 (mod 8)",
            expand_pm([(2, -1, -3, 2), (2, 3, 1, 2), (-2, -1, -3, -2), (-2, 3, 1, -2)], 8)),
    ),
)

# -- level 4, classes mod 16 (branch integer mod 4) -------------------------

_L4_MOD16_IDENTITY = literal(
    [(1, 0, 0, 1), (1, 4, 4, 1), (1, -4, -4, 1), (1, 8, 8, 1),
     (5, 0, 0, -3), (5, 4, 4, -3), (5, -4, -4, -3), (5, 8, 8, -3),
     (-7, 0, 0, -7), (-7, 4, 4, -7), (-7, -4, -4, -7), (-7, 8, 8, -7),
     (-3, 0, 0, 5), (-3, 4, 4, 5), (-3, -4, -4, 5), (-3, 8, 8, 5),
     (-1, 0, 8, -1), (-1, 4, -4, -1), (-1, 8, 0, -1), (-1, -4, 4, -1),
     (3, 0, 8, -5), (3, 4, -4, -5), (3, 8, 0, -5), (3, -4, 4, -5),
     (7, 0, 8, 7), (7, 4, -4, 7), (7, 8, 0, 7), (7, -4, 4, 7),
     (-5, 0, 8, 3), (-5, 4, -4, 3), (-5, 8, 0, 3), (-5, -4, 4, 3)], 16)

_L4_MOD16_S2_EVEN = literal(
    [(1, 2, 2, 5), (5, 2, 2, 1), (-7, 2, 2, -3), (-3, 2, 2, -7),
     (1, 6, 6, 5), (5, 6, 6, 1), (-7, 6, 6, -3), (-3, 6, 6, -7),
     (1, -6, -6, 5), (5, -6, -6, 1), (-7, -6, -6, -3), (-3, -6, -6, -7),
     (1, -2, -2, 5), (5, -2, -2, 1), (-7, -2, -2, -3), (-3, -2, -2, -7),
     (3, 2, -6, 7), (7, 2, -6, 3), (-5, 2, -6, -1), (-1, 2, -6, -5),
     (3, 6, -2, 7), (7, 6, -2, 3), (-5, 6, -2, -1), (-1, 6, -2, -5),
     (3, -6, 2, 7), (7, -6, 2, 3), (-5, -6, 2, -1), (-1, -6, 2, -5),
     (3, -2, 6, 7), (7, -2, 6, 3), (-5, -2, 6, -1), (-1, -2, 6, -5)], 16)

_L4_MOD16_T = literal(
    [(0, 3, 5, -4), (0, 7, -7, -4), (0, -5, -3, -4), (0, -1, 1, -4),
     (4, 3, 5, 8), (4, 7, -7, 8), (4, -5, -3, 8), (4, -1, 1, 8),
     (8, 3, 5, 4), (8, 7, -7, 4), (8, -5, -3, 4), (8, -1, 1, 4),
     (-4, 3, 5, 0), (-4, 7, -7, 0), (-4, -5, -3, 0), (-4, -1, 1, 0),
     (0, 1, -1, -4), (0, 5, 3, -4), (0, -7, 7, -4), (0, -3, -5, -4),
     (4, 1, -1, 8), (4, 5, 3, 8), (4, -7, 7, 8), (4, -3, -5, 8),
     (8, 1, -1, 4), (8, 5, 3, 4), (8, -7, 7, 4), (8, -3, -5, 4),
     (-4, 1, -1, 0), (-4, 5, 3, 0), (-4, -7, 7, 0), (-4, -3, -5, 0)], 16)

_L4_MOD16_S2_ODD = literal(
    [(2, 3, 1, -6), (6, 3, 1, 6), (-6, 3, 1, 2), (-2, 3, 1, -2),
     (2, 7, 5, -6), (6, 7, 5, 6), (-6, 7, 5, 2), (-2, 7, 5, -2),
     (2, -5, -7, -6), (6, -5, -7, 6), (-6, -5, -7, 2), (-2, -5, -7, -2),
     (2, -1, -3, -6), (6, -1, -3, 6), (-6, -1, -3, 2), (-2, -1, -3, -2),
     (2, -7, -5, -6), (6, -7, -5, 6), (-6, -7, -5, 2), (-2, -7, -5, -2),
     (2, -3, -1, -6), (6, -3, -1, 6), (-6, -3, -1, 2), (-2, -3, -1, -2),
     (2, 1, 3, -6), (6, 1, 3, 6), (-6, 1, 3, 2), (-2, 1, 3, -2),
     (2, 5, 7, -6), (6, 5, 7, 6), (-6, 5, 7, 2), (-2, 5, 7, -2)], 16)

_L4_MOD16 = LemmaSpec(
    "level4-mod16", 4, 4, 16,
    (
        LemmaCase("pm_identity", "(b-c)/4 = -d+1 (mod 4)", _L4_MOD16_IDENTITY),
        LemmaCase("pm_s2_even", "(b-c)/4 = d-1 (mod 4)", _L4_MOD16_S2_EVEN),
        LemmaCase("pm_t", "(a+d)/4 = -1 (mod 4)", _L4_MOD16_T),
        LemmaCase("pm_s2_odd", "(a+d)/4 = -1 (mod 4)", _L4_MOD16_S2_ODD),
    ),
)

# -- level 4, classes mod 3 (branch integer mod 3) --------------------------

_L4_MOD3_CLASSES = expand_pm(
    [(1, 0, 0, 1), (0, -1, 1, 0), (1, 1, 1, -1), (1, -1, -1, -1)], 3)

_L4_MOD3 = LemmaSpec(
    "level4-mod3", 4, 3, 3,
    (
        LemmaCase("c_even", "M in the eight listed classes mod 3", _L4_MOD3_CLASSES),
        LemmaCase("c_odd", "M in the eight listed classes mod 3", _L4_MOD3_CLASSES),
    ),
)

LEMMAS: dict[str, LemmaSpec] = {
    spec.lemma_id: spec
    for spec in (_L3_MOD4, _L3_MOD9, _L4_MOD8, _L4_MOD16, _L4_MOD3)
}


def lemma_ids() -> list[str]:
    return list(LEMMAS)
