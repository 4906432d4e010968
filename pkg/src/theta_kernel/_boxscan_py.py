"""Pure-Python box-scan backend for the residue lemmas.

Enumerates every group member with entries in [-box, box] and, per
branch case, tallies the biconditional "branch integer = 0 mod r  <=>
linear congruence" together with the attained residue classes.  The
compiled backend in ``_boxscan.pyx`` implements the identical contract;
``tests/test_scan_backends.py`` holds them to byte-identical output.

Enumeration walks coprime bottom rows (c, d) and solves a*d - b*c = 1,
so the cost is quadratic in the box size rather than quartic.
"""

from __future__ import annotations

from math import gcd

BACKEND_NAME = "python"

LEMMA_CODES = {
    "level3-mod4": 1,
    "level3-mod9": 2,
    "level4-mod8": 3,
    "level4-mod16": 4,
    "level4-mod3": 5,
}

_CASE_COUNTS = {1: 4, 2: 4, 3: 4, 4: 4, 5: 2}

# Kernel classes mod 3 for the level-4 mod-3 lemma; here the residue
# condition and the class list coincide.
_L4_MOD3_SET = frozenset({
    (1, 0, 0, 1), (2, 0, 0, 2), (0, 2, 1, 0), (0, 1, 2, 0),
    (1, 1, 1, 2), (2, 2, 2, 1), (1, 2, 2, 2), (2, 1, 1, 1),
})


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _t_range(x0: int, step: int, box: int) -> tuple[int, int] | None:
    """All t with -box <= x0 + t*step <= box; None when empty."""
    if step == 0:
        return (-(1 << 62), 1 << 62) if -box <= x0 <= box else None
    lo, hi = -box - x0, box - x0
    if step > 0:
        t_lo, t_hi = -((-lo) // step), hi // step
    else:
        t_lo, t_hi = -((-hi) // step), lo // step
    return (t_lo, t_hi) if t_lo <= t_hi else None


def _f_level3(a: int, b: int, c: int, d: int) -> int:
    if c % 3 == 0:
        if c % 2:
            num1, num2 = (a + d) * c, 4 * b * d
            if num1 % 3 or num2 % 3:
                raise RuntimeError("inexact division; branch selection bug")
            return 3 * c + num1 // 3 + num2 // 3
        num = (b - c) * d
        if num % 3:
            raise RuntimeError("inexact division; branch selection bug")
        return 3 * (d - 1) + num // 3
    if c % 2:
        num = (a + d) * c
        if num % 3:
            raise RuntimeError("inexact division; branch selection bug")
        return 3 * (c + 2) + num // 3
    num1, num2 = (b - c) * d, 4 * a * c
    if num1 % 3 or num2 % 3:
        raise RuntimeError("inexact division; branch selection bug")
    return 3 * (d + 1) + num1 // 3 + num2 // 3


def _g_level4(a: int, b: int, c: int, d: int) -> int:
    if c % 2:
        num1, num2 = (a + d) * c, (b + c) * d
        if num1 % 4 or num2 % 4:
            raise RuntimeError("inexact division; branch selection bug")
        return 3 * (c + d - 2) + num1 // 4 + num2 // 4 - c * d * (1 + b * c)
    num1, num2 = (b - c) * d, (a - d) * c
    if num1 % 4 or num2 % 4:
        raise RuntimeError("inexact division; branch selection bug")
    return 3 * (d - c - 1) + num1 // 4 + num2 // 4 + c * d * (1 - a * d)


def _case_level3(c: int) -> int:
    return (0 if c % 3 == 0 else 2) + (0 if c % 2 else 1)


def _case_level4(a: int, c: int) -> int:
    if c % 2 == 0:
        return 0 if c % 4 == 0 else 1
    return 2 if a % 4 == 0 else 3


def _residue_condition(code: int, case: int, a: int, b: int, c: int, d: int) -> bool:
    if code == 1:
        if case == 0:
            return (a + d) % 4 == 3
        if case == 1:
            return (b - c - d + 1) % 4 == 0
        if case == 2:
            return (a + d) % 4 == 1
        return (b - c + d + 1) % 4 == 0
    if code == 2:
        if case < 2:
            return (b - c) % 9 == 0
        return (a + d) % 9 == 0
    if code == 3:
        if case < 2:
            return (b - c) % 8 == 0
        return (a + d) % 8 == 4
    if code == 4:
        if case == 0:
            return ((b - c) // 4 + d - 1) % 4 == 0
        if case == 1:
            return ((b - c) // 4 - d + 1) % 4 == 0
        return ((a + d) // 4 + 1) % 4 == 0
    # code 5
    return (a % 3, b % 3, c % 3, d % 3) in _L4_MOD3_SET


def scan_lemma(code: int, box: int, counterexample_limit: int = 16,
               c_lo: int | None = None, c_hi: int | None = None):
    """Scan one lemma over the entry box.

    Returns ``(members_scanned, cases)`` where ``cases[i]`` is a tuple
    ``(checked, counterexamples, attained)`` for the i-th branch case:
    matrices violating the biconditional (capped at the limit) and the
    set of residue classes mod the lemma's class modulus attained by
    matrices with vanishing branch integer.

    ``c_lo``/``c_hi`` restrict the lower-left entry to a sub-range so
    the scan can be partitioned; partial results merge associatively
    (counts add, class sets union).
    """
    if code not in _CASE_COUNTS:
        raise ValueError(f"unknown lemma code {code}")
    if box < 1:
        raise ValueError(f"box must be >= 1, got {box}")
    c_lo = -box if c_lo is None else max(c_lo, -box)
    c_hi = box if c_hi is None else min(c_hi, box)
    level = 3 if code <= 2 else 4
    divisor = {1: 4, 2: 3, 3: 2, 4: 4, 5: 3}[code]
    class_mod = {1: 4, 2: 9, 3: 8, 4: 16, 5: 3}[code]

    ncases = _CASE_COUNTS[code]
    checked = [0] * ncases
    counterexamples: list[list[tuple[int, int, int, int]]] = [[] for _ in range(ncases)]
    attained: list[set[tuple[int, int, int, int]]] = [set() for _ in range(ncases)]
    members = 0

    for c in range(c_lo, c_hi + 1):
        for d in range(-box, box + 1):
            if gcd(c, d) != 1:
                continue
            _, a0, b0 = _egcd(d, -c)
            ra = _t_range(a0, c, box)
            if ra is None:
                continue
            rb = _t_range(b0, d, box)
            if rb is None:
                continue
            t_lo, t_hi = max(ra[0], rb[0]), min(ra[1], rb[1])
            for t in range(t_lo, t_hi + 1):
                a, b = a0 + t * c, b0 + t * d
                if (a - d) % level or (b + c) % level:
                    continue
                members += 1
                if level == 3:
                    case = _case_level3(c)
                    fg = _f_level3(a, b, c, d)
                elif code == 5:
                    case = 0 if c % 2 == 0 else 1
                    fg = _g_level4(a, b, c, d)
                else:
                    case = _case_level4(a, c)
                    fg = _g_level4(a, b, c, d)
                checked[case] += 1
                vanishes = fg % divisor == 0
                holds = _residue_condition(code, case, a, b, c, d)
                if vanishes != holds:
                    if len(counterexamples[case]) < counterexample_limit:
                        counterexamples[case].append((a, b, c, d))
                if vanishes:
                    attained[case].add(
                        (a % class_mod, b % class_mod, c % class_mod, d % class_mod))
    cases = [
        (checked[i], counterexamples[i], attained[i]) for i in range(ncases)
    ]
    return members, cases
