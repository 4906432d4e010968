# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled box-scan backend; contract identical to ``_boxscan_py``.

All entry arithmetic stays within int64: the largest monomial in the
branch integers is quartic in the box size, so boxes up to 10^4 are
safe.  Attained residue classes are tracked in flat flag arrays indexed
by the packed class key.
"""

from libc.stdlib cimport calloc, free

BACKEND_NAME = "cython"

LEMMA_CODES = {
    "level3-mod4": 1,
    "level3-mod9": 2,
    "level4-mod8": 3,
    "level4-mod16": 4,
    "level4-mod3": 5,
}

_MAX_BOX = 10_000


cdef inline long long ll_gcd(long long a, long long b) noexcept nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef inline long long floor_div(long long a, long long b) noexcept nogil:
    # b != 0; C division truncates toward zero.
    cdef long long q = a // b
    if a % b != 0 and ((a < 0) != (b < 0)):
        q -= 1
    return q


cdef inline long long ceil_div(long long a, long long b) noexcept nogil:
    return -floor_div(-a, b)


cdef inline long long pmod(long long a, long long m) noexcept nogil:
    cdef long long r = a % m
    if r < 0:
        r += m
    return r


cdef void egcd(long long a, long long b, long long *x, long long *y) noexcept nogil:
    # Bezout pair for gcd(a, b) == 1: x*a + y*b == 1.
    cdef long long old_r = a, r = b
    cdef long long old_s = 1, s = 0
    cdef long long old_t = 0, t = 1
    cdef long long q, tmp
    while r:
        q = old_r // r
        tmp = old_r - q * r; old_r = r; r = tmp
        tmp = old_s - q * s; old_s = s; s = tmp
        tmp = old_t - q * t; old_t = t; t = tmp
    if old_r < 0:
        old_s = -old_s
        old_t = -old_t
    x[0] = old_s
    y[0] = old_t


cdef inline long long f_level3(long long a, long long b, long long c, long long d) noexcept nogil:
    if pmod(c, 3) == 0:
        if c % 2 != 0:
            return 3 * c + ((a + d) * c) // 3 + (4 * b * d) // 3
        return 3 * (d - 1) + ((b - c) * d) // 3
    if c % 2 != 0:
        return 3 * (c + 2) + ((a + d) * c) // 3
    return 3 * (d + 1) + ((b - c) * d) // 3 + (4 * a * c) // 3


cdef inline long long g_level4(long long a, long long b, long long c, long long d) noexcept nogil:
    if c % 2 != 0:
        return 3 * (c + d - 2) + ((a + d) * c) // 4 + ((b + c) * d) // 4 - c * d * (1 + b * c)
    return 3 * (d - c - 1) + ((b - c) * d) // 4 + ((a - d) * c) // 4 + c * d * (1 - a * d)


cdef inline int case_level3(long long c) noexcept nogil:
    cdef int case = 0 if pmod(c, 3) == 0 else 2
    if c % 2 == 0:
        case += 1
    return case


cdef inline int case_level4(long long a, long long c) noexcept nogil:
    if c % 2 == 0:
        return 0 if pmod(c, 4) == 0 else 1
    return 2 if pmod(a, 4) == 0 else 3


cdef inline bint l4_mod3_member(long long a, long long b, long long c, long long d) noexcept nogil:
    cdef long long ra = pmod(a, 3), rb = pmod(b, 3), rc = pmod(c, 3), rd = pmod(d, 3)
    if ra == 1 and rb == 0 and rc == 0 and rd == 1: return True
    if ra == 2 and rb == 0 and rc == 0 and rd == 2: return True
    if ra == 0 and rb == 2 and rc == 1 and rd == 0: return True
    if ra == 0 and rb == 1 and rc == 2 and rd == 0: return True
    if ra == 1 and rb == 1 and rc == 1 and rd == 2: return True
    if ra == 2 and rb == 2 and rc == 2 and rd == 1: return True
    if ra == 1 and rb == 2 and rc == 2 and rd == 2: return True
    if ra == 2 and rb == 1 and rc == 1 and rd == 1: return True
    return False


cdef inline bint residue_condition(int code, int case, long long a, long long b,
                                   long long c, long long d) noexcept nogil:
    if code == 1:
        if case == 0:
            return pmod(a + d, 4) == 3
        if case == 1:
            return pmod(b - c - d + 1, 4) == 0
        if case == 2:
            return pmod(a + d, 4) == 1
        return pmod(b - c + d + 1, 4) == 0
    if code == 2:
        if case < 2:
            return pmod(b - c, 9) == 0
        return pmod(a + d, 9) == 0
    if code == 3:
        if case < 2:
            return pmod(b - c, 8) == 0
        return pmod(a + d, 8) == 4
    if code == 4:
        if case == 0:
            return pmod((b - c) // 4 + d - 1, 4) == 0
        if case == 1:
            return pmod((b - c) // 4 - d + 1, 4) == 0
        return pmod((a + d) // 4 + 1, 4) == 0
    return l4_mod3_member(a, b, c, d)


def scan_lemma(int code, long long box, int counterexample_limit=16,
               c_lo=None, c_hi=None):
    """Compiled scan; see ``_boxscan_py.scan_lemma`` for the contract."""
    if code < 1 or code > 5:
        raise ValueError(f"unknown lemma code {code}")
    if box < 1:
        raise ValueError(f"box must be >= 1, got {box}")
    if box > _MAX_BOX:
        raise ValueError(f"compiled backend supports box <= {_MAX_BOX}")
    cdef long long range_lo = -box if c_lo is None else max(<long long> c_lo, -box)
    cdef long long range_hi = box if c_hi is None else min(<long long> c_hi, box)

    cdef int level = 3 if code <= 2 else 4
    cdef long long divisor
    cdef long long class_mod
    if code == 1: divisor, class_mod = 4, 4
    elif code == 2: divisor, class_mod = 3, 9
    elif code == 3: divisor, class_mod = 2, 8
    elif code == 4: divisor, class_mod = 4, 16
    else: divisor, class_mod = 3, 3
    cdef int ncases = 2 if code == 5 else 4

    cdef long long flag_size = class_mod * class_mod * class_mod * class_mod
    cdef unsigned char *flags = <unsigned char *> calloc(ncases * flag_size, 1)
    if flags == NULL:
        raise MemoryError()

    cdef long long checked[4]
    cdef int i
    for i in range(4):
        checked[i] = 0
    counterexamples = [[] for _ in range(ncases)]
    cdef long long members = 0

    cdef long long c, d, a0, b0, t, t_lo, t_hi, lo1, hi1, lo2, hi2
    cdef long long a, b, fg, key
    cdef int case
    cdef bint vanishes, holds

    try:
        for c in range(range_lo, range_hi + 1):
            for d in range(-box, box + 1):
                if ll_gcd(c, d) != 1:
                    continue
                egcd(d, -c, &a0, &b0)
                # a = a0 + t*c in [-box, box]
                if c > 0:
                    lo1 = ceil_div(-box - a0, c); hi1 = floor_div(box - a0, c)
                elif c < 0:
                    lo1 = ceil_div(box - a0, c); hi1 = floor_div(-box - a0, c)
                else:
                    if a0 < -box or a0 > box:
                        continue
                    lo1 = -box - 1; hi1 = box + 1  # unconstrained; b-range will bind
                # b = b0 + t*d in [-box, box]
                if d > 0:
                    lo2 = ceil_div(-box - b0, d); hi2 = floor_div(box - b0, d)
                elif d < 0:
                    lo2 = ceil_div(box - b0, d); hi2 = floor_div(-box - b0, d)
                else:
                    if b0 < -box or b0 > box:
                        continue
                    lo2 = -box - 1; hi2 = box + 1
                t_lo = lo1 if lo1 > lo2 else lo2
                t_hi = hi1 if hi1 < hi2 else hi2
                for t in range(t_lo, t_hi + 1):
                    a = a0 + t * c
                    b = b0 + t * d
                    if pmod(a - d, level) or pmod(b + c, level):
                        continue
                    members += 1
                    if level == 3:
                        case = case_level3(c)
                        fg = f_level3(a, b, c, d)
                    elif code == 5:
                        case = 0 if c % 2 == 0 else 1
                        fg = g_level4(a, b, c, d)
                    else:
                        case = case_level4(a, c)
                        fg = g_level4(a, b, c, d)
                    checked[case] += 1
                    vanishes = pmod(fg, divisor) == 0
                    holds = residue_condition(code, case, a, b, c, d)
                    if vanishes != holds:
                        if len(<list> counterexamples[case]) < counterexample_limit:
                            counterexamples[case].append(
                                (int(a), int(b), int(c), int(d)))
                    if vanishes:
                        key = ((pmod(a, class_mod) * class_mod + pmod(b, class_mod))
                               * class_mod + pmod(c, class_mod)) * class_mod + pmod(d, class_mod)
                        flags[case * flag_size + key] = 1

        cases = []
        for i in range(ncases):
            attained = set()
            for key in range(flag_size):
                if flags[i * flag_size + key]:
                    attained.add((
                        int(key // (class_mod * class_mod * class_mod) % class_mod),
                        int(key // (class_mod * class_mod) % class_mod),
                        int(key // class_mod % class_mod),
                        int(key % class_mod),
                    ))
            cases.append((int(checked[i]), counterexamples[i], attained))
        return int(members), cases
    finally:
        free(flags)
