"""Kernel classification of the power multipliers, exact and by congruence.

The k-th power multiplier is exp(pi*i*k*f/6) (level 3, f = branch
integer; level 4 uses g), so membership in its kernel means
k*f = 0 mod 12.  The congruence route re-states that condition per
residue class of k mod 12:

    k = 0          whole group
    k = 6          f = 0 mod 2   (mod-2 / mod-8 class conditions)
    k = +-3        f = 0 mod 4   (mod-4 / mod-16 conditions)
    k = +-4        f = 0 mod 3   (mod-9 / mod-3 conditions)
    k = +-2        kernel(6)  intersect  kernel(4)
    k = +-1, +-5   kernel(3)  intersect  kernel(4)

The intersections are evaluated literally, not re-derived.  Coset
representatives of the kernel inside the group are powers of the
translation S^stride with stride 3 (level 3) or 4 (level 4).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import _scan
from .lemma_data import LEMMAS, LemmaSpec
from .multiplier import ResidueClass, branch_of, f_value, g_value, membership
from .sl2z import Mat2, S

__all__ = [
    "PowerClass",
    "in_kernel_by_value",
    "in_kernel_by_congruence",
    "kernel_coset_reps",
    "LemmaReport",
    "LemmaCaseReport",
    "verify_residue_lemma",
    "scan_backend_name",
]


@dataclass(frozen=True)
class PowerClass:
    """Power exponent k mod 12 together with the level."""

    k_mod_12: int
    level: int

    def __post_init__(self):
        if not 0 <= self.k_mod_12 < 12:
            raise ValueError(f"k must be reduced mod 12, got {self.k_mod_12}")
        if self.level not in (3, 4):
            raise ValueError(f"level must be 3 or 4, got {self.level}")

    @classmethod
    def of(cls, k: int, level: int) -> "PowerClass":
        return cls(k % 12, level)

    def image_size(self) -> int:
        """Number of values the power multiplier attains: 12/gcd(k,12)."""
        return 12 // gcd(self.k_mod_12, 12)


def _branch_value(m: Mat2, level: int) -> int:
    return f_value(m) if level == 3 else g_value(m)


def in_kernel_by_value(m: Mat2, pc: PowerClass) -> bool:
    """Direct evaluation: k * (branch integer) = 0 mod 12."""
    if not membership(m, pc.level):
        raise ValueError(f"{m.entries()} is not a level-{pc.level} member")
    return pc.k_mod_12 * _branch_value(m, pc.level) % 12 == 0


def _kernel_mod2(m: Mat2, level: int) -> bool:
    # k = 6: branch integer even.
    a, b, c, d = m.entries()
    if level == 3:
        return (a % 2, b % 2, c % 2, d % 2) in {(1, 0, 0, 1), (0, 1, 1, 1), (1, 1, 1, 0)}
    if c % 2 == 0:
        return (b - c) % 8 == 0
    return (a + d) % 8 == 4


def _kernel_mod4(m: Mat2, level: int) -> bool:
    # k = +-3: branch integer divisible by 4.
    a, b, c, d = m.entries()
    if level == 3:
        branch = branch_of(m, 3)
        if branch.residue_class is ResidueClass.PM_IDENTITY:
            if branch.c_odd:
                return (a + d) % 4 == 3
            return (b - c - d + 1) % 4 == 0
        if branch.c_odd:
            return (a + d) % 4 == 1
        return (b - c + d + 1) % 4 == 0
    if c % 2:
        return ((a + d) // 4 + 1) % 4 == 0
    if c % 4 == 0:
        return ((b - c) // 4 + d - 1) % 4 == 0
    return ((b - c) // 4 - d + 1) % 4 == 0


_L4_MOD3_KERNEL = frozenset({
    (1, 0, 0, 1), (2, 0, 0, 2), (0, 2, 1, 0), (0, 1, 2, 0),
    (1, 1, 1, 2), (2, 2, 2, 1), (1, 2, 2, 2), (2, 1, 1, 1),
})


def _kernel_mod3(m: Mat2, level: int) -> bool:
    # k = +-4: branch integer divisible by 3.
    a, b, c, d = m.entries()
    if level == 3:
        if branch_of(m, 3).residue_class is ResidueClass.PM_IDENTITY:
            return (b - c) % 9 == 0
        return (a + d) % 9 == 0
    return (a % 3, b % 3, c % 3, d % 3) in _L4_MOD3_KERNEL


def in_kernel_by_congruence(m: Mat2, pc: PowerClass) -> bool:
    """The congruence characterization of the kernel for k's class mod 12."""
    if not membership(m, pc.level):
        raise ValueError(f"{m.entries()} is not a level-{pc.level} member")
    k, level = pc.k_mod_12, pc.level
    if k == 0:
        return True
    if k == 6:
        return _kernel_mod2(m, level)
    if k in (3, 9):
        return _kernel_mod4(m, level)
    if k in (4, 8):
        return _kernel_mod3(m, level)
    if k in (2, 10):
        return _kernel_mod2(m, level) and _kernel_mod3(m, level)
    # k coprime to 12
    return _kernel_mod4(m, level) and _kernel_mod3(m, level)


def kernel_coset_reps(pc: PowerClass) -> list[Mat2]:
    """Coset representatives S^(stride*n) of the kernel inside the group.

    One representative per attained multiplier value; the stride is the
    level-appropriate translation step (S^3 resp. S^4 generate the
    translations inside the group).
    """
    stride = pc.level
    if pc.k_mod_12 == 0:
        return [S ** 0]
    return [S ** (stride * n) for n in range(pc.image_size())]


def scan_backend_name() -> str:
    return _scan.backend_name()


@dataclass(frozen=True)
class LemmaCaseReport:
    name: str
    condition: str
    checked: int
    counterexamples: tuple[tuple[int, int, int, int], ...]
    attained: frozenset[tuple[int, int, int, int]]
    expected: frozenset[tuple[int, int, int, int]]

    @property
    def missing_classes(self) -> list[tuple[int, int, int, int]]:
        return sorted(self.expected - self.attained)

    @property
    def extra_classes(self) -> list[tuple[int, int, int, int]]:
        return sorted(self.attained - self.expected)

    def biconditional_holds(self) -> bool:
        return not self.counterexamples

    def classes_match(self) -> bool:
        return self.attained == self.expected


@dataclass(frozen=True)
class LemmaReport:
    lemma_id: str
    box: int
    members_scanned: int
    cases: tuple[LemmaCaseReport, ...]

    def counterexample_count(self) -> int:
        return sum(len(c.counterexamples) for c in self.cases)

    def biconditional_holds(self) -> bool:
        return all(c.biconditional_holds() for c in self.cases)

    def classes_match(self) -> bool:
        return all(c.classes_match() for c in self.cases)

    def classes_attained_subset(self) -> bool:
        """No class outside the expected table is ever attained."""
        return all(not c.extra_classes for c in self.cases)

    def to_json(self) -> dict:
        return {
            "lemma_id": self.lemma_id,
            "box": self.box,
            "members_scanned": self.members_scanned,
            "counterexamples": [
                {"case": c.name, "matrix": ",".join(map(str, mat))}
                for c in self.cases for mat in c.counterexamples
            ],
            "attained_classes": [
                {
                    "case": c.name,
                    "condition": c.condition,
                    "checked": c.checked,
                    "classes": [list(k) for k in sorted(c.attained)],
                    "matches_expected": c.classes_match(),
                    "missing": [list(k) for k in c.missing_classes],
                    "extra": [list(k) for k in c.extra_classes],
                }
                for c in self.cases
            ],
        }


def _merge_scans(first, second, counterexample_limit: int):
    """Combine two partial scan results; associative and commutative up
    to counterexample truncation order."""
    members = first[0] + second[0]
    cases = [
        (c1 + c2, (x1 + x2)[:counterexample_limit], a1 | a2)
        for (c1, x1, a1), (c2, x2, a2) in zip(first[1], second[1])
    ]
    return members, cases


def _partitions(box: int, workers: int) -> list[tuple[int, int]]:
    span = 2 * box + 1
    chunk = -(-span // workers)
    bounds = []
    lo = -box
    while lo <= box:
        hi = min(lo + chunk - 1, box)
        bounds.append((lo, hi))
        lo = hi + 1
    return bounds


def verify_residue_lemma(lemma_id: str, box: int = 40,
                         counterexample_limit: int = 16,
                         workers: int = 1) -> LemmaReport:
    """Exhaustively check one residue lemma over an entry box.

    Scans every group member with |entries| <= box, tests the
    biconditional between the vanishing of the branch integer and the
    lemma's congruence, and collects the attained residue classes for
    comparison with the expected tables.  Counterexamples are reported,
    not raised.  With workers > 1 the lower-left entry range is
    partitioned across processes and the partial reports merged.

    Note: the attained-class set only reaches the full table once the
    box exceeds the lifting radius of every class; box 55 suffices for
    all five lemmas (the level-4 mod-16 table is the binding one).
    """
    spec: LemmaSpec | None = LEMMAS.get(lemma_id)
    if spec is None:
        raise ValueError(f"unknown lemma id {lemma_id!r}; known: {sorted(LEMMAS)}")
    code = _scan.LEMMA_CODES[lemma_id]
    if workers <= 1:
        members, cases = _scan.scan_lemma(code, box, counterexample_limit)
    else:
        from concurrent.futures import ProcessPoolExecutor

        parts = _partitions(box, workers)
        with ProcessPoolExecutor(max_workers=len(parts)) as pool:
            futures = [
                pool.submit(_scan.scan_lemma, code, box, counterexample_limit, lo, hi)
                for lo, hi in parts
            ]
            merged = futures[0].result()
            for future in futures[1:]:
                merged = _merge_scans(merged, future.result(), counterexample_limit)
        members, cases = merged
    case_reports = tuple(
        LemmaCaseReport(
            name=case_spec.name,
            condition=case_spec.condition,
            checked=checked,
            counterexamples=tuple(tuple(x) for x in cex),
            attained=frozenset(attained),
            expected=case_spec.classes,
        )
        for case_spec, (checked, cex, attained) in zip(spec.cases, cases)
    )
    return LemmaReport(lemma_id, box, members, case_reports)
