"""Property suites behind the "verify" CLI command and the acceptance tests.

Each suite re-checks one family of exact results:

    character            multiplicativity of the level multipliers
    closed-form          closed form == eta-pair decomposition
    kernels              value predicate == congruence predicate; image sizes
    lemmas               box-scan biconditionals and residue-class tables
    cosets               the six-representative partitions and the index
    cusps                two parabolic-point classes per level
    oracle               q-series transformation-law residuals
    formula-arbitration  which reading of the level-4 c-odd formula survives

Suites are deterministic functions of the seed; reports are plain data
suitable for JSON/CSV rendering.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass, field
from functools import lru_cache

from . import cosets as cosets_mod
from . import kernels as kernels_mod
from . import oracle as oracle_mod
from .cosets import INFINITY, CuspPoint
from .kernels import PowerClass
from .lemma_data import lemma_ids
from .multiplier import (
    GVariant,
    membership,
    nu_level,
    nu_power,
    nu_via_decomposition,
)
from .oracle import OracleConfig
from .sl2z import Mat2, random_element, random_subgroup_element

__all__ = [
    "SUITE_NAMES",
    "VerifyConfig",
    "CaseResult",
    "SuiteReport",
    "run_suite",
    "run_suites",
]

SUITE_NAMES = (
    "character",
    "closed-form",
    "kernels",
    "lemmas",
    "cosets",
    "cusps",
    "oracle",
    "formula-arbitration",
)

# Coverage of the level-4 mod-16 class table needs entries up to 55
# (e.g. the class of (7,48;8,55) has no smaller lift), so the class-set
# comparison runs on a slightly larger box than the biconditional scan.
CLASS_COVERAGE_BOX = 56

# Forced arbitration inputs: (2,3;1,2) separates the (1+bc) vs (1+cd)
# product terms at the default base point; (4,5;3,4) separates the
# 3(c+d-2) vs 3(d-1) constant terms but its image point only clears the
# evaluation floor at a lower base point.
_ARBITRATION_FORCED = Mat2(2, 3, 1, 2)
_ARBITRATION_CONSTANT_AXIS = Mat2(4, 5, 3, 4)
_CONSTANT_AXIS_BASE = 1.5j


@dataclass(frozen=True)
class VerifyConfig:
    samples: int | None = None  # per-suite defaults when None
    seed: int = 0
    tol: float = 1e-9
    box: int = 40
    max_word_length: int = 20

    def exact_samples(self) -> int:
        return self.samples if self.samples is not None else 10_000

    def oracle_samples(self) -> int:
        return self.samples if self.samples is not None else 120

    def partition_samples(self) -> int:
        return self.samples if self.samples is not None else 500

    def oracle_config(self) -> OracleConfig:
        return OracleConfig(compare_tol=self.tol, seed=self.seed)


@dataclass(frozen=True)
class CaseResult:
    suite: str
    case: str
    verdict: str  # "PASS" | "FAIL"
    residual: float | None = None
    detail: str = ""

    def passed(self) -> bool:
        return self.verdict == "PASS"

    def to_json(self) -> dict:
        out: dict = {"suite": self.suite, "case": self.case, "verdict": self.verdict}
        if self.residual is not None:
            out["residual"] = self.residual
        if self.detail:
            out["detail"] = self.detail
        return out

    def to_csv_row(self) -> str:
        residual = "" if self.residual is None else repr(self.residual)
        return f"{self.suite},{self.case},{self.verdict},{residual}"


@dataclass
class SuiteReport:
    name: str
    cases: list[CaseResult] = field(default_factory=list)

    def passed(self) -> bool:
        return all(case.passed() for case in self.cases)

    def add(self, case: str, ok: bool, residual: float | None = None,
            detail: str = "") -> None:
        self.cases.append(CaseResult(self.name, case, "PASS" if ok else "FAIL",
                                     residual, detail))

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed(),
            "cases": [case.to_json() for case in self.cases],
        }


def _rng(cfg: VerifyConfig, label: str) -> random.Random:
    return random.Random(f"{cfg.seed}/{label}")


@lru_cache(maxsize=32)
def _pool(level: int, count: int, seed: int, max_word_length: int) -> tuple[Mat2, ...]:
    rng = random.Random(f"{seed}/pool/{level}")
    return tuple(
        random_subgroup_element(rng, lambda m: membership(m, level), max_word_length)
        for _ in range(count)
    )


def member_pool(cfg: VerifyConfig, level: int, count: int) -> tuple[Mat2, ...]:
    return _pool(level, count, cfg.seed, cfg.max_word_length)


# -- exact suites ------------------------------------------------------------

def suite_character(cfg: VerifyConfig) -> SuiteReport:
    report = SuiteReport("character")
    n = cfg.exact_samples()
    for level in (3, 4):
        pool = member_pool(cfg, level, 2 * n)
        failures = sum(
            1 for m1, m2 in zip(pool[:n], pool[n:])
            if nu_level(m1 * m2, level) != nu_level(m1, level) * nu_level(m2, level)
        )
        report.add(f"character-law-level{level}", failures == 0,
                   detail=f"{failures} failures in {n} pairs")
    return report


def suite_closed_form(cfg: VerifyConfig) -> SuiteReport:
    report = SuiteReport("closed-form")
    n = cfg.exact_samples()
    for level in (3, 4):
        pool = member_pool(cfg, level, 2 * n)[:n]
        failures = sum(
            1 for m in pool if nu_level(m, level) != nu_via_decomposition(m, level)
        )
        report.add(f"closed-form-level{level}", failures == 0,
                   detail=f"{failures} mismatches in {n} samples")
    return report


def suite_kernels(cfg: VerifyConfig) -> SuiteReport:
    report = SuiteReport("kernels")
    n = cfg.exact_samples()
    for level in (3, 4):
        pool = member_pool(cfg, level, 2 * n)[:n]
        for k in range(12):
            pc = PowerClass(k, level)
            disagreements = 0
            values = set()
            in_kernel = []
            for m in pool:
                by_value = kernels_mod.in_kernel_by_value(m, pc)
                if by_value != kernels_mod.in_kernel_by_congruence(m, pc):
                    disagreements += 1
                values.add(nu_power(m, k, level).exponent)
                if by_value and len(in_kernel) < 64:
                    in_kernel.append(m)
            report.add(f"kernel-agreement-level{level}-k{k}", disagreements == 0,
                       detail=f"{disagreements} disagreements in {n} samples")
            reps = kernels_mod.kernel_coset_reps(pc)
            rep_values = {nu_power(r, k, level).exponent for r in reps}
            ok = (len(values) == pc.image_size() == len(reps)
                  and len(rep_values) == len(reps) and rep_values == values)
            report.add(
                f"kernel-image-level{level}-k{k}", ok,
                detail=(f"sampled image {len(values)}, reps {len(reps)}, "
                        f"expected {pc.image_size()}"))
        # Products and inverses of kernel members stay in the kernel.
        closure_ok = True
        for k in (1, 6):
            pc = PowerClass(k, level)
            members = [m for m in pool if kernels_mod.in_kernel_by_value(m, pc)][:100]
            for m1, m2 in zip(members, reversed(members)):
                if not kernels_mod.in_kernel_by_value(m1 * m2, pc):
                    closure_ok = False
                if not kernels_mod.in_kernel_by_value(m1.inverse(), pc):
                    closure_ok = False
        report.add(f"kernel-closure-level{level}", closure_ok)
    return report


def suite_lemmas(cfg: VerifyConfig) -> SuiteReport:
    report = SuiteReport("lemmas")
    coverage_box = max(cfg.box, CLASS_COVERAGE_BOX)
    for lemma_id in lemma_ids():
        scan = kernels_mod.verify_residue_lemma(lemma_id, cfg.box)
        report.add(
            f"{lemma_id}-biconditional",
            scan.biconditional_holds() and scan.classes_attained_subset(),
            detail=(f"box {scan.box}: {scan.members_scanned} members, "
                    f"{scan.counterexample_count()} counterexamples"))
        cover = scan if scan.classes_match() else kernels_mod.verify_residue_lemma(
            lemma_id, coverage_box)
        missing = [
            (c.name, k) for c in cover.cases for k in c.missing_classes
        ]
        extra = [(c.name, k) for c in cover.cases for k in c.extra_classes]
        report.add(
            f"{lemma_id}-classes",
            cover.classes_match() and cover.biconditional_holds(),
            detail=(f"box {cover.box}: missing {missing or 'none'}, "
                    f"extra {extra or 'none'}"))
    return report


def suite_cosets(cfg: VerifyConfig) -> SuiteReport:
    report = SuiteReport("cosets")
    n = cfg.partition_samples()
    rng = _rng(cfg, "cosets")
    for level in (3, 4):
        reps = cosets_mod.coset_reps(level)
        failures = 0
        for _ in range(n):
            m = random_element(rng, cfg.max_word_length)
            try:
                cosets_mod.coset_rep_of(m, level)
            except cosets_mod.PartitionError:
                failures += 1
        report.add(f"coset-partition-level{level}", failures == 0,
                   detail=f"{failures} partition failures in {n} samples")
        distinct = all(
            not membership(ri * rj.inverse(), level)
            for i, ri in enumerate(reps) for j, rj in enumerate(reps) if i != j
        )
        report.add(f"coset-distinctness-level{level}", distinct)
        idx = cosets_mod.index(level)
        report.add(f"coset-index-level{level}", idx == 6 == len(reps),
                   detail=f"index {idx}, reps {len(reps)}")
    return report


def suite_cusps(cfg: VerifyConfig) -> SuiteReport:
    report = SuiteReport("cusps")
    minus_one = CuspPoint(-1, 1)
    zero = CuspPoint(0, 1)
    extra_probes = [CuspPoint.make(p, q) for p, q in
                    ((1, 2), (-1, 2), (1, 3), (-1, 3), (2, 3), (-2, 3), (2, 1), (-2, 1))]
    for level in (3, 4):
        classes = cosets_mod.cusp_classes(level)
        report.add(f"cusp-count-level{level}", len(classes) == 2,
                   detail=f"{len(classes)} classes: "
                          + "; ".join(",".join(map(str, c)) for c in classes))
        report.add(f"cusp-inf-equiv-0-level{level}",
                   cosets_mod.cusp_equivalent(INFINITY, zero, level))
        report.add(f"cusp-inf-inequiv-minus1-level{level}",
                   not cosets_mod.cusp_equivalent(INFINITY, minus_one, level))
        flat = [p for cls in classes for p in cls]
        report.add(f"cusp-classes-contain-inf-and-minus1-level{level}",
                   INFINITY in flat and minus_one in flat)
        # reflexivity / symmetry / transitivity on the probe set
        points = [INFINITY, zero, minus_one, CuspPoint(1, 1)] + extra_probes
        ok = all(cosets_mod.cusp_equivalent(p, p, level) for p in points)
        eq = {(i, j): cosets_mod.cusp_equivalent(p, q, level)
              for i, p in enumerate(points) for j, q in enumerate(points)}
        ok = ok and all(eq[i, j] == eq[j, i] for i, _ in enumerate(points)
                        for j, _ in enumerate(points))
        ok = ok and all(
            not (eq[i, j] and eq[j, k]) or eq[i, k]
            for i in range(len(points)) for j in range(len(points))
            for k in range(len(points)))
        report.add(f"cusp-equivalence-relation-level{level}", ok)
    return report


# -- oracle suites -----------------------------------------------------------

def _sample_transformable(cfg: VerifyConfig, level: int, count: int,
                          oc: OracleConfig, c_bound: int = 20,
                          c_odd_only: bool = False) -> list[Mat2]:
    rng = _rng(cfg, f"oracle/{level}/{c_odd_only}")
    out: list[Mat2] = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 1000 * count:
            raise RuntimeError("sampling of transformable members stalled")
        m = random_subgroup_element(rng, lambda x: membership(x, level),
                                    cfg.max_word_length)
        if abs(m.c) > c_bound:
            continue
        if c_odd_only and m.c % 2 == 0:
            continue
        if not oracle_mod.transformable(m, level, oc):
            continue
        out.append(m)
    return out


def suite_oracle(cfg: VerifyConfig) -> SuiteReport:
    report = SuiteReport("oracle")
    oc = cfg.oracle_config()
    n = cfg.oracle_samples()

    value = oracle_mod.eta(1j, oc)
    closed = math.gamma(0.25) / (2 * math.pi ** 0.75)
    residual = abs(value - closed)
    report.add("eta-spot-value", residual < cfg.tol, residual,
               "eta(i) against the gamma-function closed form")

    rng = _rng(cfg, "oracle/translation")
    phase = cmath.exp(1j * cmath.pi / 12)
    worst = 0.0
    for _ in range(50):
        tau = complex(rng.uniform(-3, 3), rng.uniform(0.05, 3.0))
        worst = max(worst, abs(oracle_mod.eta(tau + 1, oc) - phase * oracle_mod.eta(tau, oc)))
    report.add("eta-translation-law", worst < 1e-12, worst,
               "eta(tau+1) = e^{i pi/12} eta(tau) at 50 points")

    tight = OracleConfig(truncation_eps=oc.truncation_eps / 2,
                         compare_tol=oc.compare_tol, im_floor=oc.im_floor,
                         base_point=oc.base_point, seed=oc.seed)
    worst = 0.0
    for _ in range(20):
        tau = complex(rng.uniform(-2, 2), rng.uniform(0.05, 2.0))
        worst = max(worst, abs(oracle_mod.eta(tau, oc) - oracle_mod.eta(tau, tight)))
    report.add("eta-truncation-honesty", worst < cfg.tol / 100, worst,
               "halving truncation_eps moves eta by less than tol/100")

    rng_eta = _rng(cfg, "oracle/eta-transform")
    worst = 0.0
    checked = 0
    attempts = 0
    while checked < n:
        attempts += 1
        if attempts > 1000 * n:
            raise RuntimeError("eta-transform sampling stalled")
        m = random_element(rng_eta, cfg.max_word_length)
        if not 0 < m.c <= 20:
            continue
        result = oracle_mod.check_eta_transformation(m, oc)
        if not result.evaluable():
            continue
        checked += 1
        worst = max(worst, result.residual)
    report.add("eta-transformation", worst < cfg.tol, worst,
               f"{checked} matrices with 0 < c <= 20")

    for level in (3, 4):
        members = _sample_transformable(cfg, level, n, oc)
        worst = 0.0
        failures = 0
        for m in members:
            result = oracle_mod.check_transformation(m, level, oc)
            worst = max(worst, result.residual)
            if not result.passed():
                failures += 1
        report.add(f"quotient-transformation-level{level}",
                   failures == 0 and worst < cfg.tol, worst,
                   f"{len(members)} members, |c| <= 20, base point {oc.base_point}")
    return report


def suite_arbitration(cfg: VerifyConfig) -> SuiteReport:
    """Decide which reading of the level-4 c-odd branch integer is correct."""
    report = SuiteReport("formula-arbitration")
    oc = cfg.oracle_config()
    n = cfg.oracle_samples()
    members = [_ARBITRATION_FORCED] + _sample_transformable(
        cfg, 4, n, oc, c_odd_only=True)
    passes = {variant: 0 for variant in GVariant}
    disagreements = 0
    for m in members:
        results = {v: oracle_mod.check_transformation(m, 4, oc, v) for v in GVariant}
        for v, result in results.items():
            if result.passed():
                passes[v] += 1
        if len({r.verdict for r in results.values()}) > 1:
            disagreements += 1
    survivors = [v for v in GVariant if passes[v] == len(members)]
    detail = (f"{len(members)} c-odd members: "
              + ", ".join(f"{v.value} {passes[v]}/{len(members)}" for v in GVariant)
              + f"; variants disagree on {disagreements}")
    report.add("g-variant-unique-survivor", len(survivors) == 1, detail=detail)
    report.add("g-variant-winner-primary",
               survivors == [GVariant.PRIMARY],
               detail=f"survivors: {[v.value for v in survivors]}")

    # The constant-term discrepancy only shows on c = 3 mod 4 members of
    # the +-T class, none of which clear the floor at the default base
    # point; re-check one at a lower base point.
    low = OracleConfig(compare_tol=cfg.tol, base_point=_CONSTANT_AXIS_BASE)
    primary = oracle_mod.check_transformation(_ARBITRATION_CONSTANT_AXIS, 4, low,
                                              GVariant.PRIMARY)
    alternate = oracle_mod.check_transformation(_ARBITRATION_CONSTANT_AXIS, 4, low,
                                                GVariant.ALTERNATE)
    report.add("g-variant-constant-term-axis",
               primary.passed() and alternate.verdict == "FAIL",
               primary.residual,
               f"matrix {_ARBITRATION_CONSTANT_AXIS.to_csv()} at base point "
               f"{_CONSTANT_AXIS_BASE}: primary {primary.verdict}, "
               f"alternate {alternate.verdict}")
    return report


_SUITE_FUNCTIONS = {
    "character": suite_character,
    "closed-form": suite_closed_form,
    "kernels": suite_kernels,
    "lemmas": suite_lemmas,
    "cosets": suite_cosets,
    "cusps": suite_cusps,
    "oracle": suite_oracle,
    "formula-arbitration": suite_arbitration,
}


def run_suite(name: str, cfg: VerifyConfig | None = None) -> SuiteReport:
    if name not in _SUITE_FUNCTIONS:
        raise ValueError(f"unknown suite {name!r}; known: {list(SUITE_NAMES)} + ['all']")
    return _SUITE_FUNCTIONS[name](cfg or VerifyConfig())


def run_suites(name: str, cfg: VerifyConfig | None = None) -> list[SuiteReport]:
    """Run one named suite, or every suite in fixed order for "all"."""
    if name == "all":
        return [run_suite(suite, cfg) for suite in SUITE_NAMES]
    return [run_suite(name, cfg)]
