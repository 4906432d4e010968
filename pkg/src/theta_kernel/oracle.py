"""Floating-point q-series oracle for the transformation laws.

Everything in this module is independent of the exact layer: eta is
evaluated from its sparse pentagonal-number series

    eta(tau) = e^{pi i tau/12} * sum_{n in Z} (-1)^n e^{pi i tau n(3n-1)}

truncated once the term magnitude drops below ``truncation_eps`` (the
tail is dominated by a geometric series with rapidly shrinking ratio),
and the level-N quotient is evaluated as the literal product of two eta
values at the shifted points (tau -/+ 1)/N.  A transformation check then
divides out the automorphy factor and compares the measured ratio with
the exact multiplier.

Weight-1/2 convention: the eta check uses the principal square root of
(c*tau + d) and is restricted to c > 0, which is the regime the eta
formula pins down without extra branch bookkeeping.  The weight-1
quotient checks are branch-free and run over the whole group.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .multiplier import GVariant, Root24, membership, nu_eta, nu_level
from .sl2z import Mat2

__all__ = [
    "OracleConfig",
    "TransformReport",
    "eta",
    "F_eval",
    "G_eval",
    "quotient_eval",
    "check_transformation",
    "check_eta_transformation",
]

_MAX_SERIES_INDEX = 1_000_000


@dataclass(frozen=True)
class OracleConfig:
    truncation_eps: float = 1e-16
    compare_tol: float = 1e-9
    im_floor: float = 0.01
    base_point: complex = 2j
    seed: int = 0

    def __post_init__(self):
        if not 0 < self.truncation_eps < self.compare_tol:
            raise ValueError("need 0 < truncation_eps < compare_tol")
        if self.im_floor <= 0:
            raise ValueError("im_floor must be positive")
        if not self.base_point.imag > 0:
            raise ValueError("base point must lie in the upper half plane")


def eta(tau: complex, cfg: OracleConfig = OracleConfig()) -> complex:
    """Dedekind eta via the pentagonal-number series.

    Terms pair n and -n; the exponents n(3n-1) and n(3n+1) grow
    quadratically, so only O(sqrt(precision / Im tau)) terms survive.
    """
    if tau.imag < cfg.im_floor:
        raise ValueError(f"Im tau = {tau.imag} below floor {cfg.im_floor}")
    total = 1 + 0j
    n = 1
    while True:
        up = cmath.exp(1j * cmath.pi * tau * (n * (3 * n - 1)))
        down = cmath.exp(1j * cmath.pi * tau * (n * (3 * n + 1)))
        term = up + down
        if n % 2:
            term = -term
        total += term
        if abs(up) < cfg.truncation_eps and abs(down) < cfg.truncation_eps:
            break
        n += 1
        if n > _MAX_SERIES_INDEX:
            raise RuntimeError("pentagonal series failed to converge")
    return cmath.exp(1j * cmath.pi * tau / 12) * total


def quotient_eval(tau: complex, level: int, cfg: OracleConfig = OracleConfig()) -> complex:
    """eta((tau-1)/N) * eta((tau+1)/N); needs Im tau >= N * im_floor."""
    if level not in (3, 4):
        raise ValueError(f"quotient defined for levels 3 and 4, got {level}")
    if tau.imag < level * cfg.im_floor:
        raise ValueError(
            f"Im tau = {tau.imag} below {level} * im_floor; shifted arguments "
            "would fall under the eta floor")
    return eta((tau - 1) / level, cfg) * eta((tau + 1) / level, cfg)


def F_eval(tau: complex, cfg: OracleConfig = OracleConfig()) -> complex:
    return quotient_eval(tau, 3, cfg)


def G_eval(tau: complex, cfg: OracleConfig = OracleConfig()) -> complex:
    return quotient_eval(tau, 4, cfg)


@dataclass(frozen=True)
class TransformReport:
    """Outcome of one transformation-law check."""

    matrix: Mat2
    level: int
    nu_exact: Root24
    ratio: complex
    residual: float
    verdict: str  # "PASS" | "FAIL" | "UNEVALUABLE"
    detail: str = ""

    def passed(self) -> bool:
        return self.verdict == "PASS"

    def evaluable(self) -> bool:
        return self.verdict != "UNEVALUABLE"

    def to_json(self) -> dict:
        return {
            "matrix": self.matrix.to_csv(),
            "level": self.level,
            "nu_exact": f"{self.nu_exact.exponent}/24",
            "ratio": [self.ratio.real, self.ratio.imag],
            "residual": self.residual,
            "verdict": self.verdict,
        }


def _unevaluable(m: Mat2, level: int, nu: Root24, why: str) -> TransformReport:
    return TransformReport(m, level, nu, complex("nan"), float("nan"),
                           "UNEVALUABLE", why)


def transformable(m: Mat2, level: int, cfg: OracleConfig = OracleConfig()) -> bool:
    """True when both tau and M*tau clear the level's evaluation floor."""
    tau = cfg.base_point
    floor = level * cfg.im_floor
    if tau.imag < floor:
        return False
    return m.moebius(tau).imag >= floor


def check_transformation(m: Mat2, level: int,
                         cfg: OracleConfig = OracleConfig(),
                         variant: GVariant = GVariant.PRIMARY) -> TransformReport:
    """Residual of |F(M tau) / ((c tau + d) F(tau)) - nu(M)| at the base point.

    The weight is 1, so no square-root branch enters.  Members whose
    image point sinks below the series floor are reported UNEVALUABLE
    rather than failed; callers resample those.
    """
    if not membership(m, level):
        raise ValueError(f"{m.entries()} is not a level-{level} member")
    nu = nu_level(m, level, variant)
    tau = cfg.base_point
    if not transformable(m, level, cfg):
        return _unevaluable(m, level, nu, "image point below evaluation floor")
    lhs = quotient_eval(m.moebius(tau), level, cfg)
    rhs = (m.c * tau + m.d) * quotient_eval(tau, level, cfg)
    ratio = lhs / rhs
    residual = abs(ratio - nu.value())
    verdict = "PASS" if residual < cfg.compare_tol else "FAIL"
    return TransformReport(m, level, nu, ratio, residual, verdict)


def check_eta_transformation(m: Mat2, cfg: OracleConfig = OracleConfig()) -> TransformReport:
    """Residual of |eta(M tau) / ((c tau + d)^{1/2} eta(tau)) - nu_eta(M)|.

    Restricted to c > 0 with the principal square root.
    """
    if m.c <= 0:
        raise ValueError("eta check restricted to matrices with c > 0")
    nu = nu_eta(m)
    tau = cfg.base_point
    if tau.imag < cfg.im_floor or m.moebius(tau).imag < cfg.im_floor:
        return _unevaluable(m, 1, nu, "image point below evaluation floor")
    lhs = eta(m.moebius(tau), cfg)
    rhs = cmath.sqrt(m.c * tau + m.d) * eta(tau, cfg)
    ratio = lhs / rhs
    residual = abs(ratio - nu.value())
    verdict = "PASS" if residual < cfg.compare_tol else "FAIL"
    return TransformReport(m, 1, nu, ratio, residual, verdict)
