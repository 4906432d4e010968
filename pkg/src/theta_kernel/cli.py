"""Command-line interface.

Subcommands: membership, multiplier, kernel, cosets, cusp, verify.
Matrices are passed row-major as "a,b,c,d".  Exit codes: 0 for success
or an all-PASS verification, 1 when a verification suite fails, 2 for
usage errors.  When --seed is omitted the THETA_KERNEL_SEED environment
variable is used, defaulting to 0.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import cosets as cosets_mod
from . import kernels as kernels_mod
from .cosets import CuspPoint
from .kernels import PowerClass
from .multiplier import GVariant, membership, nu_level, nu_power
from .sl2z import Mat2
from .verify import SUITE_NAMES, VerifyConfig, run_suites

__all__ = ["main"]


class UsageError(Exception):
    pass


def _parse_matrix(text: str) -> Mat2:
    try:
        return Mat2.from_csv(text)
    except ValueError as exc:
        raise UsageError(f"--matrix: {exc}") from None


def _seed_default() -> int:
    raw = os.environ.get("THETA_KERNEL_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"THETA_KERNEL_SEED must be an integer, got {raw!r}") from None


def _emit(payload: dict, fmt: str, text_lines: list[str]) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    elif fmt == "csv":
        for key, value in payload.items():
            if isinstance(value, list):
                value = ";".join(
                    "|".join(map(str, v)) if isinstance(v, list) else str(v)
                    for v in value)
            print(f"{key},{value}")
    else:
        for line in text_lines:
            print(line)


def _add_common(parser: argparse.ArgumentParser, *, matrix_required: bool = False,
                with_k: bool = False) -> None:
    parser.add_argument("--matrix", required=matrix_required,
                        help='row-major entries "a,b,c,d"')
    parser.add_argument("--level", type=int, choices=(3, 4), required=True)
    if with_k:
        parser.add_argument("--k", type=int, required=True,
                            help="power exponent (reduced mod 12)")
    parser.add_argument("--format", choices=("json", "csv", "text"), default="text")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="theta-kernel",
        description="Exact multiplier systems on level-3/4 theta groups")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("membership", help="level-group membership test")
    _add_common(p, matrix_required=True)

    p = sub.add_parser("multiplier", help="exact multiplier of a member")
    _add_common(p, matrix_required=True)
    p.add_argument("--g-variant", choices=[v.value for v in GVariant],
                   default=GVariant.PRIMARY.value,
                   help="reading of the level-4 c-odd branch integer")

    p = sub.add_parser("kernel", help="kernel membership / coset representatives")
    _add_common(p, with_k=True)

    p = sub.add_parser("cosets", help="coset representatives and index")
    _add_common(p)

    p = sub.add_parser("cusp", help="parabolic-point classification")
    p.add_argument("--level", type=int, choices=(3, 4), required=True)
    p.add_argument("--x", help='cusp ("inf", an integer, or "p/q")')
    p.add_argument("--y", help="second cusp, for an equivalence query")
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")

    p = sub.add_parser("verify", help="run property suites")
    p.add_argument("--suite", default="all", choices=list(SUITE_NAMES) + ["all"])
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--box", type=int, default=40)
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    return parser


def _cmd_membership(args) -> int:
    m = _parse_matrix(args.matrix)
    member = membership(m, args.level)
    _emit({"matrix": args.matrix, "level": args.level, "member": member},
          args.format, [str(member).lower()])
    return 0


def _cmd_multiplier(args) -> int:
    m = _parse_matrix(args.matrix)
    if not membership(m, args.level):
        raise UsageError(f"{args.matrix} is not a level-{args.level} member")
    value = nu_level(m, args.level, GVariant(args.g_variant))
    payload = {"nu": f"{value.exponent}/24", "value": value.label()}
    _emit(payload, args.format, [f"{payload['nu']} ({payload['value']})"])
    return 0


def _cmd_kernel(args) -> int:
    pc = PowerClass.of(args.k, args.level)
    if args.matrix is None:
        reps = kernels_mod.kernel_coset_reps(pc)
        payload = {
            "level": args.level,
            "k": pc.k_mod_12,
            "image_size": pc.image_size(),
            "reps": [r.to_csv() for r in reps],
        }
        _emit(payload, args.format,
              [f"image size {pc.image_size()}"] + [r.to_csv() for r in reps])
        return 0
    m = _parse_matrix(args.matrix)
    if not membership(m, args.level):
        raise UsageError(f"{args.matrix} is not a level-{args.level} member")
    by_value = kernels_mod.in_kernel_by_value(m, pc)
    by_congruence = kernels_mod.in_kernel_by_congruence(m, pc)
    payload = {
        "matrix": args.matrix,
        "level": args.level,
        "k": pc.k_mod_12,
        "by_value": by_value,
        "by_congruence": by_congruence,
        "agree": by_value == by_congruence,
        "nu_power": f"{nu_power(m, pc.k_mod_12, args.level).exponent}/24",
    }
    _emit(payload, args.format,
          [f"by_value={by_value} by_congruence={by_congruence}"])
    # Disagreement would falsify the congruence classification: signal
    # like a failed verification.
    return 0 if by_value == by_congruence else 1


def _cmd_cosets(args) -> int:
    if args.matrix is None:
        reps = cosets_mod.coset_reps(args.level)
        payload = {
            "level": args.level,
            "index": cosets_mod.index(args.level),
            "reps": [r.to_csv() for r in reps],
        }
        _emit(payload, args.format,
              [f"index {payload['index']}"] + payload["reps"])
        return 0
    m = _parse_matrix(args.matrix)
    i = cosets_mod.coset_rep_of(m, args.level)
    rep = cosets_mod.coset_reps(args.level)[i]
    payload = {"matrix": args.matrix, "level": args.level,
               "rep_index": i, "rep": rep.to_csv()}
    _emit(payload, args.format, [f"coset {i}: {rep.to_csv()}"])
    return 0


def _cmd_cusp(args) -> int:
    if args.y is not None and args.x is None:
        raise UsageError("--y requires --x")
    if args.x is not None and args.y is not None:
        x, y = CuspPoint.parse(args.x), CuspPoint.parse(args.y)
        equivalent = cosets_mod.cusp_equivalent(x, y, args.level)
        _emit({"x": str(x), "y": str(y), "level": args.level,
               "equivalent": equivalent},
              args.format, [str(equivalent).lower()])
        return 0
    if args.x is not None:
        x = CuspPoint.parse(args.x)
        anchors = {"inf": cosets_mod.INFINITY, "-1": CuspPoint(-1, 1)}
        hit = next((name for name, anchor in anchors.items()
                    if cosets_mod.cusp_equivalent(x, anchor, args.level)), "neither")
        _emit({"x": str(x), "level": args.level, "equivalent_to": hit},
              args.format, [hit])
        return 0
    classes = cosets_mod.cusp_classes(args.level)
    payload = {
        "level": args.level,
        "count": len(classes),
        "classes": [[str(p) for p in cls] for cls in classes],
    }
    _emit(payload, args.format,
          [f"{len(classes)} classes"] +
          [" ".join(str(p) for p in cls) for cls in classes])
    return 0


def _cmd_verify(args) -> int:
    seed = args.seed if args.seed is not None else _seed_default()
    cfg = VerifyConfig(samples=args.samples, seed=seed, tol=args.tol, box=args.box)
    reports = run_suites(args.suite, cfg)
    all_passed = all(r.passed() for r in reports)
    if args.format == "json":
        print(json.dumps(
            {"suites": [r.to_json() for r in reports], "passed": all_passed,
             "seed": seed, "backend": kernels_mod.scan_backend_name()},
            indent=2))
    elif args.format == "csv":
        print("suite,case,verdict,residual")
        for report in reports:
            for case in report.cases:
                print(case.to_csv_row())
    else:
        for report in reports:
            for case in report.cases:
                residual = "" if case.residual is None else f" residual={case.residual:.3e}"
                detail = f" ({case.detail})" if case.detail else ""
                print(f"[{case.verdict}] {report.name}/{case.case}{residual}{detail}")
        print(f"overall: {'PASS' if all_passed else 'FAIL'}")
    return 0 if all_passed else 1


_COMMANDS = {
    "membership": _cmd_membership,
    "multiplier": _cmd_multiplier,
    "kernel": _cmd_kernel,
    "cosets": _cmd_cosets,
    "cusp": _cmd_cusp,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.subcommand](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, cosets_mod.PartitionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
