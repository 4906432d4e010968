#!/usr/bin/env python3
"""Benchmark the compiled box-scan core against the pure-Python fallback.

Usage:
    python benchmarks/bench_box_scan.py [--boxes 40,100,200] [--lemma level4-mod16]

Both backends run the identical scan; outputs are compared before the
timing is reported.
"""

import argparse
import time

from theta_kernel import _boxscan_py
from theta_kernel.lemma_data import lemma_ids

try:
    from theta_kernel import _boxscan
except ImportError:
    _boxscan = None


def _time(fn, *args) -> tuple[float, object]:
    start = time.perf_counter()
    result = fn(*args)
    return time.perf_counter() - start, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--boxes", default="40,100,200",
                        help="comma-separated entry bounds")
    parser.add_argument("--lemma", default="level4-mod16", choices=lemma_ids())
    args = parser.parse_args()
    boxes = [int(b) for b in args.boxes.split(",")]
    code = _boxscan_py.LEMMA_CODES[args.lemma]

    if _boxscan is None:
        print("compiled backend not built; timing the pure-Python backend only")

    print(f"lemma {args.lemma}")
    header = f"{'box':>6} {'members':>9} {'python':>10}"
    if _boxscan is not None:
        header += f" {'cython':>10} {'speedup':>8}"
    print(header)
    for box in boxes:
        t_py, (members, cases_py) = _time(_boxscan_py.scan_lemma, code, box)
        row = f"{box:>6} {members:>9} {t_py:>9.3f}s"
        if _boxscan is not None:
            t_cy, (members_cy, cases_cy) = _time(_boxscan.scan_lemma, code, box)
            if members_cy != members or any(
                a != b for a, b in zip(cases_py, cases_cy)
            ):
                raise SystemExit(f"backend outputs differ at box {box}")
            row += f" {t_cy:>9.3f}s {t_py / t_cy:>7.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
