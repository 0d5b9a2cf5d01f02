#!/usr/bin/env python3
"""Verify antichain family prefixes over a parameter range and print a
summary table: per-member freeness from the family's forbidden patterns and
the pairwise incomparability matrix.

Usage: python scripts/antichain_prefixes.py [max_n]
"""

import sys
import time

from wqograph.antichains import FAMILIES, verify_family

RANGES = {"thm51": (2, 5), "thm52": (3, 5), "cycles": (4, 9)}


def main() -> int:
    cap = int(sys.argv[1]) if len(sys.argv) > 1 else None
    for family, (lo, hi) in RANGES.items():
        hi = min(hi, cap) if cap else hi
        ns = list(range(lo, hi + 1))
        start = time.perf_counter()
        report = verify_family(family, ns)
        elapsed = time.perf_counter() - start
        print(f"== {family}  n={ns}  forbidden={list(report.forbidden)}")
        for cell in report.freeness:
            mark = "ok" if cell.free else f"VIOLATED {cell.witness}"
            print(f"   n={cell.n:<2} {cell.pattern:<12} {mark}")
        for cell in report.incomparability:
            mark = "incomparable" if not cell.comparable else "EMBEDS"
            print(f"   {cell.n_small} vs {cell.n_large}: {mark}")
        print(f"   -> {'ok' if report.ok else 'FAILED'} ({elapsed:.2f}s)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
