#!/usr/bin/env python3
"""Run the full verification suite and print a per-check summary table.

Usage:
    python scripts/run_verification.py [check-name ...]

With no arguments every registered check runs on the default grids
(q in {2,3,5}, depth in {1,2,3}, truncation 8, all bundled specs).
"""

import sys
import time
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from mzvff.verification import run_checks


def main() -> int:
    names = sys.argv[1:] or None
    start = time.monotonic()
    results = run_checks(names)
    elapsed = time.monotonic() - start

    by_check = Counter(r.name for r in results)
    failed_by_check = Counter(r.name for r in results if not r.passed)
    width = max(len(name) for name in by_check)
    for name in sorted(by_check):
        failed = failed_by_check.get(name, 0)
        status = "ok" if not failed else f"{failed} FAILED"
        print(f"{name:<{width}}  {by_check[name]:>3} checks  {status}")
    total_failed = sum(failed_by_check.values())
    print(f"\n{len(results) - total_failed}/{len(results)} checks passed in {elapsed:.2f}s")
    if total_failed:
        print("\nfailures:")
        for r in results:
            if not r.passed:
                print(" ", r.describe())
    return 1 if total_failed else 0


if __name__ == "__main__":
    sys.exit(main())
