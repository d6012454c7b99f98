#!/usr/bin/env python3
"""Audit the depth-2 closed form over F_p[T] against literal enumeration.

Counts tuples of monic polynomials degree by degree and prints both paths
side by side, plus the tuple workload the enumeration consumed.

Usage:
    python scripts/enumeration_audit.py [p] [bound]
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from mzvff.oracle import enum_tuple_workload, truncated_series_enum
from mzvff.polyring import PolyZetaContext, closed_form_poly


def main() -> int:
    p = int(sys.argv[1]) if len(sys.argv) > 1 else 2
    bound = int(sys.argv[2]) if len(sys.argv) > 2 else 4

    closed = closed_form_poly(PolyZetaContext(p, 2)).series(bound)
    enum = truncated_series_enum(p, 2, bound)
    print(f"p={p} bound={bound}  workload {enum_tuple_workload(p, 2, bound)} tuples")
    print(f"{'degrees':>10}  {'enumerated':>14}  {'closed form':>14}")
    mismatches = 0
    for m1 in range(bound + 1):
        for m2 in range(m1, bound + 1):
            counted = enum.coefficient((m1, m2))
            predicted = closed.coefficient((m1, m2))
            marker = "" if counted == predicted else "   <-- MISMATCH"
            mismatches += counted != predicted
            print(f"{(m1, m2)!s:>10}  {str(counted):>14}  {str(predicted):>14}{marker}")
    print("all counts match" if not mismatches else f"{mismatches} MISMATCHES")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
