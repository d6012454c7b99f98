#!/usr/bin/env python3
"""Numeric experiment: watch (w-1) Z_2(F_q[T]; s, w) approach the residue.

For each distance eps from the pole w = 1, evaluates the closed form at
w = 1 + eps and compares against the exact scaled residue divided by log q.
The error should shrink linearly in eps.

Usage:
    python scripts/residue_convergence.py [q] [s]
"""

import math
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from mzvff.polyring import PolyZetaContext, closed_form_poly, scaled_residue_d2


def main() -> int:
    q = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    s = float(sys.argv[2]) if len(sys.argv) > 2 else 3.0

    zeta = closed_form_poly(PolyZetaContext(q, 2))
    residue = scaled_residue_d2(q, "w=1")
    target = residue.value.evaluate((q**-s, 0.0)).real / math.log(q)
    print(f"q={q} s={s}  scaled residue {residue.display},  residue = {target:.12f}")
    print(f"{'eps':>10}  {'(w-1)*Z_2':>18}  {'abs error':>12}")
    for exponent in range(1, 9):
        eps = 10.0**-exponent
        w = 1.0 + eps
        probe = (eps * zeta.evaluate((q**-s, q**-w))).real
        print(f"{eps:>10.0e}  {probe:>18.12f}  {abs(probe - target):>12.3e}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
