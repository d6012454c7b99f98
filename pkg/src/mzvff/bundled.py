"""Bundled field specs used by the verification suite and shipped as JSON.

Genus-0 specs cover q in {2, 3, 4, 5} (q = 4 exercises the prime-power path;
the enumeration oracle skips it).  The genus-1 specs take their class numbers
from brute-force point counts of y^2 = x^3 + x over F_5 and F_7.  The genus-2
spec is synthetic: (q=2, h=1, b=[1, 3, 9]) is a consistent choice of initial
counts used for degree-bound and series-consistency checks only, with no
claim that a curve realizes it.
"""

from __future__ import annotations

from .fieldspec import FunctionFieldSpec
from .oracle import elliptic_point_count


def genus1_spec_from_curve(p: int, a: int, b: int) -> FunctionFieldSpec:
    """Genus-1 spec with class number = point count of y^2 = x^3 + a x + b."""
    return FunctionFieldSpec(
        q=p, genus=1, class_number=elliptic_point_count(p, a, b), b_initial=(1,)
    )


def bundled_specs() -> dict[str, FunctionFieldSpec]:
    specs = {
        f"genus0_q{q}": FunctionFieldSpec(q=q, genus=0, class_number=1)
        for q in (2, 3, 4, 5)
    }
    specs["genus1_q5"] = genus1_spec_from_curve(5, 1, 0)
    specs["genus1_q7"] = genus1_spec_from_curve(7, 1, 0)
    specs["genus2_q2"] = FunctionFieldSpec(q=2, genus=2, class_number=1, b_initial=(1, 3, 9))
    return specs


def genus_specs() -> dict[str, FunctionFieldSpec]:
    return {name: spec for name, spec in bundled_specs().items() if spec.genus >= 1}


def genus1_specs() -> dict[str, FunctionFieldSpec]:
    return {name: spec for name, spec in bundled_specs().items() if spec.genus == 1}
