"""Acceptance suite: every quantitative claim, one criterion per test.

Each test prints one PASS/FAIL line (visible with ``pytest -s`` or in the
failure report).  All arithmetic is exact with tolerance zero except the two
float probes: the residue probe (1e-4) and the convergence probe (1e-6).
Criteria with a runtime budget assert wall time.
"""

import math
import time

import pytest

from mzvff import oracle, polyring, rational_field, higher_genus
from mzvff.bundled import bundled_specs, genus1_specs, genus_specs
from mzvff.exactalg import FactoredRational, LaurentPolynomial, QPowerFactor
from mzvff.fieldspec import effective_count, from_l_polynomial, one_var_zeta
from mzvff.polyring import PolyZetaContext
from mzvff.verification import CheckContext, run_checks

QS = (2, 3, 5)
DEPTHS = (1, 2, 3)


def _report(criterion: str, passed: bool, detail: str = "") -> None:
    status = "PASS" if passed else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"{status} {criterion}{suffix}")
    assert passed, f"{criterion}: {detail}"


def _run(names, **kwargs) -> list:
    context = CheckContext(**kwargs) if kwargs else CheckContext()
    return run_checks(names, context)


def test_criterion_1_closed_form_series_match_oracles():
    """Depth-d closed forms over F_q[T] match both brute-force series."""
    start = time.monotonic()
    results = _run(["series-poly", "series-poly-enum"])
    elapsed = time.monotonic() - start
    failures = [r.describe() for r in results if not r.passed]
    _report(
        "criterion 1: poly closed form vs enumeration and weight sums",
        not failures and elapsed < 30,
        f"{len(results)} checks, {elapsed:.2f}s" + ("; " + "; ".join(failures) if failures else ""),
    )


def test_criterion_2_functional_equations():
    start = time.monotonic()
    results = _run(["involution", "mixed-relation"])
    elapsed = time.monotonic() - start
    failures = [r.describe() for r in results if not r.passed]
    _report(
        "criterion 2: involution and depth-2 mixing relation",
        not failures and elapsed < 5,
        f"{len(results)} checks, {elapsed:.2f}s" + ("; " + "; ".join(failures) if failures else ""),
    )


def test_criterion_3_euler_product():
    start = time.monotonic()
    results = _run(["euler-product"], qs=(2, 3))
    elapsed = time.monotonic() - start
    failures = [r.describe() for r in results if not r.passed]
    _report(
        "criterion 3: Euler product truncations, counts doubly verified",
        not failures and elapsed < 10,
        f"{len(results)} checks, {elapsed:.2f}s" + ("; " + "; ".join(failures) if failures else ""),
    )


def test_criterion_4_residues():
    """Three scaled residues exactly, plus the float probe at q=3, s=3."""
    symbolic = _run(["residues"])
    q = 3
    zeta = polyring.closed_form_poly(PolyZetaContext(q, 2))
    w = 1.0 + 1e-6
    probe = (w - 1.0) * zeta.evaluate((q**-3.0, q**-w))
    residue = polyring.scaled_residue_d2(q, "w=1")
    target = residue.value.evaluate((q**-3.0, 0.0)) / math.log(q)
    probe_error = abs(probe - target)
    failures = [r.describe() for r in symbolic if not r.passed]
    _report(
        "criterion 4: depth-2 residues, symbolic + float probe",
        not failures and probe_error <= 1e-4,
        f"{len(symbolic)} symbolic checks, probe error {probe_error:.2e}"
        + ("; " + "; ".join(failures) if failures else ""),
    )


def test_criterion_5_rational_function_field():
    start = time.monotonic()
    results = _run(["q-polynomial", "decomposition-d2", "series-rational"])
    elapsed = time.monotonic() - start
    failures = [r.describe() for r in results if not r.passed]
    _report(
        "criterion 5: genus-0 clearing polynomial, decomposition, series",
        not failures and elapsed < 30,
        f"{len(results)} checks, {elapsed:.2f}s" + ("; " + "; ".join(failures) if failures else ""),
    )


def test_criterion_6_genus_closed_forms():
    start = time.monotonic()
    results = _run(
        ["series-genus", "pq-identity", "degree-bounds", "g1-decomposition", "poles-genus"]
    )
    elapsed = time.monotonic() - start
    failures = [r.describe() for r in results if not r.passed]
    specs = sorted(genus_specs())
    _report(
        "criterion 6: genus >= 1 split form, P/Q, bounds, decomposition, poles",
        not failures and elapsed < 30,
        f"{len(results)} checks over {specs}, {elapsed:.2f}s"
        + ("; " + "; ".join(failures) if failures else ""),
    )


def test_criterion_7_zero_freeness():
    results = _run(["zero-free"])
    failures = [r.describe() for r in results if not r.passed]
    _report(
        "criterion 7: reduced numerators are monomial (no zeros)",
        not failures,
        f"{len(results)} checks" + ("; " + "; ".join(failures) if failures else ""),
    )


def test_criterion_8_fieldspec_coherence():
    results = _run(["fieldspec"])
    recovered = from_l_polynomial(5, [1, -2, 5])
    point_count = oracle.elliptic_point_count(5, 1, 0)
    l_path_ok = (
        recovered.q == 5
        and recovered.genus == 1
        and recovered.class_number == 4 == point_count
    )
    failures = [r.describe() for r in results if not r.passed]
    _report(
        "criterion 8: divisor counts vs zeta series, L-ingestion vs point count",
        not failures and l_path_ok,
        f"{len(results)} checks, class number {recovered.class_number} == {point_count}"
        + ("; " + "; ".join(failures) if failures else ""),
    )


def test_criterion_9_convergence_probe():
    q, bound = 2, 40
    closed = polyring.closed_form_poly(PolyZetaContext(q, 2))
    point = (complex(q) ** -3, complex(q) ** -3)
    target = closed.evaluate(point)
    partial = oracle.truncated_series_b(oracle.monic_weights(q), 2, bound).evaluate(point)
    error = abs(partial - target)
    _report(
        "criterion 9: defining series converges to the closed form at (3,3)",
        error <= 1e-6,
        f"partial-sum error {error:.2e} at truncation {bound}",
    )
