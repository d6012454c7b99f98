"""Named verification checks pairing every closed form with an independent oracle.

Each check compares a rational-function identity against brute force (nested
definitional sums, literal enumeration of monic tuples, or a float probe) and
reports one result per parameter instance.  The command-line ``verify``
subcommand and the acceptance test suite both run off this registry, so there
is exactly one implementation of every check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from . import bundled, higher_genus, oracle, polyring, rational_field
from .exactalg import FactoredRational
from .fieldspec import FunctionFieldSpec, effective_count, from_l_polynomial, one_var_zeta
from .polyring import PolyZetaContext

DEFAULT_QS = (2, 3, 5)
DEFAULT_DEPTHS = (1, 2, 3)
DEFAULT_TRUNC = 8


@dataclass(frozen=True)
class CheckResult:
    name: str
    params: dict
    passed: bool
    detail: str = ""

    def describe(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name}" + (f" [{params}]" if params else "")
        if self.detail and not self.passed:
            text += f": {self.detail}"
        return text


@dataclass
class CheckContext:
    """Parameter grids shared by all checks; filters narrow them."""

    qs: Sequence[int] = DEFAULT_QS
    depths: Sequence[int] = DEFAULT_DEPTHS
    trunc: int = DEFAULT_TRUNC
    specs: dict[str, FunctionFieldSpec] = field(default_factory=bundled.bundled_specs)

    def genus_specs(self):
        return {k: s for k, s in self.specs.items() if s.genus >= 1}


Check = Callable[[CheckContext], Iterator[CheckResult]]
REGISTRY: dict[str, Check] = {}


def register(name: str):
    def wrap(fn: Check) -> Check:
        REGISTRY[name] = fn
        return fn

    return wrap


def available_checks() -> list[str]:
    return sorted(REGISTRY)


def run_checks(names: Iterable[str] | None = None, context: CheckContext | None = None) -> list[CheckResult]:
    context = context or CheckContext()
    if names is None:
        names = available_checks()
    results: list[CheckResult] = []
    for name in names:
        if name not in REGISTRY:
            raise ValueError(f"unknown check {name!r}; known: {', '.join(available_checks())}")
        results.extend(REGISTRY[name](context))
    return results


def _result(name: str, params: dict, passed: bool, detail: str = "") -> CheckResult:
    return CheckResult(name, params, bool(passed), detail)


# ---------------------------------------------------------------------------
# Polynomial-ring checks


@register("series-poly")
def check_series_poly(ctx: CheckContext) -> Iterator[CheckResult]:
    """Closed-form series equals the definitional sum with weights q^n."""
    for q in ctx.qs:
        for d in ctx.depths:
            closed = polyring.closed_form_poly(PolyZetaContext(q, d)).series(ctx.trunc)
            direct = oracle.truncated_series_b(oracle.monic_weights(q), d, ctx.trunc)
            yield _result(
                "series-poly",
                {"q": q, "depth": d, "trunc": ctx.trunc},
                closed == direct,
                "series mismatch against the q^n-weight sum",
            )


@register("series-poly-enum")
def check_series_poly_enum(ctx: CheckContext) -> Iterator[CheckResult]:
    """Closed-form series equals literal enumeration of monic tuples."""
    bound = min(ctx.trunc, 4)
    for q in ctx.qs:
        if not oracle.is_prime(q):
            continue
        for d in [d for d in ctx.depths if d <= 2]:
            closed = polyring.closed_form_poly(PolyZetaContext(q, d)).series(bound)
            enum = oracle.truncated_series_enum(q, d, bound)
            yield _result(
                "series-poly-enum",
                {"q": q, "depth": d, "trunc": bound},
                closed == enum,
                "series mismatch against tuple enumeration",
            )


@register("involution")
def check_involution(ctx: CheckContext) -> Iterator[CheckResult]:
    for q in ctx.qs:
        for d in ctx.depths:
            ok = polyring.check_involution(PolyZetaContext(q, d))
            yield _result("involution", {"q": q, "depth": d}, ok, "completed form not invariant")


@register("mixed-relation")
def check_mixed_relation(ctx: CheckContext) -> Iterator[CheckResult]:
    for q in ctx.qs:
        ok = polyring.mixed_relation_d2(q)
        yield _result("mixed-relation", {"q": q}, ok, "depth-2 mixing relation failed")


@register("euler-product")
def check_euler_product(ctx: CheckContext) -> Iterator[CheckResult]:
    """Truncated Euler product matches the closed form on the exact box, with
    irreducible counts verified two ways."""
    for q in ctx.qs:
        if not oracle.is_prime(q) or q > 3:
            continue
        for n in range(1, 5):
            counted = oracle.irreducible_count(q, n)
            formula = oracle.necklace_irreducible_count(q, n)
            yield _result(
                "euler-product",
                {"q": q, "irreducible-degree": n},
                counted == formula,
                f"trial division found {counted}, divisor-sum formula gives {formula}",
            )
        for d in [d for d in ctx.depths if d <= 2]:
            pzc = PolyZetaContext(q, d)
            closed = polyring.closed_form_poly(pzc)
            for max_degree in range(1, 5):
                euler = polyring.euler_truncation(pzc, max_degree)
                reference = closed.series(d * max_degree)
                ok = all(
                    euler.coefficient(m) == reference.coefficient(m)
                    for m in polyring.euler_agreement_box(d, max_degree)
                )
                yield _result(
                    "euler-product",
                    {"q": q, "depth": d, "max-degree": max_degree},
                    ok,
                    "Euler truncation disagrees on its exact box",
                )


@register("residues")
def check_residues(ctx: CheckContext) -> Iterator[CheckResult]:
    """The three depth-2 scaled residues against their closed forms."""
    from .exactalg import LaurentPolynomial, QPowerFactor

    for q in ctx.qs:
        expected = {
            ("w=1", "w"): FactoredRational.inverse_factor(q, 1, (1, 0)),
            ("s+w=2", "s"): FactoredRational.inverse_factor(q, 1, (0, 1)),
            ("s+w=2", "w"): FactoredRational(
                q,
                LaurentPolynomial.monomial(2, -q, (1, 0)),
                [QPowerFactor(1, (1, 0))],
            ),
        }
        for (pole, var), reference in expected.items():
            residue = polyring.scaled_residue_d2(q, pole, var)
            yield _result(
                "residues",
                {"q": q, "pole": pole, "in": var},
                residue.value.equal(reference),
                "scaled residue differs from its closed form",
            )


@register("residue-probe")
def check_residue_probe(ctx: CheckContext) -> Iterator[CheckResult]:
    """Float probe: (w-1) Z_2 near w=1 approximates scaled residue / log q."""
    q, s = 3, 3.0
    w = 1.0 + 1e-6
    zeta = polyring.closed_form_poly(PolyZetaContext(q, 2))
    point = (complex(q) ** (-s), complex(q) ** (-w))
    probe = (w - 1) * zeta.evaluate(point)
    residue = polyring.scaled_residue_d2(q, "w=1")
    target = residue.value.evaluate((complex(q) ** (-s), 0j)) / math.log(q)
    error = abs(probe - target)
    yield _result(
        "residue-probe",
        {"q": q, "s": 3, "w": "1+1e-6"},
        error <= 1e-4,
        f"probe error {error:.3e} exceeds 1e-4",
    )


@register("zero-free")
def check_zero_free(ctx: CheckContext) -> Iterator[CheckResult]:
    depths = tuple(ctx.depths) + ((4,) if 4 not in ctx.depths else ())
    for q in ctx.qs:
        for d in depths:
            ok = polyring.zero_free_check(PolyZetaContext(q, d))
            yield _result("zero-free", {"q": q, "depth": d}, ok, "reduced numerator is not a monomial")


# ---------------------------------------------------------------------------
# Rational-function-field checks


@register("series-rational")
def check_series_rational(ctx: CheckContext) -> Iterator[CheckResult]:
    """Genus-0 closed-form series equals the definitional sum with
    weights (q^(n+1)-1)/(q-1)."""
    for q in ctx.qs:
        for d in ctx.depths:
            closed = rational_field.closed_form_genus0(q, d).series(ctx.trunc)
            direct = oracle.truncated_series_b(oracle.genus0_weights(q), d, ctx.trunc)
            yield _result(
                "series-rational",
                {"q": q, "depth": d, "trunc": ctx.trunc},
                closed == direct,
                "series mismatch against the divisor-count sum",
            )


@register("q-polynomial")
def check_q_polynomial(ctx: CheckContext) -> Iterator[CheckResult]:
    for q in ctx.qs:
        for d in ctx.depths:
            ok, degrees = rational_field.q_times_z_is_polynomial(q, d)
            yield _result(
                "q-polynomial",
                {"q": q, "depth": d},
                ok,
                f"cleared degrees {degrees} exceed {2 * d - 1}",
            )


@register("decomposition-d2")
def check_decomposition_d2(ctx: CheckContext) -> Iterator[CheckResult]:
    for q in ctx.qs:
        ok = rational_field.decomposition_check_d2(q)
        yield _result("decomposition-d2", {"q": q}, ok, "four-product decomposition failed")


@register("poles-rational")
def check_poles_rational(ctx: CheckContext) -> Iterator[CheckResult]:
    for q in ctx.qs:
        for d in ctx.depths:
            try:
                poles = rational_field.pole_subvarieties_genus0(q, d)
                ok, detail = True, f"{len(poles)} simple poles"
            except rational_field.IdentityViolationError as exc:
                ok, detail = False, str(exc)
            yield _result("poles-rational", {"q": q, "depth": d}, ok, detail if not ok else "")


# ---------------------------------------------------------------------------
# Genus >= 1 checks


@register("series-genus")
def check_series_genus(ctx: CheckContext) -> Iterator[CheckResult]:
    """A+B+C series equals the definitional sum, mapped through u = x1 x2, v = x2."""
    for name, spec in ctx.genus_specs().items():
        total = higher_genus.closed_form_genus_d2(spec).total.series(ctx.trunc)
        direct = oracle.truncated_series_b(spec, 2, 2 * ctx.trunc)
        ok = True
        for n in range(ctx.trunc + 1):
            for m in range(ctx.trunc + 1):
                if total.coefficient((n, m)) != direct.coefficient((n, n + m)):
                    ok = False
        yield _result(
            "series-genus",
            {"spec": name, "trunc": ctx.trunc},
            ok,
            "closed form disagrees with the nested divisor-count sum",
        )


@register("pq-identity")
def check_pq_identity(ctx: CheckContext) -> Iterator[CheckResult]:
    for name, spec in ctx.genus_specs().items():
        try:
            higher_genus.pq_polynomials(spec)
            ok, detail = True, ""
        except higher_genus.IdentityViolationError as exc:
            ok, detail = False, str(exc)
        yield _result("pq-identity", {"spec": name}, ok, detail)


@register("degree-bounds")
def check_degree_bounds(ctx: CheckContext) -> Iterator[CheckResult]:
    for name, spec in ctx.genus_specs().items():
        try:
            report = higher_genus.degree_report(spec)
            ok = True
            detail = (
                f"deg_u(P)={report.deg_u_p}<={report.bound_u} "
                f"deg_v(P)={report.deg_v_p}<={report.bound_v}"
            )
        except higher_genus.IdentityViolationError as exc:
            ok, detail = False, str(exc)
        yield _result("degree-bounds", {"spec": name}, ok, detail if not ok else "")


@register("g1-decomposition")
def check_g1_decomposition(ctx: CheckContext) -> Iterator[CheckResult]:
    for name, spec in ctx.genus_specs().items():
        if spec.genus != 1:
            continue
        ok = higher_genus.genus_one_decomposition_check(spec)
        yield _result(
            "g1-decomposition", {"spec": name}, ok, "Z(K, v) + outer tail mismatch"
        )


@register("poles-genus")
def check_poles_genus(ctx: CheckContext) -> Iterator[CheckResult]:
    for name, spec in ctx.genus_specs().items():
        try:
            higher_genus.reduced_pole_atoms(spec)
            ok, detail = True, ""
        except higher_genus.IdentityViolationError as exc:
            ok, detail = False, str(exc)
        yield _result("poles-genus", {"spec": name}, ok, detail)


# ---------------------------------------------------------------------------
# Field-spec coherence and the convergence probe


@register("fieldspec")
def check_fieldspec(ctx: CheckContext) -> Iterator[CheckResult]:
    """one_var_zeta reproduces the divisor counts; L-ingestion reproduces the
    genus-1 spec whose class number is the brute-force point count."""
    for name, spec in ctx.specs.items():
        series = one_var_zeta(spec).series(12)
        ok = all(
            series.coefficient((n,)) == effective_count(spec, n) for n in range(13)
        )
        yield _result(
            "fieldspec",
            {"spec": name},
            ok,
            "zeta series disagrees with the divisor counts",
        )
    recovered = from_l_polynomial(5, [1, -2, 5])
    reference = bundled.genus1_spec_from_curve(5, 1, 0)
    yield _result(
        "fieldspec",
        {"spec": "L=1-2t+5t^2"},
        recovered == reference,
        f"L-ingestion produced {recovered}, point count gives {reference}",
    )


@register("convergence")
def check_convergence(ctx: CheckContext) -> Iterator[CheckResult]:
    """Partial sums of the defining depth-2 series at (s, w) = (3, 3), q = 2
    approach the closed-form value inside the convergence region."""
    q, s, w, bound = 2, 3, 3, 40
    closed = polyring.closed_form_poly(PolyZetaContext(q, 2))
    point = (complex(q) ** (-s), complex(q) ** (-w))
    target = closed.evaluate(point)
    partial = oracle.truncated_series_b(oracle.monic_weights(q), 2, bound).evaluate(point)
    error = abs(partial - target)
    yield _result(
        "convergence",
        {"q": q, "s": s, "w": w, "trunc": bound},
        error <= 1e-6,
        f"partial-sum error {error:.3e} exceeds 1e-6",
    )
