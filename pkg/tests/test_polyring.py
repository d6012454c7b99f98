import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mzvff import oracle
from mzvff.exactalg import (
    FactoredRational,
    LaurentPolynomial,
    QPowerFactor,
    UsageError,
    render_rational,
)
from mzvff.polyring import (
    PolyZetaContext,
    check_involution,
    closed_form_poly,
    completed_xi,
    euler_agreement_box,
    euler_truncation,
    factorization_list,
    mixed_relation_d2,
    scaled_residue_d2,
    y_exponent,
    zero_free_check,
)

QS = (2, 3, 5)
DEPTHS = (1, 2, 3)


class TestClosedForm:
    def test_depth1(self):
        value = closed_form_poly(PolyZetaContext(2, 1))
        assert render_rational(value) == "1/(1 - 2*x1)"

    def test_depth2(self):
        value = closed_form_poly(PolyZetaContext(2, 2))
        assert render_rational(value) == "1/((1 - 4*x1*x2)(1 - 2*x2))"

    def test_depth3(self):
        value = closed_form_poly(PolyZetaContext(3, 3))
        assert render_rational(value) == "1/((1 - 27*x1*x2*x3)(1 - 9*x2*x3)(1 - 3*x3))"

    def test_denominator_atoms_sit_on_the_pole_ladder(self):
        # exactly the atoms 1 - q^(d-k+1) y_k appear, nothing else
        for q in QS:
            for d in DEPTHS:
                value = closed_form_poly(PolyZetaContext(q, d))
                expected = {
                    QPowerFactor(d - k + 1, y_exponent(d, k)) for k in range(1, d + 1)
                }
                assert set(value.den) == expected
                assert len(value.den) == d

    @pytest.mark.parametrize("q", QS)
    @pytest.mark.parametrize("d", DEPTHS)
    def test_series_equals_weight_sum(self, q, d):
        closed = closed_form_poly(PolyZetaContext(q, d)).series(8)
        assert closed == oracle.truncated_series_b(oracle.monic_weights(q), d, 8)

    @pytest.mark.parametrize("q", (2, 3, 5))
    @pytest.mark.parametrize("d", (1, 2))
    def test_series_equals_enumeration(self, q, d):
        closed = closed_form_poly(PolyZetaContext(q, d)).series(4)
        assert closed == oracle.truncated_series_enum(q, d, 4)


class TestFactorization:
    def test_depth1_label(self):
        assert [s.label for s in factorization_list(PolyZetaContext(2, 1))] == ["s1"]

    def test_depth2_labels(self):
        labels = [s.label for s in factorization_list(PolyZetaContext(2, 2))]
        assert labels == ["s1+s2-1", "s2"]

    @pytest.mark.parametrize("q", QS)
    @pytest.mark.parametrize("d", DEPTHS)
    def test_product_reassembles_closed_form(self, q, d):
        ctx = PolyZetaContext(q, d)
        product = None
        for shift in factorization_list(ctx):
            factor = shift.as_rational(q)
            product = factor if product is None else product * factor
        assert product.equal(closed_form_poly(ctx))


class TestCompletedXi:
    def test_depth1(self):
        value = completed_xi(PolyZetaContext(2, 1))
        assert render_rational(value) == "x1/((1 - x1)(1 - 2*x1))"

    def test_depth2_by_hand(self):
        value = completed_xi(PolyZetaContext(2, 2))
        expected = FactoredRational(
            2,
            LaurentPolynomial.monomial(2, 2, (1, 2)),
            [
                QPowerFactor(2, (1, 1)),
                QPowerFactor(1, (1, 1)),
                QPowerFactor(1, (0, 1)),
                QPowerFactor(0, (0, 1)),
            ],
        )
        assert value.equal(expected)

    @pytest.mark.parametrize("q", (2, 3))
    @pytest.mark.parametrize("d", DEPTHS)
    def test_ratio_to_zeta_is_monomial(self, q, d):
        ctx = PolyZetaContext(q, d)
        ratio_num = completed_xi(ctx).num
        assert ratio_num.is_monomial()


class TestFunctionalEquations:
    @pytest.mark.parametrize("q", QS)
    @pytest.mark.parametrize("d", DEPTHS)
    def test_involution(self, q, d):
        assert check_involution(PolyZetaContext(q, d))

    @pytest.mark.parametrize("q", QS)
    def test_mixed_relation(self, q):
        assert mixed_relation_d2(q)

    @given(st.integers(2, 7), st.integers(1, 4))
    @settings(max_examples=20, deadline=None)
    def test_involution_random(self, q, d):
        assert check_involution(PolyZetaContext(q, d))


class TestEulerProduct:
    def test_depth1_q2_by_hand(self):
        # two linear irreducibles and one quadratic: (1-t)^-2 (1-t^2)^-1
        series = euler_truncation(PolyZetaContext(2, 1), 2)
        assert [series.coefficient((n,)) for n in range(3)] == [1, 2, 4]

    def test_depth1_q3_degree1(self):
        series = euler_truncation(PolyZetaContext(3, 1), 1)
        assert series.coefficient((1,)) == 3

    @pytest.mark.parametrize("q", (2, 3))
    @pytest.mark.parametrize("d", (1, 2))
    @pytest.mark.parametrize("max_degree", (1, 2, 3, 4))
    def test_agreement_on_exact_box(self, q, d, max_degree):
        ctx = PolyZetaContext(q, d)
        truncated = euler_truncation(ctx, max_degree)
        reference = closed_form_poly(ctx).series(d * max_degree)
        for exps in euler_agreement_box(d, max_degree):
            assert truncated.coefficient(exps) == reference.coefficient(exps)

    def test_agreement_box_grows(self):
        boxes = [set(euler_agreement_box(2, D)) for D in (1, 2, 3, 4)]
        for smaller, larger in zip(boxes, boxes[1:]):
            assert smaller < larger

    def test_prime_required(self):
        with pytest.raises(UsageError):
            euler_truncation(PolyZetaContext(4, 1), 2)


class TestScaledResidues:
    def test_pole_w1(self):
        residue = scaled_residue_d2(3, "w=1")
        assert residue.value.equal(FactoredRational.inverse_factor(3, 1, (1, 0)))
        assert residue.display == "1/(1 - 3*x1)"

    def test_pole_sw2_in_s(self):
        residue = scaled_residue_d2(3, "s+w=2", "s")
        assert residue.value.equal(FactoredRational.inverse_factor(3, 1, (0, 1)))

    def test_pole_sw2_in_w(self):
        residue = scaled_residue_d2(3, "s+w=2", "w")
        expected = FactoredRational(
            3, LaurentPolynomial.monomial(2, -3, (1, 0)), [QPowerFactor(1, (1, 0))]
        )
        assert residue.value.equal(expected)
        assert residue.display == "1/(1 - 3^(s-1))"

    def test_unsupported_pole(self):
        with pytest.raises(UsageError):
            scaled_residue_d2(3, "w=0")

    def test_float_probe_near_w1(self):
        q, s, w = 3, 3.0, 1.0 + 1e-6
        zeta = closed_form_poly(PolyZetaContext(q, 2))
        probe = (w - 1) * zeta.evaluate((q**-s, q**-w))
        residue = scaled_residue_d2(q, "w=1")
        target = residue.value.evaluate((q**-s, 0.0)) / math.log(q)
        assert abs(probe - target) < 1e-4


class TestZeroFree:
    @pytest.mark.parametrize("q", QS)
    @pytest.mark.parametrize("d", (1, 2, 3, 4))
    def test_no_zeros(self, q, d):
        assert zero_free_check(PolyZetaContext(q, d))
