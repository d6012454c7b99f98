from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mzvff.bundled import bundled_specs
from mzvff.exactalg import render_rational
from mzvff.fieldspec import (
    FunctionFieldSpec,
    InvalidSpecError,
    LPolynomial,
    effective_count,
    from_l_polynomial,
    one_var_zeta,
    spec_from_dict,
    spec_to_dict,
)

GENUS0_Q5 = FunctionFieldSpec(q=5, genus=0, class_number=1)
GENUS1_Q5 = FunctionFieldSpec(q=5, genus=1, class_number=4, b_initial=(1,))


class TestSpecValidation:
    def test_genus0_forces_class_number_one(self):
        with pytest.raises(InvalidSpecError):
            FunctionFieldSpec(q=3, genus=0, class_number=2)

    def test_b_list_length(self):
        with pytest.raises(InvalidSpecError):
            FunctionFieldSpec(q=3, genus=1, class_number=1, b_initial=(1, 2))

    def test_b0_must_be_one(self):
        with pytest.raises(InvalidSpecError):
            FunctionFieldSpec(q=3, genus=1, class_number=1, b_initial=(2,))

    def test_q_lower_bound(self):
        with pytest.raises(InvalidSpecError):
            FunctionFieldSpec(q=1, genus=0, class_number=1)


class TestEffectiveCount:
    def test_genus0_degree1(self):
        # six effective divisors of degree 1 on the q=5 projective line
        assert effective_count(GENUS0_Q5, 1) == (5**2 - 1) // 4 == 6

    def test_zero_divisor_only(self):
        assert effective_count(GENUS1_Q5, 0) == 1

    def test_forced_tail(self):
        assert effective_count(GENUS1_Q5, 2) == 4 * (5**2 - 1) // 4 == 24

    def test_monotone_beyond_threshold(self):
        for spec in bundled_specs().values():
            start = max(0, 2 * spec.genus - 1)
            counts = [effective_count(spec, n) for n in range(start, start + 8)]
            assert counts == sorted(counts)


class TestLPolynomial:
    def test_recovers_genus1_spec(self):
        assert from_l_polynomial(5, [1, -2, 5]) == GENUS1_Q5

    def test_trivial_numerator_gives_genus0(self):
        spec = from_l_polynomial(7, [1])
        assert spec == FunctionFieldSpec(q=7, genus=0, class_number=1)

    def test_odd_degree_rejected(self):
        with pytest.raises(InvalidSpecError):
            from_l_polynomial(2, [1, 1])

    def test_constant_term_must_be_one(self):
        with pytest.raises(InvalidSpecError):
            LPolynomial((2, 1, 2))

    def test_inconsistent_tail_rejected(self):
        # degree-2 polynomial whose series has a negative coefficient
        with pytest.raises(InvalidSpecError):
            from_l_polynomial(2, [1, -9, 2])

    def test_round_trip_matches_hand_built_spec(self):
        by_hand = FunctionFieldSpec(q=5, genus=1, class_number=4, b_initial=(1,))
        via_l = from_l_polynomial(5, [1, -2, 5])
        assert by_hand == via_l
        assert one_var_zeta(by_hand).equal(one_var_zeta(via_l))


class TestOneVarZeta:
    def test_genus0_closed_form(self):
        zeta = one_var_zeta(FunctionFieldSpec(q=3, genus=0, class_number=1))
        assert render_rational(zeta, ["t"]) == "1/((1 - t)(1 - 3*t))"

    def test_genus1_numerator(self):
        zeta = one_var_zeta(GENUS1_Q5)
        assert render_rational(zeta, ["t"]) == "(1 - 2*t + 5*t^2)/((1 - t)(1 - 5*t))"

    def test_constant_coefficient_is_one(self):
        for spec in bundled_specs().values():
            assert one_var_zeta(spec).series(0).coefficient((0,)) == 1

    def test_series_matches_counts_everywhere(self):
        for spec in bundled_specs().values():
            series = one_var_zeta(spec).series(12)
            for n in range(13):
                assert series.coefficient((n,)) == effective_count(spec, n), (spec, n)

    def test_l_ratio_identity(self):
        # one_var_zeta of an L-derived spec equals L(t)/((1-t)(1-qt))
        from mzvff.exactalg import FactoredRational, LaurentPolynomial, QPowerFactor

        lcoeffs = [1, -2, 5]
        spec = from_l_polynomial(5, lcoeffs)
        num = LaurentPolynomial(1, {(i,): Fraction(c) for i, c in enumerate(lcoeffs)})
        reference = FactoredRational(5, num, [QPowerFactor(0, (1,)), QPowerFactor(1, (1,))])
        assert one_var_zeta(spec).equal(reference)


class TestJsonDocuments:
    def test_explicit_document(self):
        document = {"q": 5, "genus": 1, "class_number": 4, "b": [1]}
        assert spec_from_dict(document) == GENUS1_Q5
        assert spec_to_dict(GENUS1_Q5) == document

    def test_l_document(self):
        assert spec_from_dict({"q": 5, "L": [1, -2, 5]}) == GENUS1_Q5

    def test_unknown_field_named_in_error(self):
        with pytest.raises(InvalidSpecError) as info:
            spec_from_dict({"q": 5, "genus": 0, "class_number": 1, "b": [], "extra": 1})
        assert info.value.field == "extra"

    def test_missing_field_named_in_error(self):
        with pytest.raises(InvalidSpecError) as info:
            spec_from_dict({"q": 5, "genus": 0, "class_number": 1})
        assert info.value.field == "b"

    def test_bad_type_named_in_error(self):
        with pytest.raises(InvalidSpecError) as info:
            spec_from_dict({"q": "five", "L": [1]})
        assert info.value.field == "q"


@given(st.integers(2, 9), st.integers(0, 14))
@settings(max_examples=60, deadline=None)
def test_genus0_count_is_geometric_sum(q, n):
    spec = FunctionFieldSpec(q=q, genus=0, class_number=1)
    assert effective_count(spec, n) == sum(q**i for i in range(n + 1))
