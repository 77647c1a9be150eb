"""
Tests for closed-form Taylor coefficients, their identities and numeric extraction.
"""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from circle_rectification.bundles import bundle_from_AB
from circle_rectification.geometry.curves import Circle, Line
from circle_rectification.taylor import (
    BivarPoly,
    TaylorSextet,
    closed_taylor,
    closed_taylor_values,
    degree_report,
    divisibility_chain,
    fundamental_factor,
    identity_check_fourth_order,
    identity_check_mixed,
    identity_check_third_order,
    numeric_taylor,
    symmetry_check,
)
from circle_rectification.utils.exceptions import DegreeTooHighError, PolynomialError

K = BivarPoly.k()
M = BivarPoly.m()
F = fundamental_factor()
ONE = BivarPoly.constant(1)
ZERO = BivarPoly()

small_polynomials = st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 2)),
    st.fractions(min_value=-3, max_value=3, max_denominator=5),
    max_size=3,
).map(BivarPoly)

IDENTITY_CASES = [
    (ONE, ZERO),
    (3 * K - M + Fraction(1, 2), K * K * M),
    (K * K, M ** 3),
]


class TestClosedTaylor:

    def test_constant_A(self):
        s = closed_taylor(ONE, ZERO)
        assert s.phi2 == F
        assert s.phi3 == 2 * K * F
        assert s.phi4 == F * F + 4 * K * K * F
        assert s.psi2.is_zero() and s.psi3.is_zero() and s.psi4.is_zero()

    def test_line_bundle(self):
        assert all(p.is_zero() for p in closed_taylor(ZERO, ZERO).values())

    def test_values_match_polynomials(self):
        A, B = K * M + 2, M - Fraction(1, 3)
        at_point = closed_taylor(A, B).evaluate(0.5, -1.5)
        direct = closed_taylor_values(float(A.evaluate(0.5, -1.5)), float(B.evaluate(0.5, -1.5)), 0.5, -1.5)
        assert at_point.values() == pytest.approx(direct.values(), rel=1e-12)

    def test_as_dict(self):
        names = list(closed_taylor(ONE, ZERO).as_dict())
        assert names == ["phi2", "phi3", "phi4", "psi2", "psi3", "psi4"]


class TestIdentities:

    @pytest.mark.parametrize("A, B", IDENTITY_CASES)
    def test_third_order(self, A, B):
        phi, psi = identity_check_third_order(A, B)
        assert phi.is_zero() and psi.is_zero()

    @pytest.mark.parametrize("A, B", IDENTITY_CASES)
    def test_mixed(self, A, B):
        assert identity_check_mixed(A, B).is_zero()

    @pytest.mark.parametrize("A, B", IDENTITY_CASES)
    def test_fourth_order(self, A, B):
        phi, psi = identity_check_fourth_order(A, B)
        assert phi.is_zero() and psi.is_zero()

    @given(small_polynomials, small_polynomials)
    @settings(max_examples=25)
    def test_identities_hold_for_any_A_B(self, A, B):
        assert all(r.is_zero() for r in identity_check_third_order(A, B))
        assert identity_check_mixed(A, B).is_zero()


class TestDegreeReport:

    def test_linear_data_within_bounds(self):
        report = degree_report(2 * K + 1, 2 * M + 3)
        assert report.within_bounds
        assert report.degrees["phi2"] == 3
        assert report.degrees["phi4"] == 7

    def test_quadratic_data_exceeds_bounds(self):
        report = degree_report(K * K, ZERO)
        assert not report.within_bounds
        assert "phi2" in report.exceeded
        assert "psi2" not in report.exceeded

    def test_divisibility_chain_of_closed_forms(self):
        s = closed_taylor(K - M, 2 * K + 1)
        assert all(divisibility_chain(s.phi2, s.psi2).values())

    def test_divisibility_chain_detects_failure(self):
        chain = divisibility_chain(K, ZERO)
        assert not chain["phi2"]
        assert chain["psi2"]


class TestSymmetryCheck:

    @pytest.mark.parametrize("A, B, expected", [
        (2 * K + 1, 2 * M + 3, set()),
        (M, ZERO, {"b=0"}),
        (K, 2 * M, {"a=e"}),
        (ZERO, K, {"d=0"}),
    ])
    def test_constraints(self, A, B, expected):
        assert symmetry_check(A, B) == expected

    def test_degree_above_one(self):
        with pytest.raises(DegreeTooHighError):
            symmetry_check(K * K, ZERO)


class TestNumericTaylor:

    def test_constant_A_at_origin_direction(self):
        circle = bundle_from_AB(ONE, ZERO, [(0.0, 0.0)]).members[0].curve
        estimate = numeric_taylor(circle, 0.0, 0.0)
        assert estimate.phi2 == pytest.approx(1.0, abs=1e-6)
        assert estimate.psi2 == pytest.approx(0.0, abs=1e-6)

    def test_line_member(self):
        line = bundle_from_AB(ZERO, ZERO, [(0.5, -1.0)]).members[0].curve
        assert isinstance(line, Line)
        assert all(abs(v) < 1e-9 for v in numeric_taylor(line, 0.5, -1.0).values())

    def test_matches_closed_form(self):
        A, B = K + 1, M
        circle = bundle_from_AB(A, B, [(1.0, 1.0)]).members[0].curve
        estimate = numeric_taylor(circle, 1.0, 1.0)
        expected = closed_taylor(A, B).evaluate(1.0, 1.0)
        for name in ("phi2", "psi2", "phi3", "psi3"):
            assert getattr(estimate, name) == pytest.approx(getattr(expected, name), rel=1e-6)
        for name in ("phi4", "psi4"):
            assert getattr(estimate, name) == pytest.approx(getattr(expected, name), rel=1e-4)

    def test_random_directions_match_closed_form(self, random_dirs):
        A, B = K - 2 * M + Fraction(1, 2), K * M
        for k, m in random_dirs(5):
            circle = bundle_from_AB(A, B, [(k, m)]).members[0].curve
            estimate = numeric_taylor(circle, k, m)
            expected = closed_taylor(A, B).evaluate(k, m)
            scale = max(abs(v) for v in expected.values()[:2] + expected.values()[3:5])
            assert abs(estimate.phi2 - expected.phi2) < 1e-6 * scale
            assert abs(estimate.psi2 - expected.psi2) < 1e-6 * scale

    def test_curve_must_pass_through_origin(self):
        circle = Circle((0.0, 2.0, 0.0), 1.0, (0.0, 0.0, 1.0))
        with pytest.raises(PolynomialError, match="origin"):
            numeric_taylor(circle, 0.0, 0.0)

    def test_tangent_must_match(self):
        circle = bundle_from_AB(ONE, ZERO, [(0.0, 0.0)]).members[0].curve
        with pytest.raises(PolynomialError, match="tangent"):
            numeric_taylor(circle, 1.0, 0.0)

    def test_sextet_is_typed_container(self):
        sextet = TaylorSextet(1.0, 2.0, 3.0, 4.0, 5.0, 6.0)
        assert sextet.as_dict()["psi3"] == 5.0
