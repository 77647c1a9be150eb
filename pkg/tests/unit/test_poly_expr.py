"""
Tests for the polynomial expression parser.
"""

import random
from fractions import Fraction

import pytest

from circle_rectification.taylor.polynomials import BivarPoly, to_text
from circle_rectification.utils.exceptions import ExpressionSyntaxError, ZeroDenominatorError
from circle_rectification.utils.poly_expr import (
    ATOM_START,
    END,
    INTEGER,
    Add,
    Mul,
    Neg,
    Pow,
    RationalLit,
    Sub,
    Var,
    canonical_text,
    lower,
    parse_poly,
    parse_poly_expr,
    tokenize,
)

K = BivarPoly.k()
M = BivarPoly.m()


class TestTokenize:
    """Test token kinds and byte offsets."""

    def test_kinds_and_offsets(self):
        tokens = tokenize("12*k^2")
        assert [(t.kind, t.text, t.offset) for t in tokens] == [
            (INTEGER, "12", 0), ("*", "*", 2), ("k", "k", 3),
            ("^", "^", 4), (INTEGER, "2", 5), (END, "", 6),
        ]

    def test_offsets_count_utf8_bytes(self):
        tokens = tokenize("\u00a0k +")
        assert [t.offset for t in tokens] == [2, 4, 5]

    def test_unknown_character(self):
        assert tokenize("k % 2")[1].kind == "invalid"


class TestParsePolyExpr:
    """Test the syntax trees built by the parser."""

    def test_linear(self):
        assert parse_poly_expr("2*k + 1") == Add(Mul(RationalLit(2), Var("k")), RationalLit(1))

    def test_rational_and_power(self):
        assert parse_poly_expr("k^2*m - 1/3") == Sub(
            Mul(Pow(Var("k"), 2), Var("m")), RationalLit(1, 3))

    def test_unary_minus_binds_to_atom(self):
        assert parse_poly_expr("-k^2") == Pow(Neg(Var("k")), 2)
        assert parse_poly_expr("-2^2") == Pow(Neg(RationalLit(2)), 2)

    def test_double_negation(self):
        assert parse_poly_expr("--k") == Neg(Neg(Var("k")))

    def test_negated_group(self):
        assert parse_poly_expr("-(k^2)") == Neg(Pow(Var("k"), 2))

    def test_minus_after_operator(self):
        assert parse_poly_expr("2*-m") == Mul(RationalLit(2), Neg(Var("m")))

    def test_lone_minus(self):
        with pytest.raises(ExpressionSyntaxError) as exc_info:
            parse_poly_expr("k + -")
        assert exc_info.value.offset == 5
        assert exc_info.value.expected == ATOM_START

    def test_left_associative(self):
        assert parse_poly_expr("k - m - 1") == Sub(Sub(Var("k"), Var("m")), RationalLit(1))

    def test_parentheses(self):
        assert parse_poly_expr("(k + m)^2") == Pow(Add(Var("k"), Var("m")), 2)

    def test_whitespace_insensitive(self):
        assert parse_poly_expr(" k\t*\nm ") == parse_poly_expr("k*m")

    def test_missing_operand(self):
        with pytest.raises(ExpressionSyntaxError) as exc_info:
            parse_poly_expr("k +")
        error = exc_info.value
        assert error.offset == 3
        assert error.expected == ATOM_START
        assert "k" in error.expected
        assert error.message == "Unexpected end of input"
        assert error.source == "k +"

    def test_trailing_token(self):
        with pytest.raises(ExpressionSyntaxError) as exc_info:
            parse_poly_expr("k m")
        assert exc_info.value.offset == 2
        assert exc_info.value.expected == frozenset({"+", "-", "*", END})

    def test_unclosed_parenthesis(self):
        with pytest.raises(ExpressionSyntaxError) as exc_info:
            parse_poly_expr("(k + 1")
        assert exc_info.value.offset == 6
        assert exc_info.value.expected == frozenset({")", "+", "-", "*"})

    def test_missing_exponent(self):
        with pytest.raises(ExpressionSyntaxError) as exc_info:
            parse_poly_expr("k^m")
        assert exc_info.value.offset == 2
        assert exc_info.value.expected == frozenset({INTEGER})

    def test_invalid_character(self):
        with pytest.raises(ExpressionSyntaxError, match="Unexpected '%' at offset 2"):
            parse_poly_expr("k % 2")

    def test_empty_input(self):
        with pytest.raises(ExpressionSyntaxError) as exc_info:
            parse_poly_expr("")
        assert exc_info.value.offset == 0

    def test_byte_offset_after_non_ascii(self):
        with pytest.raises(ExpressionSyntaxError) as exc_info:
            parse_poly_expr("\u00a0k +")
        assert exc_info.value.offset == 5

    def test_zero_denominator(self):
        with pytest.raises(ZeroDenominatorError) as exc_info:
            parse_poly_expr("k + 1/0")
        assert exc_info.value.offset == 6
        assert isinstance(exc_info.value, ExpressionSyntaxError)

    def test_error_text(self):
        with pytest.raises(ExpressionSyntaxError) as exc_info:
            parse_poly_expr("k +")
        text = str(exc_info.value)
        assert text.startswith("Unexpected end of input at offset 3 | expected: ")
        assert text.endswith("| in: 'k +'")


class TestLower:
    """Test exact lowering to polynomials."""

    def test_lower_values(self):
        assert parse_poly("2*k + 1") == 2 * K + 1
        assert parse_poly("k^2*m - 1/3") == K * K * M - Fraction(1, 3)
        assert parse_poly("-k^2") == K * K
        assert parse_poly("-(k^2)") == -(K * K)
        assert parse_poly("-2^2") == BivarPoly.constant(4)
        assert parse_poly("--k") == K
        assert parse_poly("k - -m^3") == K + M ** 3
        assert parse_poly("(k + m)^2") == K * K + 2 * K * M + M * M
        assert parse_poly("k^0") == BivarPoly.constant(1)

    def test_rationals_stay_exact(self):
        p = parse_poly("1/3*k + 2/6")
        assert p.coefficient(1, 0) == Fraction(1, 3)
        assert p.coefficient(0, 0) == Fraction(1, 3)

    def test_cancellation_gives_zero(self):
        assert parse_poly("k*m - m*k").is_zero()

    def test_not_a_node(self):
        with pytest.raises(TypeError, match="Not an expression node"):
            lower("k")


class TestCanonicalText:
    """Test that printed polynomials read back unchanged."""

    @pytest.mark.parametrize("src,expected", [
        ("1 + 2*k", "2*k + 1"),
        ("m*k^2 - 2*k^3", "-2*k^3 + k^2*m"),
        ("(k - k)", "0"),
        ("-(1/2) + 0*m", "-1/2"),
        ("-(k^2) + m", "-(k^2) + m"),
        ("m - k^2*m", "-(k^2*m) + m"),
        ("-k^2", "k^2"),
        ("-k*m^2", "-k*m^2"),
    ])
    def test_examples(self, src, expected):
        assert canonical_text(src) == expected

    def test_random_polynomials_round_trip(self):
        generator = random.Random(20240607)
        for _ in range(200):
            terms = {}
            for _ in range(generator.randint(0, 6)):
                mono = (generator.randint(0, 4), generator.randint(0, 4))
                terms[mono] = Fraction(generator.randint(-9, 9), generator.randint(1, 5))
            p = BivarPoly(terms)
            text = to_text(p)
            assert parse_poly(text) == p
            assert canonical_text(text) == text
