#!/usr/bin/env python3
"""
Tests for the exact coefficient layer
"""

import unittest
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from sympy.polys.orderings import monomial_key

from ..algebra.coeff import RatFunc, coefficient_ring, partial_derivative, poly_parse
from ..common.config import MONOMIAL_ORDER
from ..common.errors import (
    DivisionByZeroError,
    EvaluationError,
    ExpressionSyntaxError,
    GeneratorMismatchError,
    InputError,
    UnknownVariableError,
)

XY = ("x", "y")


class TestPolyParse(unittest.TestCase):
    """Parsing and normal forms"""

    def test_ring_uses_configured_order(self):
        self.assertEqual(coefficient_ring(XY).order, monomial_key(MONOMIAL_ORDER))

    def test_constants_hash_like_numbers(self):
        one = RatFunc.constant(1, XY)
        half = poly_parse("1/2", XY)
        self.assertEqual(one, 1)
        self.assertEqual(hash(one), hash(1))
        self.assertEqual(hash(half), hash(Fraction(1, 2)))
        self.assertIn(half, {Fraction(1, 2)})

    def test_constants_and_variables(self):
        self.assertEqual(poly_parse("3", XY), RatFunc.constant(3, XY))
        self.assertEqual(poly_parse("x", XY), RatFunc.variable("x", XY))
        self.assertTrue(poly_parse("0", XY).is_zero)
        self.assertTrue(poly_parse("x - x", XY).is_zero)

    def test_precedence(self):
        self.assertEqual(poly_parse("1 + 2*3", XY), RatFunc.constant(7, XY))
        self.assertEqual(poly_parse("-x^2", XY), -(RatFunc.variable("x", XY) ** 2))
        self.assertEqual(poly_parse("(x + y)^2", XY), poly_parse("x^2 + 2*x*y + y^2", XY))

    def test_rational_literals(self):
        half = poly_parse("1/2", XY)
        self.assertTrue(half.is_constant)
        self.assertEqual(half.constant_value(), Fraction(1, 2))

    def test_cancellation(self):
        self.assertEqual(poly_parse("(x^2 - 1)/(x - 1)", XY), poly_parse("x + 1", XY))
        self.assertTrue(poly_parse("(x^2 - 1)/(x - 1)", XY).is_polynomial)
        self.assertEqual(poly_parse("2*x/(4*y)", XY), poly_parse("x/(2*y)", XY))

    def test_render_round_trips(self):
        for text in ["x + 1", "x^2*y - 3", "x/(y + 1)", "-x*y", "1/2"]:
            value = poly_parse(text, XY)
            self.assertEqual(poly_parse(value.to_expression(), XY), value)

    def test_render_format(self):
        self.assertEqual(poly_parse("1 + x", XY).to_expression(), "x + 1")
        self.assertEqual(poly_parse("y - x", XY).to_expression(), "-x + y")
        self.assertEqual(str(poly_parse("0", XY)), "0")

    def test_no_variables(self):
        value = poly_parse("3/4 - 1", ())
        self.assertEqual(value.constant_value(), Fraction(-1, 4))


class TestParseErrors:
    """Error kinds and positions"""

    def test_operator_position(self):
        with pytest.raises(ExpressionSyntaxError) as info:
            poly_parse("x + * y", XY)
        assert info.value.position == 4
        assert info.value.pointer().splitlines()[1] == "    ^"

    def test_bad_character(self):
        with pytest.raises(ExpressionSyntaxError) as info:
            poly_parse("x $ y", XY)
        assert info.value.position == 2

    def test_unclosed_parenthesis(self):
        with pytest.raises(ExpressionSyntaxError) as info:
            poly_parse("(x + 1", XY)
        assert info.value.position == 6

    def test_empty_expression(self):
        with pytest.raises(ExpressionSyntaxError):
            poly_parse("   ", XY)

    def test_negative_exponent(self):
        with pytest.raises(ExpressionSyntaxError):
            poly_parse("x^-1", XY)

    def test_unknown_variable(self):
        with pytest.raises(UnknownVariableError) as info:
            poly_parse("x + z", XY)
        assert info.value.name == "z"
        assert isinstance(info.value, InputError)

    @pytest.mark.parametrize("text", ["x/0", "1/(x - x)"])
    def test_division_by_zero(self, text):
        with pytest.raises(DivisionByZeroError):
            poly_parse(text, XY)


class TestCalculus(unittest.TestCase):

    def test_polynomial_derivative(self):
        f = poly_parse("x^2*y + 3*y", XY)
        self.assertEqual(f.diff("x"), poly_parse("2*x*y", XY))
        self.assertEqual(partial_derivative(f, "y"), poly_parse("x^2 + 3", XY))

    def test_quotient_rule(self):
        f = poly_parse("1/x", XY)
        self.assertEqual(f.diff("x"), poly_parse("-1/x^2", XY))
        self.assertTrue(f.diff("y").is_zero)

    def test_diff_unknown_variable(self):
        with self.assertRaises(UnknownVariableError):
            poly_parse("x", XY).diff("q")

    def test_evaluate(self):
        f = poly_parse("x/(y - 1)", XY)
        self.assertEqual(f.evaluate([1, 3]), Fraction(1, 2))
        self.assertEqual(f.evaluate({"x": 2, "y": Fraction(3, 2)}), Fraction(4))
        with self.assertRaises(EvaluationError):
            f.evaluate({"x": 3, "y": 1})
        with self.assertRaises(EvaluationError):
            f.evaluate({"x": 3})

    def test_mixed_rings(self):
        with self.assertRaises(GeneratorMismatchError):
            RatFunc.one(("x",)) + RatFunc.one(("y",))


def _ratfuncs():
    """a + b*x + c*y over (d + x^2 + 1) with small integer coefficients"""
    small = st.integers(-3, 3)
    x = RatFunc.variable("x", XY)
    y = RatFunc.variable("y", XY)

    def build(values):
        a, b, c, d = values
        return (x * b + y * c + a) / (x * x + 1 + d * d)

    return st.tuples(small, small, small, small).map(build)


class TestFieldAxioms:
    """Field laws on random rational functions"""

    @settings(max_examples=40, deadline=None)
    @given(_ratfuncs(), _ratfuncs(), _ratfuncs())
    def test_distributive(self, a, b, c):
        assert (a + b) * c == a * c + b * c

    @settings(max_examples=40, deadline=None)
    @given(_ratfuncs(), _ratfuncs())
    def test_commutative(self, a, b):
        assert a + b == b + a
        assert a * b == b * a

    @settings(max_examples=40, deadline=None)
    @given(_ratfuncs(), _ratfuncs())
    def test_division_inverts_multiplication(self, a, b):
        if b.is_zero:
            return
        assert (a / b) * b == a
        assert a - a == RatFunc.zero(XY)

    @settings(max_examples=30, deadline=None)
    @given(_ratfuncs(), _ratfuncs())
    def test_product_rule(self, a, b):
        assert (a * b).diff("x") == a.diff("x") * b + a * b.diff("x")
