"""Input grammar: polynomials, rationals, divisor and resolution documents."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hodgeideals import ParseError, parse_divisor, parse_polynomial, parse_rational, \
    parse_resolution_data
from hodgeideals.poly import Polynomial

XY = ("x", "y")


def test_basic_polynomial():
    assert parse_polynomial("x^2 + y^3", XY) == parse_polynomial("y^3+x^2", XY)


def test_implicit_multiplication_and_rational_coefficients():
    f = parse_polynomial("y^4 - 5/2 x^2 y", XY)
    assert f.coeff((2, 1)) == F(-5, 2)
    assert f.coeff((0, 4)) == 1
    assert parse_polynomial("5/2x", ("x",)) == parse_polynomial("5/2 * x", ("x",))


def test_parenthesized_expressions():
    assert parse_polynomial("(x + y)(x - y)", XY) == parse_polynomial("x^2 - y^2", XY)
    assert parse_polynomial("2(x + 1)", XY) == parse_polynomial("2x + 2", XY)


def test_leading_sign():
    assert parse_polynomial("-x + y", XY) == parse_polynomial("y - x", XY)


def test_unknown_variable():
    with pytest.raises(ParseError) as err:
        parse_polynomial("x^2 + z", XY)
    assert "unknown variable 'z'" in str(err.value)
    assert err.value.span == (6, 7)


def test_zero_denominator():
    with pytest.raises(ParseError) as err:
        parse_polynomial("1/0 x", XY)
    assert "zero denominator" in str(err.value)


def test_unbalanced_parentheses():
    with pytest.raises(ParseError) as err:
        parse_polynomial("(x + y", XY)
    assert "unbalanced" in str(err.value)


def test_empty_input():
    with pytest.raises(ParseError) as err:
        parse_polynomial("   ", XY)
    assert "empty input" in str(err.value)


def test_decimal_literals_rejected():
    with pytest.raises(ParseError):
        parse_polynomial("0.5 x", XY)


def test_errors_are_deterministic():
    def capture():
        try:
            parse_polynomial("x + (y*", XY)
        except ParseError as exc:
            return (exc.span, exc.message, exc.expected)
    assert capture() == capture()


# -- totality -----------------------------------------------------------------

@settings(max_examples=200)
@given(st.text(max_size=30))
def test_parser_is_total_on_text(text):
    try:
        result = parse_polynomial(text, XY)
    except ParseError:
        return
    assert isinstance(result, Polynomial)


@settings(max_examples=200)
@given(st.binary(max_size=30))
def test_parser_is_total_on_bytes(data):
    try:
        result = parse_polynomial(data.decode("latin1"), XY)
    except ParseError:
        return
    assert isinstance(result, Polynomial)


# -- rationals ----------------------------------------------------------------

def test_parse_rational():
    assert parse_rational("9/10") == F(9, 10)
    assert parse_rational("-3/2") == F(-3, 2)
    assert parse_rational("7") == 7
    with pytest.raises(ParseError):
        parse_rational("1/0")
    with pytest.raises(ParseError):
        parse_rational("0.5")


# -- divisor documents ----------------------------------------------------------

def test_parse_divisor_single_component():
    d = parse_divisor({"vars": ["x", "y"],
                       "components": [{"f": "x^2+y^3", "alpha": "9/10"}]})
    assert d.alphas == (F(9, 10),)
    assert d.factors[0] == parse_polynomial("x^2 + y^3", XY)


def test_parse_divisor_snc():
    d = parse_divisor({"vars": ["x", "y"],
                       "components": [{"f": "x", "alpha": "3/2"},
                                      {"f": "y", "alpha": "1/2"}]})
    assert d.alphas == (F(3, 2), F(1, 2))


def test_parse_divisor_task_style_nesting():
    d = parse_divisor({"vars": ["x", "y"],
                       "divisor": {"components": [{"f": "x", "alpha": "1"}]}})
    assert d.alphas == (F(1),)


def test_parse_divisor_rejects_nonpositive_alpha():
    with pytest.raises(ParseError):
        parse_divisor({"vars": ["x"], "components": [{"f": "x", "alpha": "0"}]})
    with pytest.raises(ParseError):
        parse_divisor({"vars": ["x"], "components": [{"f": "x", "alpha": "-1/2"}]})


# -- resolution data ---------------------------------------------------------------

def test_parse_resolution_data_cusp():
    res = parse_resolution_data({"exceptional": [{"a": [2], "b": 1}, {"a": [3], "b": 2},
                                                 {"a": [6], "b": 4}],
                                 "strict_transform_smooth": True})
    assert [(e.total, e.b) for e in res.exceptional] == [(2, 1), (3, 2), (6, 4)]


def test_parse_resolution_data_rejects_zero_pullback():
    with pytest.raises(ParseError) as err:
        parse_resolution_data({"exceptional": [{"a": [0], "b": 1}]})
    assert "must be >= 1" in str(err.value)


def test_parse_resolution_data_empty_is_smooth_case():
    res = parse_resolution_data({"exceptional": []})
    assert res.exceptional == ()


def test_parse_resolution_data_rejects_negative_and_non_integer():
    with pytest.raises(ParseError):
        parse_resolution_data({"exceptional": [{"a": [2], "b": -1}]})
    with pytest.raises(ParseError):
        parse_resolution_data({"exceptional": [{"a": [2.5], "b": 1}]})
