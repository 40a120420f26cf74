import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from representer.errors import ParseError, RegulariserEvaluationError
from representer.models import Element, PNormSpace
from representer.services.expression import evaluate_tree, format_tree, parse_expression
from representer.services.regularisers import format_regulariser, parse_regulariser

SPACE = PNormSpace(2, 2.0)


def at(text, coords, space=SPACE):
    return parse_regulariser(text).evaluate(Element(space, coords))


def test_examples():
    assert at("norm^2", [3.0, 4.0]) == pytest.approx(25.0)
    assert at("coord(0)", [3.0, 4.0]) == 3.0
    assert at("exp(norm) - 1", [0.0, 0.0]) == 0.0


@pytest.mark.parametrize(
    "text, expected",
    [
        ("2*3+4", 10.0),
        ("2+3*4", 14.0),
        ("2^3^2", 512.0),
        ("8/2/2", 2.0),
        ("10-4-3", 3.0),
        ("-2^2", 4.0),
        ("-(2^2)", -4.0),
        ("max0(coord(0))", 0.0),
        ("abs(coord(0)) + sqrt(4)", 3.0),
        ("  ( norm )*  2 ", 2.0 * math.sqrt(2.0)),
        ("1.5e1", 15.0),
        (".5", 0.5),
    ],
)
def test_precedence_and_functions(text, expected):
    assert at(text, [-1.0, 1.0]) == pytest.approx(expected)


@pytest.mark.parametrize(
    "text, position, expected_token",
    [
        ("norm +", 6, "NUMBER"),
        ("coord(x)", 6, "INT"),
        ("foo(1)", 0, "norm"),
        ("norm $ 2", 5, "norm"),
        ("exp(norm", 8, ")"),
        ("norm norm", 5, "end of input"),
        ("", 0, "NUMBER"),
    ],
)
def test_parse_errors_report_position(text, position, expected_token):
    with pytest.raises(ParseError) as exc:
        parse_regulariser(text)
    assert exc.value.position == position
    assert expected_token in exc.value.expected
    assert exc.value.exit_code == 1


def test_coordinate_out_of_range():
    with pytest.raises(RegulariserEvaluationError) as exc:
        at("coord(2)", [1.0, 2.0])
    np.testing.assert_array_equal(exc.value.offending_input, [1.0, 2.0])


def test_nan_is_an_evaluation_error():
    with pytest.raises(RegulariserEvaluationError):
        at("sqrt(0 - 1)", [1.0, 1.0])


def test_division_by_zero_gives_infinity():
    assert at("1/coord(0)", [0.0, 1.0]) == math.inf


@pytest.mark.parametrize(
    "text, admissible, strict",
    [
        ("norm^2", True, True),
        ("norm", True, True),
        ("exp(norm) - 1", True, True),
        ("2*norm + sqrt(norm)", True, True),
        ("max0(norm - 1)", True, False),
        ("3", True, False),
        ("norm/2", True, True),
        ("coord(0)", False, False),
        ("coord(0) + norm", False, False),
        ("2 - norm", False, False),
        ("1/norm", False, False),
        ("norm*coord(1)", False, False),
        ("sqrt(norm - 1)", False, False),
        ("sqrt(norm + 1)", True, True),
    ],
)
def test_admissibility_claims(text, admissible, strict):
    spec = parse_regulariser(text)
    assert spec.claims_admissible is admissible
    assert spec.strictly_increasing is strict


leaves = st.one_of(
    st.floats(min_value=0.0, max_value=1e6, allow_nan=False, allow_infinity=False).map(repr),
    st.integers(min_value=0, max_value=100).map(str),
    st.just("norm"),
    st.sampled_from(["coord(0)", "coord(1)", "coord(2)"]),
)


def combine(children):
    binary = st.tuples(children, st.sampled_from(["+", "-", "*", "/", "^"]), children).map(
        lambda t: f"{t[0]} {t[1]} {t[2]}"
    )
    call = st.tuples(st.sampled_from(["exp", "abs", "sqrt", "max0"]), children).map(lambda t: f"{t[0]}({t[1]})")
    paren = children.map(lambda s: f"({s})")
    neg = children.map(lambda s: f"-({s})")
    return st.one_of(binary, call, paren, neg)


expressions = st.recursive(leaves, combine, max_leaves=12)


def same_value(a, b):
    if math.isnan(a) or math.isnan(b):
        return math.isnan(a) and math.isnan(b)
    if math.isinf(a) or math.isinf(b):
        return a == b
    return abs(a - b) <= 1e-15 * max(1.0, abs(a))


@settings(max_examples=300, deadline=None)
@given(expressions, st.lists(st.floats(min_value=-5.0, max_value=5.0), min_size=3, max_size=3))
def test_pretty_print_round_trip(text, coords):
    tree = parse_expression(text)
    printed = format_tree(tree)
    assert parse_expression(printed) == tree

    coords = np.asarray(coords)
    size = float(np.linalg.norm(coords))
    assert same_value(float(evaluate_tree(tree, coords, size)), float(evaluate_tree(parse_expression(printed), coords, size)))


def test_format_regulariser():
    spec = parse_regulariser("norm^2 + 2*coord(0)")
    assert format_regulariser(spec) == "((norm ^ 2.0) + (2.0 * coord(0)))"
    assert parse_regulariser(format_regulariser(spec)).evaluate(Element(SPACE, [1.0, 2.0])) == pytest.approx(7.0)
