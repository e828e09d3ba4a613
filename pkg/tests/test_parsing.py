"""Textual polynomial syntax: frozen parses, error offsets, round-trips."""
import pytest
from hypothesis import given
from hypothesis import strategies as st

from polyentropy import ONE, ZERO, FinPoly, ParseError, enumerate_polys, parse_poly


def test_parse_frozen_cases():
    assert parse_poly("y^4 + 4y") == FinPoly([4, 1, 1, 1, 1])
    assert parse_poly("0") == ZERO
    assert parse_poly("1") == ONE
    assert parse_poly("2y^3+5y^2+1") == FinPoly([3, 3, 2, 2, 2, 2, 2, 0])
    assert parse_poly("y") == FinPoly([1])
    assert parse_poly("y+y+y") == FinPoly([1, 1, 1])
    assert parse_poly("10") == FinPoly([0] * 10)
    assert parse_poly("3y^0") == FinPoly([0, 0, 0])


def test_parse_is_whitespace_insensitive():
    assert parse_poly("  y ^ 2 +0+ y ") == FinPoly([2, 1])
    assert parse_poly("y^2+y") == FinPoly([2, 1])
    assert parse_poly("\ty^2\n+\ny\n") == FinPoly([2, 1])


def test_zero_coefficient_drops_the_monomial():
    assert parse_poly("0y^5") == ZERO
    assert parse_poly("0y^5 + y") == FinPoly([1])


def test_order_does_not_matter():
    assert parse_poly("4y + y^4") == parse_poly("y^4 + 4y")
    assert parse_poly("1 + y^2") == parse_poly("y^2 + 1")


def test_parse_errors_carry_byte_offsets():
    cases = [
        ("", "expected a term", 0),
        ("   ", "expected a term", 3),
        ("y^", "expected digits", 2),
        ("y + + y", "expected a term", 4),
        ("2x", "expected '+' or end", 1),
        ("y^2 $", "expected '+' or end", 4),
        ("y^2 + ", "expected a term", 6),
        ("+y", "expected a term", 0),
    ]
    for text, fragment, offset in cases:
        with pytest.raises(ParseError) as excinfo:
            parse_poly(text)
        assert fragment in str(excinfo.value)
        assert excinfo.value.offset == offset
        assert f"(byte {offset})" in str(excinfo.value)


def test_non_ascii_digits_are_rejected():
    # superscript four: the 'y' parses, the exponent mark does not
    with pytest.raises(ParseError) as excinfo:
        parse_poly("y⁴")
    assert excinfo.value.offset == 1
    with pytest.raises(ParseError) as excinfo:
        parse_poly("y^²")
    assert excinfo.value.offset == 2
    # fullwidth two is not a coefficient
    with pytest.raises(ParseError) as excinfo:
        parse_poly("２y")
    assert excinfo.value.offset == 0


def test_offsets_count_bytes_not_characters():
    # two no-break spaces (2 utf-8 bytes each) sit between '+' and the error
    with pytest.raises(ParseError) as excinfo:
        parse_poly("y +  z")
    assert excinfo.value.offset == 7


def test_parse_error_is_a_value_error():
    assert issubclass(ParseError, ValueError)


def test_round_trip_small_sweep():
    for p in enumerate_polys(3, 4):
        assert parse_poly(str(p)) == p


@given(st.lists(st.integers(0, 9), max_size=8).map(FinPoly))
def test_round_trip_random(p):
    assert parse_poly(str(p)) == p
