import pytest
from fractions import Fraction

from pyeop.exceptions import ParseError
from pyeop.kernel.rational import Interval, format_rational, parse_rational, to_rational


@pytest.mark.parametrize("text, expected", [
    ("3/4", Fraction(3, 4)),
    ("-2", Fraction(-2)),
    (" 5/10 ", Fraction(1, 2)),
    ("0/7", Fraction(0)),
    ("7/-3", Fraction(-7, 3)),
])
def test_parse_rational(text, expected):
    """Integers and p/q strings parse to reduced fractions."""
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["1.5", "", "a/b", "1/2/3", "1e3"])
def test_parse_rational_rejects_malformed_text(text):
    """Anything but p/q or an integer is a parse error."""
    with pytest.raises(ParseError) as exc_info:
        parse_rational(text)
    assert "EOP1001" in str(exc_info.value)


def test_parse_rational_zero_denominator():
    """A zero denominator is reported as a parse error, not a ZeroDivisionError."""
    with pytest.raises(ParseError) as exc_info:
        parse_rational("1/0")
    assert "Zero denominator" in str(exc_info.value)
    assert exc_info.value.context["text"] == "1/0"


def test_to_rational_refuses_floats_and_bools():
    """Only exact inputs are accepted."""
    assert to_rational(3) == 3
    assert to_rational("2/6") == Fraction(1, 3)
    with pytest.raises(ParseError):
        to_rational(0.5)
    with pytest.raises(ParseError):
        to_rational(True)


def test_format_rational():
    """Denominator 1 prints as an integer."""
    assert format_rational(Fraction(-3, 2)) == "-3/2"
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(0)) == "0"


def test_interval_membership_is_strict():
    """Endpoints are never inside an open interval."""
    interval = Interval(Fraction(-1), Fraction(1))
    assert interval.contains(Fraction(0))
    assert not interval.contains(Fraction(1))
    assert not interval.contains(Fraction(-1))
    assert Interval.real_line().contains(Fraction(10 ** 9))
    assert Interval(Fraction(0), None).contains(Fraction(1, 10 ** 9))
    assert str(Interval(Fraction(0), None)) == "(0, inf)"


def test_empty_interval_rejected():
    """lower >= upper cannot form an interval."""
    with pytest.raises(ValueError):
        Interval(Fraction(1), Fraction(1))
