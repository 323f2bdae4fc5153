import pytest

from pyeop.exceptions import (
    CheckFailure, ComputationError, DomainError, EopError, ExitCodeMapper, InternalError,
    ParameterRangeError, ParseError, PoleError, PreconditionError, UsageError, ValidationError
)


def test_error_codes_and_str():
    """Default codes come from the class and prefix the message."""
    error = PreconditionError("Level 1 was deleted")
    assert error.error_code == "EOP1002"
    assert str(error) == "[EOP1002] Level 1 was deleted"
    assert isinstance(error, UsageError)


def test_explicit_code_wins():
    assert EopError("boom", error_code="EOP9999").error_code == "EOP9999"
    assert str(EopError("plain")) == "plain"


def test_context_and_to_dict():
    error = ParameterRangeError("alpha must be greater than -1", parameter="alpha", value=-2)
    payload = error.to_dict()
    assert payload["type"] == "ParameterRangeError"
    assert payload["error_code"] == "EOP1103"
    assert payload["context"] == {"parameter": "alpha", "value": "-2"}
    assert isinstance(error, ValidationError)


def test_parse_error_keeps_text():
    error = ParseError("bad grid", text="0:1")
    assert error.text == "0:1"
    assert error.context["text"] == "0:1"


def test_from_value_error():
    try:
        int("x")
    except ValueError as e:
        error = ExitCodeMapper.from_value_error(e, "partition", "1,x")
    assert isinstance(error, ParseError)
    assert error.context["field_name"] == "partition"
    assert error.context["original_error_type"] == "ValueError"
    assert "1,x" in str(error)


def test_pole_and_domain_errors_carry_x():
    assert PoleError("W vanishes", x="0").context == {"x": "0"}
    assert DomainError("outside", x=2).x == 2


def test_check_failure_context():
    error = CheckFailure("2 cases failed", suite="residual", failures=2)
    assert error.context == {"suite": "residual", "failures": 2}


@pytest.mark.parametrize("error, code", [
    (ParseError("x"), 2),
    (PreconditionError("x"), 2),
    (ParameterRangeError("x"), 2),
    (PoleError("x"), 1),
    (DomainError("x"), 1),
    (ComputationError("x"), 1),
    (InternalError("x"), 1),
    (CheckFailure("x"), 1),
    (RuntimeError("x"), 1),
])
def test_exit_codes(error, code):
    assert ExitCodeMapper.exit_code(error) == code
