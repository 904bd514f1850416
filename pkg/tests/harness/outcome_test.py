import pytest

from distkm.harness import Success, Failure, safe


def _divide(a, b):
    return a / b


def test_safe_wraps_the_return_value():
    """Test that `safe` returns a `Success` holding the value."""

    outcome = safe(_divide)(6, 3)

    assert isinstance(outcome, Success)
    assert outcome.unwrap() == 2.0
    assert str(outcome) == 'Success (2.0)'


def test_safe_catches_the_exception():
    """Test that `safe` returns a `Failure` holding the exception."""

    outcome = safe(_divide)(1, 0)

    assert isinstance(outcome, Failure)
    assert isinstance(outcome.error, ZeroDivisionError)
    assert str(outcome).startswith('Failure "ZeroDivisionError')
    with pytest.raises(ZeroDivisionError):
        outcome.unwrap()


def test_safe_keeps_the_name():
    """Test that the decorated function keeps the name of the original."""

    assert safe(_divide).__name__ == '_divide'
