from __future__ import annotations

import pytest

from jetcount.common.enums import ErrorCode
from jetcount.errors import (
    EXIT_CODES,
    ExpressionParseError,
    JetCountError,
    JobError,
    PositiveDimensionalError,
    SliceNotSupportedError,
    VerifyMismatchError,
)


def test_every_code_has_an_exit_code():
    assert set(EXIT_CODES) == set(ErrorCode)
    assert 0 not in EXIT_CODES.values()
    assert len(set(EXIT_CODES.values())) == len(EXIT_CODES)


@pytest.mark.parametrize(
    ("error", "code"),
    [
        (JobError("bad job"), 2),
        (ExpressionParseError("bad token"), 3),
        (PositiveDimensionalError("too many"), 40),
        (VerifyMismatchError("1 case differs"), 50),
    ],
)
def test_exit_codes(error: JetCountError, code: int):
    assert error.exit_code == code


def test_message_carries_the_code():
    error = SliceNotSupportedError("no route", {"equation": "y'"})
    assert str(error) == "[SLICE_NOT_SUPPORTED] no route"
    assert (error.code, error.message) == (ErrorCode.SLICE_NOT_SUPPORTED, "no route")
    assert error.details == {"equation": "y'"}


def test_parse_errors_carry_positions():
    error = ExpressionParseError("unexpected ')'", line=2, column=7)
    assert str(error) == "[PARSE_ERROR] 2:7: unexpected ')'"
    assert error.details == {"line": 2, "column": 7}


def test_from_code_builds_the_registered_subclass():
    error = JetCountError.from_code(ErrorCode.POSITIVE_DIMENSIONAL, "infinite", {"a": 1})
    assert isinstance(error, PositiveDimensionalError)
    assert error.details == {"a": 1}
    with pytest.raises(PositiveDimensionalError):
        raise error
