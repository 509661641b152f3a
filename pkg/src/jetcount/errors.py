"""Exception classes for jetcount.

This module defines a single hierarchy of coded exceptions. Every error
carries a machine-readable ``ErrorCode`` that the CLI maps to a stable
process exit code.
"""

from __future__ import annotations

from typing import Any, ClassVar, Final

from jetcount.common.enums import ErrorCode

EXIT_CODES: Final[dict[ErrorCode, int]] = {
    ErrorCode.JOB_INVALID: 2,
    ErrorCode.PARSE_ERROR: 3,
    # algebra
    ErrorCode.NON_DIVISIBLE: 10,
    ErrorCode.UNKNOWN_VARIABLE: 11,
    ErrorCode.AMBIENT_MISMATCH: 12,
    ErrorCode.DIVISION_BY_ZERO: 13,
    ErrorCode.DEGENERATE_RESULTANT: 14,
    # jets
    ErrorCode.CHART_BOUNDS: 20,
    ErrorCode.DEGENERATE_TRANSFORMATION: 21,
    ErrorCode.CONSTANT_EQUATION: 22,
    # invariants
    ErrorCode.SINGULAR_SYSTEM: 30,
    ErrorCode.NON_INTEGRAL: 31,
    ErrorCode.UNKNOWN_ENTRY_NEEDED: 32,
    ErrorCode.MISSING_GENUS: 33,
    ErrorCode.LENGTH_MISMATCH: 34,
    # counting
    ErrorCode.POSITIVE_DIMENSIONAL: 40,
    ErrorCode.DEGENERATE_SLICE: 41,
    ErrorCode.SLICE_NOT_SUPPORTED: 42,
    ErrorCode.UNSUPPORTED_CUSPIDAL_COMPONENT: 43,
    ErrorCode.REFERENCE_RETRIES_EXHAUSTED: 44,
    ErrorCode.VERIFY_MISMATCH: 50,
}


class JetCountError(Exception):
    """Base error for every failure surfaced by the library or the CLI.

    Raised with a code from ``ErrorCode``; subclasses pin the code so
    callers can catch by type or dispatch on ``code``.
    """

    default_code: ClassVar[ErrorCode | None] = None

    def __init__(
        self, code: ErrorCode, message: str, details: dict[str, Any] | None = None
    ) -> None:
        """Initialize the exception.

        Args:
            code: Machine-readable error code
            message: Human-readable error message
            details: Optional structured context for debugging
        """
        super().__init__(f"[{code.value}] {message}")
        self.code: ErrorCode = code
        self.message: str = message
        self.details: dict[str, Any] = dict(details or {})

    @property
    def exit_code(self) -> int:
        """Process exit code for this error (never 0)."""
        return EXIT_CODES.get(self.code, 1)

    @classmethod
    def from_code(
        cls, code: ErrorCode, message: str, details: dict[str, Any] | None = None
    ) -> JetCountError:
        """Create the subclass registered for ``code``.

        Args:
            code: Error code to materialize
            message: Human-readable error message
            details: Optional structured context

        Returns:
            Instance of the matching subclass, or of the base class
        """
        for subclass in _all_subclasses(JetCountError):
            if subclass.default_code is code:
                return subclass(message, details)
        return cls(code, message, details)


def _all_subclasses(root: type[JetCountError]) -> list[type[_CodedError]]:
    found: list[type[_CodedError]] = []
    for sub in root.__subclasses__():
        if issubclass(sub, _CodedError) and sub.default_code is not None:
            found.append(sub)
        found.extend(_all_subclasses(sub))
    return found


class _CodedError(JetCountError):
    """Error whose code is fixed by its class."""

    def __init__(self, message: str, details: dict[str, Any] | None = None) -> None:
        assert self.default_code is not None
        super().__init__(self.default_code, message, details)


# ── algebra ──────────────────────────────────────────────────────────────────
class AlgebraError(_CodedError):
    """Failures of exact polynomial arithmetic."""


class NonDivisibleError(AlgebraError):
    default_code = ErrorCode.NON_DIVISIBLE


class UnknownVariableError(AlgebraError):
    default_code = ErrorCode.UNKNOWN_VARIABLE


class AmbientMismatchError(AlgebraError):
    default_code = ErrorCode.AMBIENT_MISMATCH


class PolynomialZeroDivisionError(AlgebraError):
    default_code = ErrorCode.DIVISION_BY_ZERO


class DegenerateResultantError(AlgebraError):
    default_code = ErrorCode.DEGENERATE_RESULTANT


# ── jets ─────────────────────────────────────────────────────────────────────
class JetError(_CodedError):
    """Failures of the jet-chart calculus."""


class ChartBoundsError(JetError):
    default_code = ErrorCode.CHART_BOUNDS


class DegenerateTransformationError(JetError):
    default_code = ErrorCode.DEGENERATE_TRANSFORMATION


class ConstantEquationError(JetError):
    default_code = ErrorCode.CONSTANT_EQUATION


# ── invariants ───────────────────────────────────────────────────────────────
class InvariantError(_CodedError):
    """Failures while determining equation or variety invariants."""


class SingularSystemError(InvariantError):
    default_code = ErrorCode.SINGULAR_SYSTEM


class NonIntegralError(InvariantError):
    default_code = ErrorCode.NON_INTEGRAL


class UnknownEntryError(InvariantError):
    default_code = ErrorCode.UNKNOWN_ENTRY_NEEDED


class MissingGenusError(InvariantError):
    default_code = ErrorCode.MISSING_GENUS


class LengthMismatchError(InvariantError):
    default_code = ErrorCode.LENGTH_MISMATCH


# ── counting ─────────────────────────────────────────────────────────────────
class CountingError(_CodedError):
    """Failures of the solution counter."""


class PositiveDimensionalError(CountingError):
    default_code = ErrorCode.POSITIVE_DIMENSIONAL


class DegenerateSliceError(CountingError):
    default_code = ErrorCode.DEGENERATE_SLICE


class SliceNotSupportedError(CountingError):
    default_code = ErrorCode.SLICE_NOT_SUPPORTED


class UnsupportedCuspidalComponentError(CountingError):
    default_code = ErrorCode.UNSUPPORTED_CUSPIDAL_COMPONENT


class ReferenceRetriesExhaustedError(CountingError):
    default_code = ErrorCode.REFERENCE_RETRIES_EXHAUSTED


# ── surface ──────────────────────────────────────────────────────────────────
class ExpressionParseError(_CodedError):
    """Raised when an expression does not conform to the grammar."""

    default_code = ErrorCode.PARSE_ERROR

    def __init__(
        self,
        message: str,
        details: dict[str, Any] | None = None,
        *,
        line: int = 1,
        column: int = 1,
    ) -> None:
        """Initialize with the 1-based position of the offending token.

        Args:
            message: Description of the problem
            details: Optional structured context
            line: Line of the offending token
            column: Column of the offending token
        """
        position = {"line": line, "column": column}
        super().__init__(f"{line}:{column}: {message}", {**(details or {}), **position})
        self.line = line
        self.column = column


class JobError(_CodedError):
    """Raised when a job file cannot be read or fails validation."""

    default_code = ErrorCode.JOB_INVALID


class VerifyMismatchError(_CodedError):
    """Raised when the embedded verification suite has mismatches."""

    default_code = ErrorCode.VERIFY_MISMATCH
