"""
pyeop Exception Hierarchy

This module provides the exception hierarchy shared by the exact kernel, the
polynomial constructions, the numeric Darboux layer and the command-line front
end. Every exception carries structured context so that failures inside large
check grids can be reported without losing the offending inputs.

Exception Hierarchy:
    EopError (base)
    └── Error
        ├── UsageError
        │   ├── ParseError
        │   └── PreconditionError
        ├── ValidationError
        │   ├── PartitionError
        │   ├── SpectralIndicesError
        │   └── ParameterRangeError
        ├── ComputationError
        │   ├── DimensionError
        │   ├── ArityError
        │   ├── DivisibilityError
        │   ├── DegenerateInputError
        │   ├── ParameterDegeneracyError
        │   ├── IndexRangeError
        │   ├── DomainError
        │   └── PoleError
        ├── InternalError
        └── CheckFailure
"""

import time
from typing import Dict, Any, Optional


class EopError(Exception):
    """
    Base exception class for all pyeop errors.

    Attributes:
        message (str): Human-readable error message
        error_code (str, optional): pyeop error code (e.g., 'EOP2001')
        context (dict): Additional context information (offending inputs)
        timestamp (float): Unix timestamp when the error occurred
    """

    def __init__(self, message: str, error_code: Optional[str] = None,
                 context: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.error_code = error_code or getattr(self, "default_code", None)
        self.context = context or {}
        self.timestamp = time.time()

    def __str__(self) -> str:
        base_msg = self.message
        if self.error_code:
            base_msg = f"[{self.error_code}] {base_msg}"
        return base_msg

    def __repr__(self) -> str:
        return (f"{self.__class__.__name__}(message={self.message!r}, "
                f"error_code={self.error_code!r}, context={self.context!r})")

    def to_dict(self) -> Dict[str, Any]:
        """Convert exception to dictionary for serialization."""
        return {
            'type': self.__class__.__name__,
            'message': self.message,
            'error_code': self.error_code,
            'context': {k: str(v) for k, v in self.context.items()},
            'timestamp': self.timestamp,
        }


class Error(EopError):
    """Base class of all error exceptions."""
    pass


# Usage errors (bad input reaching the public surface)

class UsageError(Error):
    """
    Exception raised when the caller asks for something ill-formed.

    The command-line front end maps this family to exit code 2.
    """
    default_code = "EOP1000"


class ParseError(UsageError):
    """
    Exception raised when textual input cannot be parsed.

    This includes:
    - Rationals not of the form "p/q" or an integer
    - Partitions / spectral indices that are not comma-separated integers
    - Grids not of the form "a:b:n"
    """
    default_code = "EOP1001"

    def __init__(self, message: str, text: Optional[str] = None, **kwargs):
        super().__init__(message, **kwargs)
        self.text = text
        if text is not None:
            self.context['text'] = text[:200]


class PreconditionError(UsageError):
    """
    Exception raised when an operation precondition does not hold, e.g. asking
    for the extended eigenfunction of a level that was deleted by the chain.
    """
    default_code = "EOP1002"


# Validation errors (construction-time invariants of domain values)

class ValidationError(Error):
    """Exception raised when a domain value violates its invariants."""
    default_code = "EOP1100"


class PartitionError(ValidationError):
    """Parts are negative or not non-increasing."""
    default_code = "EOP1101"


class SpectralIndicesError(ValidationError):
    """Indices are negative, repeated or not strictly increasing."""
    default_code = "EOP1102"


class ParameterRangeError(ValidationError):
    """
    Exception raised when a family or potential parameter is out of range.

    This includes:
    - Laguerre / Jacobi parameters not greater than -1
    - Isotonic / TDPT parameters not greater than 1/2
    - Non-positive frequencies
    """
    default_code = "EOP1103"

    def __init__(self, message: str, parameter: Optional[str] = None,
                 value: Optional[Any] = None, **kwargs):
        super().__init__(message, **kwargs)
        self.parameter = parameter
        self.value = value
        if parameter:
            self.context['parameter'] = parameter
        if value is not None:
            self.context['value'] = value


# Computation errors

class ComputationError(Error):
    """Base class for failures inside an exact or numeric computation."""
    default_code = "EOP2000"


class DimensionError(ComputationError):
    """Matrix is not square, or an alternant got the wrong number of rows."""
    default_code = "EOP2001"

    def __init__(self, message: str, shape: Optional[Any] = None, **kwargs):
        super().__init__(message, **kwargs)
        self.shape = shape
        if shape is not None:
            self.context['shape'] = shape


class ArityError(ComputationError):
    """An operation that needs at least one argument received none."""
    default_code = "EOP2002"


class DivisibilityError(ComputationError):
    """Multivariate division left a nonzero remainder."""
    default_code = "EOP2003"


class DegenerateInputError(ComputationError):
    """Root counting was asked on the zero polynomial."""
    default_code = "EOP2004"


class ParameterDegeneracyError(ComputationError):
    """
    Exception raised when a recurrence denominator vanishes after cancellation.
    """
    default_code = "EOP2005"

    def __init__(self, message: str, n: Optional[int] = None, **kwargs):
        super().__init__(message, **kwargs)
        self.n = n
        if n is not None:
            self.context['n'] = n


class IndexRangeError(ComputationError):
    """A row index of a determinant entry is outside its admissible range."""
    default_code = "EOP2006"


class DomainError(ComputationError):
    """
    Exception raised when a sample point lies outside, or on the boundary of,
    the open x-domain of a potential.
    """
    default_code = "EOP2007"

    def __init__(self, message: str, x: Optional[Any] = None, **kwargs):
        super().__init__(message, **kwargs)
        self.x = x
        if x is not None:
            self.context['x'] = x


class PoleError(ComputationError):
    """
    Exception raised when a Wronskian vanishes at the evaluation point, so the
    extended potential or eigenfunction has a pole there.
    """
    default_code = "EOP2008"

    def __init__(self, message: str, x: Optional[Any] = None, **kwargs):
        super().__init__(message, **kwargs)
        self.x = x
        if x is not None:
            self.context['x'] = x


class InternalError(Error):
    """
    Exception raised when an identity that holds by construction fails, e.g.
    an alternant that is not divisible by the Vandermonde determinant.
    """
    default_code = "EOP2999"


class CheckFailure(Error):
    """
    Exception raised when independent routes or an acceptance suite disagree.

    The command-line front end maps this to exit code 1.
    """
    default_code = "EOP3001"

    def __init__(self, message: str, suite: Optional[str] = None,
                 failures: Optional[int] = None, **kwargs):
        super().__init__(message, **kwargs)
        self.suite = suite
        self.failures = failures
        if suite:
            self.context['suite'] = suite
        if failures is not None:
            self.context['failures'] = failures


class ExitCodeMapper:
    """
    Maps exceptions raised anywhere in the package to command-line exit codes.
    """

    SUCCESS = 0
    CHECK_FAILURE = 1
    USAGE = 2

    EXIT_CODE_MAP = {
        UsageError: USAGE,
        ValidationError: USAGE,
        CheckFailure: CHECK_FAILURE,
        ComputationError: CHECK_FAILURE,
        InternalError: CHECK_FAILURE,
    }

    @staticmethod
    def exit_code(error: BaseException) -> int:
        """
        Map an exception to an exit code.

        Args:
            error: Exception that reached the command-line boundary

        Returns:
            1 or 2; anything not in the pyeop hierarchy is a check failure
        """
        for exception_class, code in ExitCodeMapper.EXIT_CODE_MAP.items():
            if isinstance(error, exception_class):
                return code
        return ExitCodeMapper.CHECK_FAILURE

    @staticmethod
    def from_value_error(error: ValueError, field_name: str, text: str) -> ParseError:
        """
        Wrap a low-level ValueError raised while parsing a command-line field.

        Args:
            error: Original ValueError / ZeroDivisionError
            field_name: Flag or field that failed to parse
            text: Raw text that failed to parse

        Returns:
            ParseError instance
        """
        return ParseError(
            f"Cannot parse {field_name} from {text!r}: {error}",
            text=text,
            context={
                'field_name': field_name,
                'original_error_type': type(error).__name__,
            }
        )
