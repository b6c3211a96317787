"""
FusedHecke Error Handling System
Typed errors for exact algebra computations and their mapping to exit codes
"""

import functools
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional

from logging_config import get_logger


class ErrorCode(Enum):
    """Error codes for different types of errors."""

    VALIDATION_ERROR = "VALIDATION_ERROR"
    DIVISION_BY_ZERO = "DIVISION_BY_ZERO"
    POLE_AT_POINT = "POLE_AT_POINT"
    SIZE_MISMATCH = "SIZE_MISMATCH"
    BLOCK_MISMATCH = "BLOCK_MISMATCH"
    INVARIANT_VIOLATION = "INVARIANT_VIOLATION"
    PRECONDITION_FAILED = "PRECONDITION_FAILED"
    BUDGET_EXCEEDED = "BUDGET_EXCEEDED"
    VERIFICATION_FAILED = "VERIFICATION_FAILED"
    CONFIGURATION_ERROR = "CONFIGURATION_ERROR"
    UNKNOWN_ERROR = "UNKNOWN_ERROR"


class ExitCode(Enum):
    """Process exit codes of the command-line interface."""

    SUCCESS = 0
    VERIFICATION_FAILED = 1
    USAGE_ERROR = 2
    BUDGET_EXCEEDED = 3
    INTERNAL_ERROR = 4


@dataclass
class ErrorContext:
    """Context information for errors."""

    operation: str
    details: Dict[str, Any] = field(default_factory=dict)
    timestamp: float = 0.0

    @classmethod
    def create(cls, operation: str, **details) -> "ErrorContext":
        """Create error context with current timestamp."""
        return cls(operation=operation, details=details, timestamp=time.time())


class FusedHeckeError(Exception):
    """Base exception class for FusedHecke errors."""

    def __init__(
        self,
        message: str,
        error_code: ErrorCode = ErrorCode.UNKNOWN_ERROR,
        context: Optional[ErrorContext] = None,
    ):
        super().__init__(message)
        self.message = message
        self.error_code = error_code
        self.context = context

    def to_dict(self) -> Dict[str, Any]:
        """Convert error to dictionary for serialization."""
        return {
            "error_code": self.error_code.value,
            "message": self.message,
            "context": {
                "operation": self.context.operation if self.context else None,
                "details": self.context.details if self.context else {},
            },
        }


class ValidationError(FusedHeckeError, ValueError):
    """Invalid user-supplied value."""

    def __init__(self, message: str, field: str = None, value: Any = None):
        super().__init__(
            message,
            ErrorCode.VALIDATION_ERROR,
            ErrorContext.create("validation", field=field, value=str(value)),
        )
        self.field = field
        self.value = value


class ConfigurationError(FusedHeckeError, ValueError):
    """Configuration-related errors."""

    def __init__(self, message: str, config_key: str = None):
        super().__init__(
            message,
            ErrorCode.CONFIGURATION_ERROR,
            ErrorContext.create("configuration", config_key=config_key),
        )


class CoefficientError(FusedHeckeError, ZeroDivisionError):
    """Division by zero in ℚ(q) or evaluation at a pole."""

    def __init__(self, message: str, error_code: ErrorCode, point: Any = None):
        super().__init__(
            message,
            error_code,
            ErrorContext.create("coefficient", point=str(point)),
        )
        self.point = point


class SizeMismatchError(FusedHeckeError, ValueError):
    """Operands live in different algebras or spaces."""

    def __init__(self, message: str, left: Any = None, right: Any = None):
        super().__init__(
            message,
            ErrorCode.SIZE_MISMATCH,
            ErrorContext.create("size_check", left=str(left), right=str(right)),
        )


class BlockMismatchError(SizeMismatchError):
    """Fused elements over different block compositions."""

    def __init__(self, message: str, left: Any = None, right: Any = None):
        super().__init__(message, left, right)
        self.error_code = ErrorCode.BLOCK_MISMATCH


class InvariantError(FusedHeckeError, ValueError):
    """A value violates the invariants of its type."""

    def __init__(self, message: str, kind: str = None, value: Any = None):
        super().__init__(
            message,
            ErrorCode.INVARIANT_VIOLATION,
            ErrorContext.create("invariant", kind=kind, value=str(value)),
        )


class PreconditionError(FusedHeckeError, ValueError):
    """An operation was called outside its domain."""

    def __init__(self, message: str, operation: str = None, **details):
        super().__init__(
            message,
            ErrorCode.PRECONDITION_FAILED,
            ErrorContext.create(operation or "precondition", **details),
        )


class BudgetExceededError(FusedHeckeError):
    """A check is larger than the configured budget allows."""

    def __init__(self, message: str, weight: int = None, limit: int = None):
        super().__init__(
            message,
            ErrorCode.BUDGET_EXCEEDED,
            ErrorContext.create("budget", weight=weight, limit=limit),
        )
        self.weight = weight
        self.limit = limit


class VerificationError(FusedHeckeError):
    """An identity expected to hold exactly failed."""

    def __init__(self, message: str, check: str = None, **details):
        super().__init__(
            message,
            ErrorCode.VERIFICATION_FAILED,
            ErrorContext.create(check or "verification", **details),
        )


_EXIT_CODES = {
    ErrorCode.VALIDATION_ERROR: ExitCode.USAGE_ERROR,
    ErrorCode.CONFIGURATION_ERROR: ExitCode.USAGE_ERROR,
    ErrorCode.PRECONDITION_FAILED: ExitCode.USAGE_ERROR,
    ErrorCode.SIZE_MISMATCH: ExitCode.USAGE_ERROR,
    ErrorCode.BLOCK_MISMATCH: ExitCode.USAGE_ERROR,
    ErrorCode.INVARIANT_VIOLATION: ExitCode.VERIFICATION_FAILED,
    ErrorCode.POLE_AT_POINT: ExitCode.USAGE_ERROR,
    ErrorCode.DIVISION_BY_ZERO: ExitCode.USAGE_ERROR,
    ErrorCode.VERIFICATION_FAILED: ExitCode.VERIFICATION_FAILED,
    ErrorCode.BUDGET_EXCEEDED: ExitCode.BUDGET_EXCEEDED,
}


class ErrorHandler:
    """Logs errors, keeps per-code counts and picks exit codes."""

    def __init__(self, logger=None):
        self.logger = logger or get_logger()
        self.error_counts: Dict[ErrorCode, int] = {}

    def handle_error(
        self, error: Exception, context: Dict[str, Any] = None
    ) -> FusedHeckeError:
        """Normalize, log and count an error; returns the normalized error."""
        if not isinstance(error, FusedHeckeError):
            error = self._convert_error(error, context)

        self.logger.log_error(
            error.error_code.value,
            error.message,
            error.context.details if error.context else {},
        )
        self.error_counts[error.error_code] = (
            self.error_counts.get(error.error_code, 0) + 1
        )
        return error

    def _convert_error(
        self, error: Exception, context: Dict[str, Any] = None
    ) -> FusedHeckeError:
        """Convert generic exception to FusedHeckeError."""
        error_code = ErrorCode.UNKNOWN_ERROR
        if isinstance(error, ZeroDivisionError):
            error_code = ErrorCode.DIVISION_BY_ZERO
        elif isinstance(error, ValueError):
            error_code = ErrorCode.VALIDATION_ERROR

        return FusedHeckeError(
            str(error),
            error_code,
            ErrorContext.create(
                "unknown", original_error=type(error).__name__, **(context or {})
            ),
        )

    def exit_code(self, error: Exception) -> ExitCode:
        """Exit code for an error raised during a CLI command."""
        if isinstance(error, FusedHeckeError):
            return _EXIT_CODES.get(error.error_code, ExitCode.INTERNAL_ERROR)
        return ExitCode.INTERNAL_ERROR

    def get_error_statistics(self) -> Dict[str, Any]:
        """Get error statistics for monitoring."""
        return {
            "total_errors": sum(self.error_counts.values()),
            "error_counts": {
                code.value: count for code, count in self.error_counts.items()
            },
        }


# Global error handler instance
_error_handler = None


def get_error_handler() -> ErrorHandler:
    """Get global error handler instance."""
    global _error_handler
    if _error_handler is None:
        _error_handler = ErrorHandler()
    return _error_handler


def handle_exceptions(default_return: Any = None, reraise: bool = True):
    """Decorator routing exceptions through the global error handler."""

    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except Exception as e:
                normalized = get_error_handler().handle_error(
                    e, {"function": func.__name__}
                )
                if reraise:
                    if normalized is e:
                        raise
                    raise normalized from e
                return default_return

        return wrapper

    return decorator


def create_error_response(error: FusedHeckeError) -> Dict[str, Any]:
    """Create standardized error response."""
    return {
        "status": "error",
        "error_code": error.error_code.value,
        "message": error.message,
        "details": error.context.details if error.context else {},
    }
