"""
FusedHecke Input Validation System
Validation of compositions, partitions, sample points and budgets
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from error_handling import ValidationError
from logging_config import get_logger


class ValidationSeverity(Enum):
    """Validation severity levels."""

    INFO = "info"
    WARNING = "warning"
    ERROR = "error"


@dataclass
class ValidationResult:
    """Result of validation operation."""

    is_valid: bool
    severity: ValidationSeverity
    message: str
    details: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def success(
        cls, message: str = "Validation passed", **details
    ) -> "ValidationResult":
        """Create successful validation result."""
        return cls(True, ValidationSeverity.INFO, message, details)

    @classmethod
    def warning(cls, message: str, **details) -> "ValidationResult":
        """Create warning validation result."""
        return cls(True, ValidationSeverity.WARNING, message, details)

    @classmethod
    def error(cls, message: str, **details) -> "ValidationResult":
        """Create error validation result."""
        return cls(False, ValidationSeverity.ERROR, message, details)


class BaseValidator:
    """Base validator class."""

    def __init__(self, logger=None):
        self.logger = logger or get_logger()

    def validate(self, value: Any) -> ValidationResult:
        """Validate a value."""
        raise NotImplementedError("Subclasses must implement validate method")

    def _log_validation(self, result: ValidationResult):
        log_context = {
            "validator": self.__class__.__name__,
            "result": result.is_valid,
            "severity": result.severity.value,
            "reason": result.message,
            "details": result.details,
        }
        if result.severity == ValidationSeverity.ERROR:
            self.logger.error("Validation failed", **log_context)
        elif result.severity == ValidationSeverity.WARNING:
            self.logger.warning("Validation warning", **log_context)
        else:
            self.logger.debug("Validation passed", **log_context)


class CompositionValidator(BaseValidator):
    """Sequences of non-negative integers, optionally positive or decreasing."""

    def __init__(self, positive: bool = False, decreasing: bool = False, logger=None):
        super().__init__(logger)
        self.positive = positive
        self.decreasing = decreasing

    def validate(self, value: Sequence[int]) -> ValidationResult:
        parts = list(value)
        if any(not isinstance(p, int) or isinstance(p, bool) for p in parts):
            result = ValidationResult.error("Entries must be integers", value=parts)
        elif any(p < 0 for p in parts):
            result = ValidationResult.error("Entries must be non-negative", value=parts)
        elif self.positive and any(p == 0 for p in parts):
            result = ValidationResult.error("Entries must be positive", value=parts)
        elif self.decreasing and any(a < b for a, b in zip(parts, parts[1:])):
            result = ValidationResult.error(
                "Entries must be weakly decreasing", value=parts
            )
        else:
            result = ValidationResult.success(value=parts)
        self._log_validation(result)
        return result


class PartitionValidator(CompositionValidator):
    """Weakly decreasing sequences of positive integers."""

    def __init__(self, logger=None):
        super().__init__(positive=True, decreasing=True, logger=logger)


class QPointValidator(BaseValidator):
    """Generic evaluation points: rationals outside {0, 1, -1}."""

    def validate(self, value: Any) -> ValidationResult:
        try:
            point = Fraction(value)
        except (TypeError, ValueError, ZeroDivisionError):
            result = ValidationResult.error("Not a rational number", value=str(value))
        else:
            if point == 0 or point * point == 1:
                result = ValidationResult.error(
                    "Sample point must avoid 0 and q^2 = 1", value=str(point)
                )
            else:
                result = ValidationResult.success(value=str(point))
        self._log_validation(result)
        return result


class BudgetValidator(BaseValidator):
    """Weight of a computation against a configured limit."""

    def __init__(self, limit: int, name: str = "budget", logger=None):
        super().__init__(logger)
        self.limit = limit
        self.name = name

    def validate(self, value: int) -> ValidationResult:
        if value > self.limit:
            result = ValidationResult.error(
                f"Weight {value} exceeds {self.name} limit {self.limit}",
                weight=value,
                limit=self.limit,
            )
        else:
            result = ValidationResult.success(weight=value, limit=self.limit)
        self._log_validation(result)
        return result


def validate_or_raise(validator: BaseValidator, value: Any, field: str) -> Any:
    """Run a validator and raise ValidationError on an error result."""
    result = validator.validate(value)
    if not result.is_valid:
        raise ValidationError(result.message, field=field, value=value)
    return value


def extend_composition(
    parts: Sequence[int], length: int
) -> Tuple[Tuple[int, ...], ValidationResult]:
    """Truncate or extend a composition by repeating its last entry."""
    parts = tuple(parts)
    if length <= len(parts):
        return parts[:length], ValidationResult.success()
    if not parts:
        raise ValidationError("Cannot extend an empty composition", field="k")
    extended = parts + (parts[-1],) * (length - len(parts))
    return extended, ValidationResult.warning(
        "Composition extended by repeating its last entry",
        given=list(parts),
        extended=list(extended),
    )


def parse_composition(
    text: str, length: Optional[int] = None
) -> Tuple[Tuple[int, ...], ValidationResult]:
    """
    Parse `2,2,2` or `const:2`; the constant form requires a length.

    When a length is given, the sequence is truncated or extended to it.
    """
    text = text.strip()
    try:
        if text.startswith("const:"):
            if length is None:
                raise ValidationError(
                    "const:<k> requires an explicit length", field="k", value=text
                )
            parts: List[int] = [int(text[len("const:"):])] * length
        elif text == "":
            parts = []
        else:
            parts = [int(p) for p in text.split(",")]
    except ValueError as e:
        raise ValidationError(
            f"Malformed composition: {text}", field="k", value=text
        ) from e

    validate_or_raise(CompositionValidator(), parts, "k")
    if length is None:
        return tuple(parts), ValidationResult.success()
    return extend_composition(parts, length)


def parse_partition(text: str) -> Tuple[int, ...]:
    """Parse a comma separated partition; empty text is the empty partition."""
    text = text.strip()
    try:
        parts = [int(p) for p in text.split(",")] if text else []
    except ValueError as e:
        raise ValidationError(
            f"Malformed partition: {text}", field="shape", value=text
        ) from e
    validate_or_raise(PartitionValidator(), parts, "shape")
    return tuple(parts)


def parse_q_points(text: str) -> List[Fraction]:
    """Parse comma separated rational sample points."""
    points = [p.strip() for p in text.split(",") if p.strip()]
    validator = QPointValidator()
    for p in points:
        validate_or_raise(validator, p, "q_points")
    return [Fraction(p) for p in points]
