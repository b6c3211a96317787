"""
FusedHecke Logging Configuration
Structured logging on stderr so that command output on stdout stays deterministic
"""

import functools
import json
import logging
import logging.handlers
import sys
import time
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Optional

from config import get_config

_RESERVED_ATTRS = {
    "name",
    "msg",
    "args",
    "levelname",
    "levelno",
    "pathname",
    "filename",
    "module",
    "exc_info",
    "exc_text",
    "stack_info",
    "lineno",
    "funcName",
    "created",
    "msecs",
    "relativeCreated",
    "thread",
    "threadName",
    "processName",
    "process",
    "message",
    "asctime",
    "taskName",
}

_CONTEXT_ATTR = "fusedhecke_context"


class StructuredFormatter(logging.Formatter):
    """Formats records as single-line JSON objects."""

    def __init__(self, include_extra: bool = True):
        super().__init__()
        self.include_extra = include_extra

    def format(self, record: logging.LogRecord) -> str:
        log_data = {
            "timestamp": datetime.fromtimestamp(record.created).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "module": record.module,
            "function": record.funcName,
            "line": record.lineno,
        }

        if record.exc_info:
            log_data["exception"] = self.formatException(record.exc_info)

        if self.include_extra:
            extra_fields = {
                key: value
                for key, value in record.__dict__.items()
                if key not in _RESERVED_ATTRS
            }
            if extra_fields:
                log_data["extra"] = extra_fields

        return json.dumps(log_data, ensure_ascii=False, default=str)


class FusedHeckeLogger:
    """Logger wrapper taking structured extras as keyword arguments."""

    def __init__(self, name: str = "fusedhecke", level: Optional[str] = None):
        self.name = name
        self.logger = logging.getLogger(name)
        self._setup_logger(level)

    def _setup_logger(self, level_name: Optional[str] = None):
        config = get_config()

        self.logger.handlers.clear()

        level = getattr(logging, (level_name or config.logging.level).upper(), None)
        if not isinstance(level, int):
            level = logging.WARNING
        self.logger.setLevel(level)

        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(logging.Formatter(config.logging.format))
        console_handler.setLevel(level)
        self.logger.addHandler(console_handler)

        if config.logging.file:
            self._setup_file_handler(config, StructuredFormatter())

        self.logger.propagate = False

    def _setup_file_handler(self, config, formatter):
        """Set up rotating file handler."""
        log_path = Path(config.logging.file)
        log_path.parent.mkdir(parents=True, exist_ok=True)

        file_handler = logging.handlers.RotatingFileHandler(
            filename=str(log_path),
            maxBytes=config.logging.max_file_size,
            backupCount=config.logging.backup_count,
            encoding="utf-8",
        )
        file_handler.setFormatter(formatter)
        file_handler.setLevel(logging.DEBUG)
        self.logger.addHandler(file_handler)

    @property
    def context(self) -> Dict[str, Any]:
        """Fields added to every record, set by `log_with_context`."""
        return getattr(self.logger, _CONTEXT_ATTR, {})

    def _extra(self, kwargs: Dict[str, Any]) -> Dict[str, Any]:
        return {**self.context, **kwargs}

    def debug(self, message: str, **kwargs):
        self.logger.debug(message, extra=self._extra(kwargs))

    def info(self, message: str, **kwargs):
        self.logger.info(message, extra=self._extra(kwargs))

    def warning(self, message: str, **kwargs):
        self.logger.warning(message, extra=self._extra(kwargs))

    def error(self, message: str, **kwargs):
        self.logger.error(message, extra=self._extra(kwargs))

    def critical(self, message: str, **kwargs):
        self.logger.critical(message, extra=self._extra(kwargs))

    def exception(self, message: str, **kwargs):
        self.logger.exception(message, extra=self._extra(kwargs))

    def log_computation(
        self, operation: str, size: Optional[int] = None, elapsed: Optional[float] = None
    ):
        """Log completion of an exact computation."""
        self.debug(
            f"Computed {operation}",
            operation=operation,
            size=size,
            elapsed_seconds=elapsed,
            event_type="computation",
        )

    def log_check(self, name: str, status: str, **details):
        """Log the outcome of a verification check."""
        log = self.warning if status == "failed" else self.info
        log(
            f"Check {name}: {status}",
            check=name,
            status=status,
            event_type="check",
            **details,
        )

    def log_budget_skip(self, name: str, weight: int, limit: int):
        """Log a check skipped because it exceeds the configured budget."""
        self.info(
            f"Skipped {name}: weight {weight} exceeds budget {limit}",
            check=name,
            weight=weight,
            limit=limit,
            event_type="budget",
        )

    def log_error(
        self, error_type: str, error_message: str, context: Dict[str, Any] = None
    ):
        """Log error with context."""
        self.error(
            f"Error occurred: {error_type}",
            error_type=error_type,
            error_message=error_message,
            context=context or {},
            event_type="error",
        )


# Global logger instance
_logger = None


def get_logger(name: str = "fusedhecke") -> FusedHeckeLogger:
    """Get global logger instance."""
    global _logger
    if _logger is None or _logger.name != name:
        _logger = FusedHeckeLogger(name)
    return _logger


def setup_logging(level: Optional[str] = None) -> FusedHeckeLogger:
    """Rebuild the global logger, optionally forcing a level."""
    global _logger
    _logger = FusedHeckeLogger(level=level)
    return _logger


class LoggingContextManager:
    """
    Adds fields to every record logged inside the block.

    The fields live on the shared `logging.Logger`, so every wrapper of the
    same logger sees them, including module-level ones.
    """

    def __init__(self, logger: FusedHeckeLogger, **context):
        self.logger = logger
        self.context = context
        self.saved: Dict[str, Any] = {}

    def __enter__(self):
        self.saved = self.logger.context
        setattr(self.logger.logger, _CONTEXT_ATTR, {**self.saved, **self.context})
        return self.logger

    def __exit__(self, exc_type, exc_val, exc_tb):
        setattr(self.logger.logger, _CONTEXT_ATTR, self.saved)


def log_with_context(logger: FusedHeckeLogger, **context):
    """Create logging context manager."""
    return LoggingContextManager(logger, **context)


def log_performance(operation: Optional[str] = None):
    """Decorator logging wall time of the wrapped computation at DEBUG level."""

    def decorator(func):
        name = operation or f"{func.__module__}.{func.__name__}"

        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            logger = get_logger()
            start_time = time.perf_counter()
            try:
                result = func(*args, **kwargs)
            except Exception as e:
                logger.error(
                    f"Performance: {name} failed",
                    operation=name,
                    processing_time_seconds=time.perf_counter() - start_time,
                    success=False,
                    error=str(e),
                )
                raise
            logger.log_computation(name, elapsed=time.perf_counter() - start_time)
            return result

        return wrapper

    return decorator


def log_exceptions(reraise: bool = True):
    """Decorator to log exceptions."""

    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except Exception:
                get_logger().exception(
                    f"Exception in {func.__name__}",
                    function=func.__name__,
                    module_name=func.__module__,
                )
                if reraise:
                    raise
                return None

        return wrapper

    return decorator
