"""
FusedHecke Configuration Management
Centralized configuration system with environment support
"""

import json
import logging
import os
from dataclasses import asdict, dataclass, field, is_dataclass
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, List, Optional

from omegaconf import OmegaConf
from omegaconf.errors import OmegaConfBaseException


class Environment(Enum):
    """Environment types."""

    DEVELOPMENT = "development"
    TESTING = "testing"
    PRODUCTION = "production"


@dataclass
class ArithmeticConfig:
    """Generic evaluation points for rank computations."""

    q_points: List[str] = field(default_factory=lambda: ["7/5", "9/7"])
    extra_q_point: str = "11/9"

    def fractions(self) -> List[Fraction]:
        """Primary sample points as exact rationals."""
        return [Fraction(p) for p in self.q_points]

    def three_points(self) -> List[Fraction]:
        """At least three sample points, padding with the extra point."""
        points = self.fractions()
        extra = Fraction(self.extra_q_point)
        if len(points) < 3 and extra not in points:
            points.append(extra)
        return points


@dataclass
class BudgetConfig:
    """Size limits for the expensive checks."""

    max_weight_symbolic: int = 6
    max_weight_evaluated: int = 7
    max_tensor_states: int = 729
    max_bratteli_weight: int = 8


@dataclass
class ExecutionConfig:
    """Internal parallelism."""

    threads: int = 1


@dataclass
class OutputConfig:
    """Output rendering."""

    format: str = "json"
    indent: int = 2


@dataclass
class LoggingConfig:
    """Logging configuration."""

    level: str = "WARNING"
    format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    file: Optional[str] = None
    max_file_size: int = 10485760  # 10MB
    backup_count: int = 5


@dataclass
class AppConfig:
    """Main application configuration."""

    environment: str = Environment.DEVELOPMENT.value
    debug: bool = False
    arithmetic: ArithmeticConfig = field(default_factory=ArithmeticConfig)
    budget: BudgetConfig = field(default_factory=BudgetConfig)
    execution: ExecutionConfig = field(default_factory=ExecutionConfig)
    output: OutputConfig = field(default_factory=OutputConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)


class ConfigManager:
    """Configuration manager with environment support."""

    def __init__(self, config_path: Optional[str] = None) -> None:
        self.config_path = config_path or self._get_default_config_path()
        self.config = self._load_config()
        self._apply_environment_overrides()

    def _get_default_config_path(self) -> str:
        """Get default configuration file path."""
        env = os.getenv("FUSEDHECKE_ENV", "development")
        return str(Path(__file__).parent / "config" / f"{env}.json")

    def _load_config(self) -> AppConfig:
        """Load configuration from file, merged over the typed defaults."""
        if os.path.exists(self.config_path):
            try:
                with open(self.config_path, "r") as f:
                    config_data = json.load(f)
                return self._dict_to_config(config_data)
            except (json.JSONDecodeError, OmegaConfBaseException) as e:
                logging.warning(f"Could not load config from {self.config_path}: {e}")

        return AppConfig()

    def _dict_to_config(self, data: dict) -> AppConfig:
        """Convert dictionary to AppConfig via a structured merge."""
        schema = OmegaConf.structured(AppConfig)
        merged = OmegaConf.merge(schema, OmegaConf.create(data))
        return OmegaConf.to_object(merged)

    def _apply_environment_overrides(self) -> None:
        """Apply environment variable overrides."""
        if env := os.getenv("FUSEDHECKE_ENV"):
            self.config.environment = env

        if debug := os.getenv("FUSEDHECKE_DEBUG"):
            self.config.debug = debug.lower() in ("true", "1", "yes")

        if threads := os.getenv("FUSEDHECKE_THREADS"):
            try:
                self.config.execution.threads = max(1, int(threads))
            except ValueError:
                logging.warning(f"Invalid thread count: {threads}")

        if q_points := os.getenv("FUSEDHECKE_Q_POINTS"):
            points = [p.strip() for p in q_points.split(",") if p.strip()]
            try:
                [Fraction(p) for p in points]
                self.config.arithmetic.q_points = points
            except (ValueError, ZeroDivisionError):
                logging.warning(f"Invalid q points: {q_points}")

        if max_weight := os.getenv("FUSEDHECKE_MAX_WEIGHT"):
            try:
                self.config.budget.max_weight_evaluated = int(max_weight)
            except ValueError:
                logging.warning(f"Invalid weight budget: {max_weight}")

        if log_level := os.getenv("FUSEDHECKE_LOG_LEVEL"):
            self.config.logging.level = log_level.upper()

        if log_file := os.getenv("FUSEDHECKE_LOG_FILE"):
            self.config.logging.file = log_file

    def save_config(self, path: Optional[str] = None) -> None:
        """Save configuration to file."""
        save_path = path or self.config_path
        Path(save_path).parent.mkdir(parents=True, exist_ok=True)
        with open(save_path, "w") as f:
            json.dump(asdict(self.config), f, indent=2)

    def get_config(self) -> AppConfig:
        """Get current configuration."""
        return self.config

    def update_config(self, **kwargs: Any) -> None:
        """
        Update configuration values in place.

        Section names take a dict of field values, e.g.
        ``update_config(execution={"threads": 2})``; unknown keys are skipped.
        """
        for key, value in kwargs.items():
            if not hasattr(self.config, key):
                logging.warning(f"Unknown configuration key: {key}")
                continue
            section = getattr(self.config, key)
            if is_dataclass(section) and isinstance(value, dict):
                for name, item in value.items():
                    if hasattr(section, name):
                        setattr(section, name, item)
                    else:
                        logging.warning(f"Unknown configuration key: {key}.{name}")
            else:
                setattr(self.config, key, value)

    def is_testing(self) -> bool:
        """Check if running under the test environment."""
        return self.config.environment == Environment.TESTING.value


# Global configuration instance
_config_manager = None


def get_config() -> AppConfig:
    """Get global configuration instance."""
    return get_config_manager().get_config()


def get_config_manager() -> ConfigManager:
    """Get global configuration manager instance."""
    global _config_manager
    if _config_manager is None:
        _config_manager = ConfigManager()
    return _config_manager


def reload_config(config_path: Optional[str] = None) -> AppConfig:
    """Reload configuration from file."""
    global _config_manager
    _config_manager = ConfigManager(config_path)
    return _config_manager.get_config()
