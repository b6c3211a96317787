"""
Tests for configuration management.
"""

import json
import os
from fractions import Fraction
from pathlib import Path

import pytest

from config import (
    AppConfig,
    ArithmeticConfig,
    BudgetConfig,
    ConfigManager,
    Environment,
    ExecutionConfig,
    LoggingConfig,
    OutputConfig,
)


@pytest.mark.unit
class TestAppConfig:
    """Test AppConfig dataclass."""

    def test_default_config(self):
        """Test default configuration values."""
        config = AppConfig()

        assert config.environment == Environment.DEVELOPMENT.value
        assert config.debug is False
        assert isinstance(config.arithmetic, ArithmeticConfig)
        assert isinstance(config.budget, BudgetConfig)
        assert isinstance(config.execution, ExecutionConfig)
        assert isinstance(config.output, OutputConfig)
        assert isinstance(config.logging, LoggingConfig)

    def test_config_with_custom_values(self):
        """Test configuration with custom values."""
        budget = BudgetConfig(max_weight_symbolic=3, max_weight_evaluated=4)
        config = AppConfig(environment=Environment.PRODUCTION.value, budget=budget)

        assert config.environment == Environment.PRODUCTION.value
        assert config.budget.max_weight_symbolic == 3
        assert config.budget.max_weight_evaluated == 4


@pytest.mark.unit
class TestArithmeticConfig:
    """Test sample point handling."""

    def test_default_points(self):
        config = ArithmeticConfig()

        assert config.fractions() == [Fraction(7, 5), Fraction(9, 7)]

    def test_three_points_pads_with_extra(self):
        config = ArithmeticConfig()

        assert config.three_points() == [Fraction(7, 5), Fraction(9, 7), Fraction(11, 9)]

    def test_three_points_keeps_longer_lists(self):
        config = ArithmeticConfig(q_points=["2", "3", "5/2"])

        assert config.three_points() == [Fraction(2), Fraction(3), Fraction(5, 2)]


@pytest.mark.unit
class TestBudgetConfig:
    """Test BudgetConfig dataclass."""

    def test_default_budget(self):
        config = BudgetConfig()

        assert config.max_weight_symbolic == 6
        assert config.max_weight_evaluated == 7
        assert config.max_tensor_states == 729
        assert config.max_bratteli_weight == 8


@pytest.mark.unit
class TestConfigManager:
    """Test ConfigManager class."""

    def test_default_config_manager(self):
        """Test default configuration manager picks the testing file."""
        manager = ConfigManager()
        config = manager.get_config()

        assert isinstance(config, AppConfig)
        assert config.environment == "testing"
        assert config.budget.max_weight_symbolic == 5
        assert manager.is_testing()

    def test_config_manager_with_file(self, config_manager):
        """Values in the file are merged over the typed defaults."""
        config = config_manager.get_config()

        assert config.debug is True
        assert config.arithmetic.fractions() == [Fraction(3, 2), Fraction(5, 3)]
        assert config.budget.max_weight_evaluated == 5
        # untouched keys keep their defaults
        assert config.budget.max_tensor_states == 729
        assert config.output.format == "json"

    def test_environment_overrides(self, config_manager):
        """Test environment variable overrides."""
        os.environ["FUSEDHECKE_THREADS"] = "3"
        os.environ["FUSEDHECKE_Q_POINTS"] = "5/4, 13/11"
        os.environ["FUSEDHECKE_MAX_WEIGHT"] = "9"
        os.environ["FUSEDHECKE_DEBUG"] = "false"

        try:
            config = ConfigManager(config_manager.config_path).get_config()
        finally:
            del os.environ["FUSEDHECKE_Q_POINTS"]
            del os.environ["FUSEDHECKE_MAX_WEIGHT"]
            del os.environ["FUSEDHECKE_DEBUG"]

        assert config.execution.threads == 3
        assert config.arithmetic.q_points == ["5/4", "13/11"]
        assert config.budget.max_weight_evaluated == 9
        assert config.debug is False

    def test_invalid_environment_values(self, config_manager):
        """Malformed overrides are ignored."""
        os.environ["FUSEDHECKE_THREADS"] = "many"
        os.environ["FUSEDHECKE_Q_POINTS"] = "7/0"

        try:
            config = ConfigManager(config_manager.config_path).get_config()
        finally:
            del os.environ["FUSEDHECKE_Q_POINTS"]

        assert config.execution.threads == 1
        assert config.arithmetic.q_points == ["3/2", "5/3"]

    def test_save_config(self, config_manager, temp_dir):
        """Test saving configuration to file."""
        save_path = Path(temp_dir) / "saved_config.json"
        config_manager.save_config(str(save_path))

        with open(save_path) as f:
            saved_config = json.load(f)

        assert saved_config["debug"] is True
        assert saved_config["arithmetic"]["q_points"] == ["3/2", "5/3"]
        assert saved_config["budget"]["max_weight_symbolic"] == 4

    def test_update_config(self, config_manager):
        """Test updating configuration values."""
        original_debug = config_manager.get_config().debug
        config_manager.update_config(debug=not original_debug)

        assert config_manager.get_config().debug == (not original_debug)

    def test_update_config_sections(self, config_manager):
        """Section dicts update fields in place; unknown keys are skipped."""
        config = config_manager.get_config()
        config_manager.update_config(
            execution={"threads": 3}, arithmetic={"q_points": ["5/4"], "bogus": 1}, nope=2
        )

        assert config_manager.get_config() is config
        assert config.execution.threads == 3
        assert config.arithmetic.q_points == ["5/4"]
        assert not hasattr(config.arithmetic, "bogus")
        assert not hasattr(config, "nope")

    def test_nonexistent_config_file(self):
        """Test loading non-existent config file."""
        config = ConfigManager("/nonexistent/config.json").get_config()

        assert config.budget == BudgetConfig()
        assert config.environment == "testing"

    def test_invalid_json_config(self, temp_dir):
        """Test loading invalid JSON config file."""
        invalid_config_path = Path(temp_dir) / "invalid.json"
        invalid_config_path.write_text("invalid json content")

        config = ConfigManager(str(invalid_config_path)).get_config()

        assert config.budget == BudgetConfig()

    def test_unknown_keys_fall_back_to_defaults(self, temp_dir):
        """Keys outside the schema make the file unusable."""
        path = Path(temp_dir) / "unknown.json"
        path.write_text(json.dumps({"budget": {"no_such_key": 1}}))

        config = ConfigManager(str(path)).get_config()

        assert config.budget == BudgetConfig()


@pytest.mark.unit
class TestGlobalConfig:
    """Test global configuration functions."""

    def test_get_config(self):
        """Test getting global configuration."""
        from config import get_config

        assert isinstance(get_config(), AppConfig)

    def test_get_config_manager(self):
        """Test getting global configuration manager."""
        from config import get_config_manager

        assert isinstance(get_config_manager(), ConfigManager)

    def test_reload_config(self, config_manager):
        """Reloading from a path replaces the global configuration."""
        from config import get_config, reload_config

        config1 = get_config()
        reload_config(config_manager.config_path)
        config2 = get_config()

        assert config1 is not config2
        assert config2.arithmetic.q_points == ["3/2", "5/3"]
