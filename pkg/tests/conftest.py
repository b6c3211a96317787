"""
Pytest configuration and fixtures for FusedHecke tests.
"""

import json
import os
import tempfile
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

# Must be set before the first configuration load
os.environ.setdefault("FUSEDHECKE_ENV", "testing")

from config import ConfigManager, reload_config  # noqa: E402
from permcomb import Blocks  # noqa: E402
from shapes import Partition  # noqa: E402

# Examples share the per-test configuration reset below
settings.register_profile(
    "fusedhecke", suppress_health_check=[HealthCheck.function_scoped_fixture]
)
settings.load_profile("fusedhecke")


@pytest.fixture(scope="session")
def temp_dir():
    """Create a temporary directory for test files."""
    with tempfile.TemporaryDirectory() as tmp_dir:
        yield tmp_dir


@pytest.fixture(autouse=True)
def setup_test_environment():
    """Pin the testing environment and give every test a fresh configuration."""
    test_env = {
        "FUSEDHECKE_ENV": "testing",
        "FUSEDHECKE_LOG_LEVEL": "WARNING",
        "FUSEDHECKE_THREADS": "1",
    }
    saved = {key: os.environ.get(key) for key in test_env}
    for key, value in test_env.items():
        os.environ[key] = value
    reload_config()

    yield

    for key, value in saved.items():
        if value is None:
            os.environ.pop(key, None)
        else:
            os.environ[key] = value
    reload_config()


@pytest.fixture
def config_manager(temp_dir):
    """Configuration manager reading a small custom file."""
    with tempfile.NamedTemporaryFile(
        mode="w", suffix=".json", dir=temp_dir, delete=False
    ) as f:
        test_config = {
            "debug": True,
            "arithmetic": {"q_points": ["3/2", "5/3"], "extra_q_point": "7/4"},
            "budget": {"max_weight_symbolic": 4, "max_weight_evaluated": 5},
        }
        json.dump(test_config, f)
        f.flush()

    manager = ConfigManager(f.name)
    yield manager

    os.unlink(f.name)


@pytest.fixture
def q0():
    """A generic rational sample point."""
    return Fraction(7, 5)


@pytest.fixture
def blocks_22():
    return Blocks((2, 2))


@pytest.fixture
def blocks_211():
    return Blocks((2, 1, 1))


@pytest.fixture
def P():
    """Shorthand partition constructor: P(3, 1) is the partition (3,1)."""

    def make(*parts):
        return Partition(tuple(parts))

    return make
