"""
Pytest configuration and fixtures.
"""

import os
import sys

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

# Environment values from a developer .env must not reach the tests
os.environ['TEST_MODE'] = 'true'

# Add src to Python path for package imports
project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, os.path.join(project_root, 'src'))

# Hypothesis profile: geometric properties are cheap but numerically delicate,
# so keep examples moderate and deterministic
settings.register_profile(
    "geometry",
    max_examples=100,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("geometry")


@pytest.fixture
def rng():
    """Seeded generator; every test sees the same stream."""
    return np.random.default_rng(20240607)


@pytest.fixture
def clean_environment(monkeypatch):
    """Remove every CIRCLES_* variable for the duration of a test."""
    for name in list(os.environ):
        if name.startswith("CIRCLES_"):
            monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv("TEST_MODE", "true")
    return monkeypatch


@pytest.fixture
def random_dirs(rng):
    """Factory of seeded tangent parameters (k, m) in [-2, 2]^2."""
    def make(count: int):
        return rng.uniform(-2.0, 2.0, size=(count, 2)).tolist()
    return make
