"""
Run configuration for the circle rectification toolkit.

This module provides the RunConfig used by the command-line front end,
with validation, default values, and environment variable handling.
Library functions never read the environment; they take explicit keyword
arguments whose defaults live in constants.py.
"""

import dataclasses
import os
import sys
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np
from dotenv import load_dotenv

from ..utils.exceptions import ConfigurationError
from .constants import DEFAULT_BUNDLE_TOL, DEFAULT_SAMPLES, DEFAULT_SEED

MAX_SEED = 2 ** 64 - 1


@dataclass
class RunConfig:
    """Configuration of one command-line run."""

    # Reproducibility
    seed: int = DEFAULT_SEED

    # Verification
    tol: float = DEFAULT_BUNDLE_TOL
    samples: int = DEFAULT_SAMPLES
    tolerance_overrides: Dict[str, float] = field(default_factory=dict)

    # Output
    output: Optional[str] = None
    log_dir: Optional[str] = None
    verbose: bool = False
    quiet: bool = False

    def __post_init__(self):
        """Validate configuration after initialization."""
        if not isinstance(self.seed, int) or self.seed < 0 or self.seed > MAX_SEED:
            raise ValueError("seed must be an unsigned 64-bit integer")

        if not self.tol > 0:
            raise ValueError("tol must be positive")

        if self.samples < 4:
            raise ValueError("samples must be at least 4")

        for name, value in self.tolerance_overrides.items():
            if not value > 0:
                raise ValueError(f"tolerance override {name!r} must be positive")

    @classmethod
    def from_environment(cls) -> 'RunConfig':
        """
        Create configuration from environment variables.

        Returns:
            RunConfig: Configuration with environment values over the defaults

        Raises:
            ConfigurationError: If an environment variable is invalid
        """
        # In test mode the environment is prepared by the test fixtures
        if os.getenv('TEST_MODE') != 'true':
            load_dotenv()

        env_vars = validate_environment_variables()
        return cls(
            seed=int(env_vars.get("CIRCLES_SEED", DEFAULT_SEED)),
            tol=float(env_vars.get("CIRCLES_TOL", DEFAULT_BUNDLE_TOL)),
            samples=int(env_vars.get("CIRCLES_SAMPLES", DEFAULT_SAMPLES)),
            log_dir=env_vars.get("CIRCLES_LOG_DIR"),
            verbose=env_vars.get("CIRCLES_VERBOSE", "false").lower() == "true",
        )

    def with_overrides(self, **overrides) -> 'RunConfig':
        """Copy with every non-None keyword replacing the stored value."""
        changes = {name: value for name, value in overrides.items() if value is not None}
        return dataclasses.replace(self, **changes)

    @property
    def tolerances(self) -> Dict[str, float]:
        """Tolerances recorded in reports."""
        tolerances = {"tol": self.tol}
        tolerances.update(self.tolerance_overrides)
        return tolerances

    def child_rngs(self, count: int) -> List[np.random.Generator]:
        """Independent generators spawned from the run seed."""
        return [np.random.default_rng(s) for s in np.random.SeedSequence(self.seed).spawn(count)]


def validate_environment_variables() -> Dict[str, str]:
    """
    Validate the optional environment variables.

    Returns:
        dict: Dictionary of validated environment variables

    Raises:
        ConfigurationError: If any variable is invalid
    """
    env_vars = {}
    invalid_vars = {}

    optional_vars = {
        "CIRCLES_SEED": int,
        "CIRCLES_TOL": float,
        "CIRCLES_SAMPLES": int,
        "CIRCLES_LOG_DIR": str,
        "CIRCLES_VERBOSE": str,
    }

    for var, var_type in optional_vars.items():
        value = os.getenv(var)
        if value is None:
            continue
        try:
            if var_type == int:
                parsed_value = int(value)
                if var == "CIRCLES_SEED" and not 0 <= parsed_value <= MAX_SEED:
                    invalid_vars[var] = "must be an unsigned 64-bit integer"
                elif var == "CIRCLES_SAMPLES" and parsed_value < 4:
                    invalid_vars[var] = "must be at least 4"
                else:
                    env_vars[var] = value
            elif var_type == float:
                parsed_value = float(value)
                if not parsed_value > 0:
                    invalid_vars[var] = "must be positive"
                else:
                    env_vars[var] = value
            elif var_type == str:
                if var == "CIRCLES_VERBOSE" and value.lower() not in ["true", "false"]:
                    invalid_vars[var] = "must be 'true' or 'false'"
                elif var == "CIRCLES_LOG_DIR" and not value.strip():
                    invalid_vars[var] = "must not be empty"
                else:
                    env_vars[var] = value
        except ValueError:
            invalid_vars[var] = f"must be a valid {var_type.__name__}"

    if invalid_vars:
        raise ConfigurationError("Configuration validation failed", invalid_vars=invalid_vars)

    return env_vars


def get_configuration_help() -> str:
    """
    Get help text for configuration setup.

    Returns:
        str: Configuration help text
    """
    return """
Environment Variable Configuration:

OPTIONAL VARIABLES (command-line flags take precedence):
  CIRCLES_SEED              Seed of the random generator (default: 0)
  CIRCLES_TOL               Verification tolerance (default: 1e-7)
  CIRCLES_SAMPLES           Samples per circle (default: 64, at least 4)
  CIRCLES_LOG_DIR           Directory for markdown run logs (default: disabled)
  CIRCLES_VERBOSE           Enable debug logging (true/false, default: false)

SETUP:
  1. Optionally create a .env file in the working directory
  2. Set any of the variables above
"""


def print_configuration_error(error: ConfigurationError):
    """
    Print a user-friendly configuration error message to stderr.

    Args:
        error: Configuration error to display
    """
    print("Error: Configuration validation failed", file=sys.stderr)
    print(file=sys.stderr)

    if error.missing_vars:
        print("Missing required environment variables:", file=sys.stderr)
        for var in error.missing_vars:
            print(f"  - {var}", file=sys.stderr)
        print(file=sys.stderr)

    if error.invalid_vars:
        print("Invalid environment variable values:", file=sys.stderr)
        for var, reason in error.invalid_vars.items():
            print(f"  - {var}: {reason}", file=sys.stderr)
        print(file=sys.stderr)

    print(get_configuration_help(), file=sys.stderr)
