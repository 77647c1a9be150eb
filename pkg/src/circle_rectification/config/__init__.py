"""
Configuration module for the circle rectification toolkit.

This module provides the run configuration with validation, default
values, and environment variable handling, plus the shared numeric
constants.
"""

from .settings import (
    RunConfig,
    validate_environment_variables,
    get_configuration_help,
    print_configuration_error
)

__all__ = [
    'RunConfig',
    'validate_environment_variables',
    'get_configuration_help',
    'print_configuration_error'
]
