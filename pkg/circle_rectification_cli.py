#!/usr/bin/env python3
"""
Command-line entry point for the circle rectification toolkit.
Run from a source checkout without installing the package.
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "src"))

from circle_rectification.main import main_cli  # noqa: E402


if __name__ == "__main__":
    sys.exit(main_cli())
