"""
Integration test configuration and fixtures.

Integration tests drive the command line end to end through main_cli in a
temporary working directory. They need no external services.
"""

import json
import os

import pytest

from circle_rectification.main import main_cli
from circle_rectification.nets.sphere_net import GeometryClass, canonical_net
from circle_rectification.reports import NetModel, write_json


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    """Temporary working directory without CIRCLES_* variables."""
    for name in list(os.environ):
        if name.startswith("CIRCLES_"):
            monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv("TEST_MODE", "true")
    monkeypatch.chdir(tmp_path)
    return tmp_path


@pytest.fixture
def run_cli(workdir):
    """Run one command and return its exit code."""
    def run(*argv: str) -> int:
        return main_cli(list(argv))
    return run


@pytest.fixture
def read_json(workdir):
    """Load a JSON file written by a command."""
    def read(name: str):
        with open(workdir / name, encoding="utf-8") as f:
            return json.load(f)
    return read


@pytest.fixture
def net_file(workdir):
    """Factory writing the canonical net of a class to a JSON file."""
    def make(geometry: GeometryClass) -> str:
        path = workdir / f"{geometry.value}_net.json"
        write_json(NetModel.from_domain(canonical_net(geometry)), str(path))
        return str(path)
    return make
