"""
Unit test configuration and fixtures.

This module provides small geometric objects shared by the unit tests:
seeded bundles, canonical nets and metrics.
"""

import os

import pytest

from circle_rectification.bundles import bundle_from_AB
from circle_rectification.metrics import MetricField, MetricKind
from circle_rectification.nets import GeometryClass, canonical_net
from circle_rectification.taylor import BivarPoly

# Ensure unit tests don't accidentally pick up run configuration
for _name in ("CIRCLES_SEED", "CIRCLES_TOL", "CIRCLES_SAMPLES", "CIRCLES_LOG_DIR", "CIRCLES_VERBOSE"):
    os.environ.pop(_name, None)


def linear_AB(alpha: float, beta: float, gamma: float):
    """A = alpha k + beta, B = alpha m + gamma."""
    A = BivarPoly.linear(alpha, 0, beta)
    B = BivarPoly.linear(0, alpha, gamma)
    return A, B


@pytest.fixture
def rectifiable_bundle(random_dirs):
    """Bundle of A = k + 1, B = m - 1/2 with 60 seeded directions; Q = (-1, 1, -1/2) / 2.25."""
    A, B = linear_AB(1.0, 1.0, -0.5)
    return bundle_from_AB(A, B, random_dirs(60))


@pytest.fixture(params=list(GeometryClass), ids=lambda g: g.value)
def canonical(request):
    """Each canonical net with its class."""
    return request.param, canonical_net(request.param)


@pytest.fixture(params=list(MetricKind), ids=lambda k: k.value)
def any_metric(request):
    return MetricField(request.param)
