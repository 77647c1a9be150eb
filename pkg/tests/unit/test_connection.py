"""
Tests for Christoffel symbols and sectional curvature.
"""

import numpy as np
import pytest

from circle_rectification.metrics import (
    MetricField,
    MetricKind,
    christoffel,
    curvature_survey,
    random_ball_points,
    sectional_curvature,
)
from circle_rectification.metrics.connection import CurvatureSurvey
from circle_rectification.utils.exceptions import DegeneratePlaneError, OutOfDomainError

EUCLIDEAN = MetricField(MetricKind.EUCLIDEAN)
CIRCULAR_HYPERBOLIC = MetricField(MetricKind.CIRCULAR_HYPERBOLIC)
KLEIN = MetricField(MetricKind.KLEIN_HYPERBOLIC)


class TestChristoffel:

    def test_euclidean_is_flat(self):
        assert np.all(christoffel(EUCLIDEAN, (0.3, -1.0, 2.0)) == 0.0)

    def test_circular_hyperbolic_vanishes_at_origin(self):
        assert np.max(np.abs(christoffel(CIRCULAR_HYPERBOLIC, (0.0, 0.0, 0.0)))) < 1e-9

    def test_symmetric_in_lower_indices(self, any_metric):
        gamma = christoffel(any_metric, (0.2, -0.1, 0.3))
        assert np.allclose(gamma, np.swapaxes(gamma, 1, 2), atol=1e-10)

    def test_klein_along_axis(self):
        # Klein geodesics through the origin are straight, so Gamma^i_11 points along e1 on the x-axis
        gamma = christoffel(KLEIN, (0.4, 0.0, 0.0))
        assert abs(gamma[1, 0, 0]) < 1e-10
        assert abs(gamma[2, 0, 0]) < 1e-10

    def test_batch_shape(self, rng):
        assert christoffel(KLEIN, rng.uniform(-0.3, 0.3, size=(5, 3))).shape == (5, 3, 3, 3)

    def test_stencil_outside_domain(self):
        with pytest.raises(OutOfDomainError, match="stencil"):
            christoffel(KLEIN, (0.999995, 0.0, 0.0), h=1e-4)


class TestSectionalCurvature:

    def test_euclidean(self):
        assert abs(sectional_curvature(EUCLIDEAN, (1.0, 2.0, 3.0), (1, 0, 0), (0, 1, 0))) < 1e-8

    @pytest.mark.parametrize("kind, expected", [
        (MetricKind.KLEIN_HYPERBOLIC, -1.0),
        (MetricKind.GNOMONIC_ELLIPTIC, 1.0),
        (MetricKind.CIRCULAR_HYPERBOLIC, -1.0),
        (MetricKind.CIRCULAR_ELLIPTIC, 1.0),
    ])
    def test_constant_curvature_at_a_point(self, kind, expected):
        K = sectional_curvature(MetricField(kind), (0.2, -0.3, 0.1), (1.0, 0.5, 0.0), (0.0, 1.0, -1.0))
        assert K == pytest.approx(expected, abs=1e-3)

    def test_independent_of_plane_basis(self, rng):
        x = (0.1, 0.2, -0.3)
        u, v = rng.normal(size=(2, 3))
        a, b, c, d = 1.0, 0.5, -0.25, 1.0
        first = sectional_curvature(CIRCULAR_HYPERBOLIC, x, u, v)
        second = sectional_curvature(CIRCULAR_HYPERBOLIC, x, a * u + b * v, c * u + d * v)
        assert first == pytest.approx(second, abs=1e-6)

    def test_degenerate_plane(self):
        with pytest.raises(DegeneratePlaneError):
            sectional_curvature(KLEIN, (0.0, 0.0, 0.0), (1.0, 0.0, 0.0), (2.0, 0.0, 0.0))


class TestCurvatureSurvey:

    def test_random_ball_points(self, rng):
        points = random_ball_points(rng, 200, 0.5)
        assert points.shape == (200, 3)
        assert np.all(np.linalg.norm(points, axis=1) < 0.5)

    def test_deterministic(self):
        first = curvature_survey(KLEIN, np.random.default_rng(3), 3, 2)
        second = curvature_survey(KLEIN, np.random.default_rng(3), 3, 2)
        assert first.samples == second.samples
        assert len(first.samples) == 6

    def test_statistics(self):
        survey = CurvatureSurvey("test", [((0.0, 0.0, 0.0), -1.0), ((0.0, 0.0, 0.0), -3.0)])
        assert survey.mean == -2.0
        assert survey.stddev == pytest.approx(np.sqrt(2.0))

    def test_invalid_counts(self, rng):
        with pytest.raises(ValueError):
            curvature_survey(KLEIN, rng, 0)

    @pytest.mark.slow
    def test_all_metrics_have_constant_curvature(self, any_metric):
        survey = curvature_survey(any_metric, np.random.default_rng(0), 50, 3)
        assert survey.mean == pytest.approx(any_metric.expected_curvature, abs=1e-3)
        assert survey.stddev < 1e-3
