"""
Tests for the closed-form metrics.
"""

import numpy as np
import pytest

from circle_rectification.metrics import MetricField, MetricKind, metric_eval
from circle_rectification.utils.exceptions import OutOfDomainError

CIRCULAR_HYPERBOLIC = MetricField(MetricKind.CIRCULAR_HYPERBOLIC)
CIRCULAR_ELLIPTIC = MetricField(MetricKind.CIRCULAR_ELLIPTIC)
KLEIN = MetricField(MetricKind.KLEIN_HYPERBOLIC)
GNOMONIC = MetricField(MetricKind.GNOMONIC_ELLIPTIC)


class TestMetricField:

    def test_named(self):
        assert MetricField.named("circular-elliptic").kind is MetricKind.CIRCULAR_ELLIPTIC

    def test_unknown_name(self):
        with pytest.raises(ValueError, match="expected one of"):
            MetricField.named("spherical")

    @pytest.mark.parametrize("kind, curvature, radius", [
        (MetricKind.EUCLIDEAN, 0.0, np.inf),
        (MetricKind.KLEIN_HYPERBOLIC, -1.0, 1.0),
        (MetricKind.GNOMONIC_ELLIPTIC, 1.0, np.inf),
        (MetricKind.CIRCULAR_HYPERBOLIC, -1.0, 1.0),
        (MetricKind.CIRCULAR_ELLIPTIC, 1.0, 1.0),
    ])
    def test_constants(self, kind, curvature, radius):
        M = MetricField(kind)
        assert M.expected_curvature == curvature
        assert M.domain_radius == radius

    def test_contains(self):
        assert KLEIN.contains((0.5, 0.0, 0.0))
        assert not KLEIN.contains((1.0, 0.0, 0.0))
        assert not GNOMONIC.contains((np.nan, 0.0, 0.0))


class TestMetricEval:

    def test_circular_hyperbolic_at_origin(self):
        assert metric_eval(CIRCULAR_HYPERBOLIC, (0.0, 0.0, 0.0)) == pytest.approx(np.eye(3))

    def test_circular_hyperbolic_off_center(self):
        g = metric_eval(CIRCULAR_HYPERBOLIC, (0.5, 0.0, 0.0))
        assert g[0, 0] == pytest.approx(16.0 / 49.0, rel=1e-12)
        assert g[1, 1] == pytest.approx(16.0 / 21.0, rel=1e-12)
        assert g[0, 1] == 0.0

    def test_klein_boundary(self):
        with pytest.raises(OutOfDomainError) as exc_info:
            metric_eval(KLEIN, (1.0, 0.0, 0.0))
        assert list(exc_info.value.point) == [1.0, 0.0, 0.0]

    def test_symmetric_positive_definite(self, any_metric, rng):
        points = rng.uniform(-0.5, 0.5, size=(20, 3))
        g = metric_eval(any_metric, points)
        assert g.shape == (20, 3, 3)
        assert np.allclose(g, np.swapaxes(g, 1, 2))
        assert np.all(np.linalg.eigvalsh(g) > 0.0)

    def test_batch_matches_pointwise(self, any_metric, rng):
        points = rng.uniform(-0.5, 0.5, size=(4, 2, 3))
        batch = metric_eval(any_metric, points)
        assert batch[1, 0] == pytest.approx(metric_eval(any_metric, points[1, 0]))

    def test_bad_shape(self):
        with pytest.raises(ValueError):
            metric_eval(KLEIN, (0.0, 0.0))

    def test_radial_eigenvalue_vanishes_at_unit_sphere(self):
        for r in np.linspace(0.1, 0.99, 10):
            D = 1.0 + r * r + r ** 4
            g = metric_eval(CIRCULAR_HYPERBOLIC, (0.0, r, 0.0))
            assert g[1, 1] == pytest.approx((1.0 - r * r) ** 2 / D ** 2, rel=1e-9)

    def test_circular_elliptic_at_origin(self):
        assert metric_eval(CIRCULAR_ELLIPTIC, (0.0, 0.0, 0.0)) == pytest.approx(np.eye(3))
