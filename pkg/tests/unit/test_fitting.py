"""
Tests for circle fitting of point clouds.
"""

import numpy as np
import pytest

from circle_rectification.geometry.curves import Circle, Line, sample_curve
from circle_rectification.metrics import circle_fit
from circle_rectification.utils.exceptions import DegenerateCloudError, TooFewPointsError

UNIT_CIRCLE = Circle((0.0, 1.0, 0.0), 1.0, (0.0, 0.0, 1.0))


class TestCircleFit:

    def test_exact_circle(self):
        curve, rms = circle_fit(sample_curve(UNIT_CIRCLE, 20))
        assert isinstance(curve, Circle)
        assert curve.center == pytest.approx((0.0, 1.0, 0.0), abs=1e-12)
        assert curve.radius == pytest.approx(1.0, abs=1e-12)
        assert curve.normal == pytest.approx((0.0, 0.0, 1.0), abs=1e-12)
        assert rms < 1e-12

    def test_arc_in_tilted_plane(self):
        circle = Circle((1.0, -2.0, 0.5), 0.3, (1.0, 1.0, 1.0))
        arc = sample_curve(circle, 64)[:12]
        curve, rms = circle_fit(arc)
        assert curve.radius == pytest.approx(0.3, rel=1e-9)
        assert rms < 1e-10

    def test_collinear_points(self):
        points = sample_curve(Line((0.0, 1.0, 0.0), (1.0, 2.0, 3.0)), 20)
        curve, rms = circle_fit(points)
        assert isinstance(curve, Line)
        assert rms < 1e-12

    def test_noisy_circle(self, rng):
        points = sample_curve(UNIT_CIRCLE, 200) + 1e-4 * rng.normal(size=(200, 3))
        _, rms = circle_fit(points)
        assert 1e-5 <= rms <= 1e-3

    def test_too_few_points(self):
        with pytest.raises(TooFewPointsError):
            circle_fit(sample_curve(UNIT_CIRCLE, 4))

    def test_coincident_points(self):
        with pytest.raises(DegenerateCloudError):
            circle_fit(np.ones((6, 3)))

    def test_wrong_shape(self):
        with pytest.raises(ValueError):
            circle_fit(np.ones((6, 2)))
