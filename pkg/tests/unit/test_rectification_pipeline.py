"""
Tests for the RectificationPipeline orchestrator.
"""

import numpy as np
import pytest

from circle_rectification.bundles import BundleMember, CircleBundle, bundle_from_AB, tangent_param
from circle_rectification.geometry.curves import Circle
from circle_rectification.processors import RectificationPipeline
from circle_rectification.processors import rectification_pipeline as pipeline_module
from circle_rectification.taylor import BivarPoly
from circle_rectification.utils.exceptions import BundleError, CircleGeometryError


class TestRectificationPipelineInit:

    def test_defaults(self):
        pipeline = RectificationPipeline()
        assert pipeline.samples_per_circle == 64
        assert pipeline.tol is None

    @pytest.mark.parametrize("kwargs", [
        {"samples_per_circle": 3},
        {"tol": 0.0},
        {"relative_tol": -1e-7},
    ])
    def test_invalid_parameters(self, kwargs):
        with pytest.raises(ValueError):
            RectificationPipeline(**kwargs)


class TestRectificationPipelineRun:

    def test_rectifiable_bundle(self, rectifiable_bundle):
        report = RectificationPipeline().run(rectifiable_bundle)
        assert report.second_point == pytest.approx(np.array([-1.0, 1.0, -0.5]) / 2.25, abs=1e-9)
        assert report.max_residual < 1e-8
        assert report.rectified

    def test_non_rectifiable_bundle(self, random_dirs):
        K = BivarPoly.k()
        report = RectificationPipeline().run(bundle_from_AB(K * K, BivarPoly(), random_dirs(20)))
        assert report.second_point is None
        assert report.per_circle_residual == []
        assert not report.rectified

    def test_fixed_tolerance(self, rectifiable_bundle):
        report = RectificationPipeline(tol=1e-6).run(rectifiable_bundle)
        assert report.tolerance == 1e-6

    def test_rejects_non_simple_bundle(self, random_dirs):
        dirs = random_dirs(5)
        A = BivarPoly.constant(1)
        with pytest.raises(BundleError, match="not simple"):
            RectificationPipeline().run(bundle_from_AB(A, BivarPoly(), dirs + [dirs[0]]))

    def test_unexpected_errors_are_wrapped(self, rectifiable_bundle, monkeypatch):
        def broken(*args, **kwargs):
            raise RuntimeError("boom")

        monkeypatch.setattr(pipeline_module, "verify_rectification", broken)
        with pytest.raises(CircleGeometryError, match="Unexpected error during rectification") as exc_info:
            RectificationPipeline().run(rectifiable_bundle)
        assert "RuntimeError" in exc_info.value.details

    def test_summary(self, rectifiable_bundle):
        pipeline = RectificationPipeline()
        summary = pipeline.summary(pipeline.run(rectifiable_bundle))
        assert set(summary) == {"second_point", "max_residual", "tolerance", "rectified"}
        assert summary["rectified"] is True


class TestDetectRetry:

    def test_near_parallel_pair_is_rotated(self):
        circles = (Circle((0.0, 1.0, 0.0), 1.0, (0.0, 0.0, 1.0)),
                   Circle((0.0, 2.0, 0.0), 2.0, (0.0, 0.0, 1.0)),
                   Circle((1.0, 0.0, 0.0), 1.0, (0.0, 0.0, 1.0)))
        members = tuple(BundleMember(tangent_param(0.0, 0.1 * i), c) for i, c in enumerate(circles))
        # The retry pairs the first and third circles; the second one misses their common point
        assert RectificationPipeline().detect(CircleBundle((0.0, 0.0, 0.0), members)) is None
