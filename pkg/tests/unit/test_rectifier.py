"""
Tests for second common point detection and rectification by inversion.
"""

import numpy as np
import pytest

from circle_rectification.bundles import (
    BundleMember,
    CircleBundle,
    bundle_from_AB,
    build_rectifier,
    closed_form_second_point,
    second_common_point,
    tangent_param,
    transform_bundle,
    verify_rectification,
)
from circle_rectification.bundles.rectifier import RectificationReport
from circle_rectification.geometry.curves import Circle
from circle_rectification.taylor import BivarPoly
from circle_rectification.utils.exceptions import (
    AllSamplesNearCenterError,
    FewerThanThreeCirclesError,
    NearParallelImagesError,
)

from .conftest import linear_AB

EXPECTED_Q = np.array([-1.0, 1.0, -0.5]) / 2.25


def manual_bundle(*circles):
    members = tuple(BundleMember(tangent_param(0.0, 0.1 * index), circle)
                    for index, circle in enumerate(circles))
    return CircleBundle((0.0, 0.0, 0.0), members)


def tangent_pair_bundle():
    """Two circles tangent at the origin (parallel images) followed by a transversal one."""
    return manual_bundle(Circle((0.0, 1.0, 0.0), 1.0, (0.0, 0.0, 1.0)),
                         Circle((0.0, 2.0, 0.0), 2.0, (0.0, 0.0, 1.0)),
                         Circle((1.0, 0.0, 0.0), 1.0, (0.0, 0.0, 1.0)))


class TestSecondCommonPoint:

    def test_constant_bundle(self, random_dirs):
        A, B = linear_AB(0.0, 1.0, 0.0)
        Q = second_common_point(bundle_from_AB(A, B, random_dirs(60)))
        assert Q == pytest.approx([0.0, 1.0, 0.0], abs=1e-9)

    def test_linear_bundle(self, rectifiable_bundle):
        assert second_common_point(rectifiable_bundle) == pytest.approx(EXPECTED_Q, abs=1e-9)

    def test_quadratic_bundle_has_no_second_point(self, random_dirs):
        K = BivarPoly.k()
        assert second_common_point(bundle_from_AB(K * K, BivarPoly(), random_dirs(20))) is None

    def test_bundle_of_lines(self, random_dirs):
        lines = bundle_from_AB(BivarPoly(), BivarPoly(), random_dirs(10))
        assert second_common_point(lines) is None

    def test_too_few_circles(self, random_dirs):
        A, B = linear_AB(0.0, 1.0, 0.0)
        with pytest.raises(FewerThanThreeCirclesError):
            second_common_point(bundle_from_AB(A, B, random_dirs(2)))

    def test_near_parallel_images(self):
        with pytest.raises(NearParallelImagesError):
            second_common_point(tangent_pair_bundle())

    def test_matches_closed_form(self, rng):
        dirs = rng.uniform(-2.0, 2.0, size=(60, 2)).tolist()
        for alpha, beta, gamma in rng.uniform(-2.0, 2.0, size=(100, 3)):
            A, B = linear_AB(alpha, beta, gamma)
            Q = second_common_point(bundle_from_AB(A, B, dirs))
            assert Q is not None
            assert Q == pytest.approx(closed_form_second_point(alpha, beta, gamma), abs=1e-9)

    def test_rigid_motion(self, rectifiable_bundle):
        angle = 0.7
        R = np.array([[np.cos(angle), 0.0, np.sin(angle)],
                      [0.0, 1.0, 0.0],
                      [-np.sin(angle), 0.0, np.cos(angle)]])
        t = np.array([0.3, -1.0, 2.0])
        Q = second_common_point(transform_bundle(rectifiable_bundle, R, t))
        assert Q == pytest.approx(R @ EXPECTED_Q + t, abs=1e-8)


class TestBuildRectifier:

    def test_unit_inversion_at_point(self):
        inv = build_rectifier((0.0, 1.0, 0.0))
        assert inv.center == (0.0, 1.0, 0.0)
        assert inv.radius == 1.0

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            build_rectifier((np.nan, 0.0, 0.0))


class TestVerifyRectification:

    def test_rectifiable_bundle_becomes_lines(self, rectifiable_bundle):
        report = verify_rectification(rectifiable_bundle, build_rectifier(EXPECTED_Q), tol=1e-7)
        assert len(report.per_circle_residual) == 60
        assert report.max_residual < 1e-8
        assert report.passed

    def test_negative_control(self, random_dirs):
        K = BivarPoly.k()
        bundle = bundle_from_AB(K * K, BivarPoly(), random_dirs(20))
        report = verify_rectification(bundle, build_rectifier((0.0, 1.0, 0.0)))
        assert report.max_residual > 1e-3
        assert not report.passed

    def test_too_few_samples(self, rectifiable_bundle):
        with pytest.raises(ValueError):
            verify_rectification(rectifiable_bundle, build_rectifier(EXPECTED_Q), samples_per_circle=3)

    def test_all_samples_near_center(self):
        tiny = manual_bundle(Circle((0.0, 1.0, 0.0), 1e-4, (0.0, 0.0, 1.0)))
        with pytest.raises(AllSamplesNearCenterError):
            verify_rectification(tiny, build_rectifier((0.0, 1.0, 0.0)))


class TestRectificationReport:

    def test_without_tolerance_never_passes(self):
        assert not RectificationReport(second_point=(0.0, 1.0, 0.0), max_residual=0.0).passed

    def test_rectified_needs_second_point(self):
        report = RectificationReport(second_point=None, max_residual=0.0, tolerance=1.0)
        assert report.passed
        assert not report.rectified
