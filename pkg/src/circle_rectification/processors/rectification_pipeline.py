"""
Rectification orchestrator.

This module contains the RectificationPipeline class that coordinates the
bundle steps: second common point detection, construction of the
rectifying inversion, and verification that every member becomes a line.
"""

import dataclasses
import logging
from typing import Dict, Optional

from ..bundles.bundle import BundleMember, CircleBundle, is_simple
from ..bundles.rectifier import (
    RectificationReport,
    build_rectifier,
    bundle_scale,
    second_common_point,
    verify_rectification,
)
from ..config.constants import DEFAULT_BUNDLE_TOL, DEFAULT_SAMPLES
from ..utils.exceptions import (
    BundleError,
    CircleGeometryError,
    GeometryError,
    NearParallelImagesError,
)

logger = logging.getLogger(__name__)


class RectificationPipeline:
    """
    Orchestrator for the detect -> rectify -> verify pipeline.

    The pipeline coordinates three steps:
    1. second_common_point - find the point Q shared by all members
    2. build_rectifier - the unit inversion centered at Q
    3. verify_rectification - straightness of the inverted members

    When the first two circles invert to nearly parallel lines the members
    are rotated and detection is retried.
    """

    def __init__(self, samples_per_circle: int = DEFAULT_SAMPLES,
                 tol: Optional[float] = None, relative_tol: float = DEFAULT_BUNDLE_TOL):
        """
        Initialize the pipeline.

        Args:
            samples_per_circle: Samples per member for verification
            tol: Absolute detection and verification tolerance; when None it
                is ``relative_tol`` times the bundle's median radius
            relative_tol: Tolerance in units of the bundle scale

        Raises:
            ValueError: If a parameter is out of range
        """
        if samples_per_circle < 4:
            raise ValueError("samples_per_circle must be at least 4")
        if tol is not None and tol <= 0:
            raise ValueError("tol must be positive")
        if relative_tol <= 0:
            raise ValueError("relative_tol must be positive")
        self.samples_per_circle = samples_per_circle
        self.tol = tol
        self.relative_tol = relative_tol

    def tolerance_for(self, bundle: CircleBundle) -> float:
        if self.tol is not None:
            return self.tol
        return self.relative_tol * bundle_scale(bundle)

    def detect(self, bundle: CircleBundle) -> Optional[tuple]:
        """
        Find the second common point, permuting members on near-parallel images.

        Returns:
            The point as a tuple, or None

        Raises:
            NearParallelImagesError: If every rotation of the circle members
                gives near-parallel images
        """
        tol = self.tolerance_for(bundle)
        members = list(bundle.members)
        circle_positions = [i for i, m in enumerate(members) if m.curve.kind == "circle"]
        last_error: Optional[NearParallelImagesError] = None
        for attempt in range(max(1, len(circle_positions) - 1)):
            try:
                Q = second_common_point(bundle, tol)
                return None if Q is None else tuple(float(c) for c in Q)
            except NearParallelImagesError as e:
                last_error = e
                logger.debug("Near-parallel images on attempt %d, rotating members", attempt + 1)
                # Move the second circle member to the end
                second = circle_positions[1]
                moved: BundleMember = members.pop(second)
                members.append(moved)
                bundle = CircleBundle(bundle.center, tuple(members))
                circle_positions = [i for i, m in enumerate(members) if m.curve.kind == "circle"]
        raise last_error

    def run(self, bundle: CircleBundle) -> RectificationReport:
        """
        Run the complete pipeline on a bundle.

        Args:
            bundle: Bundle to rectify

        Returns:
            RectificationReport: second_point is None when the bundle has no
            second common point, in which case no residuals are reported

        Raises:
            BundleError: If the bundle is not simple or detection fails
            GeometryError: If a geometric primitive fails
            CircleGeometryError: For unexpected failures, wrapped with details
        """
        if not is_simple(bundle):
            raise BundleError("Bundle is not simple: two members share a tangent direction")
        tol = self.tolerance_for(bundle)
        try:
            Q = self.detect(bundle)
            if Q is None:
                logger.info("No second common point: bundle is not rectifiable by an inversion")
                return RectificationReport(second_point=None, tolerance=tol)
            report = verify_rectification(bundle, build_rectifier(Q), self.samples_per_circle, tol)
            return dataclasses.replace(report, second_point=Q)

        except (BundleError, GeometryError):
            # Re-raise specific errors as-is
            raise

        except Exception as e:
            # Wrap unexpected errors in a general error
            raise CircleGeometryError(
                f"Unexpected error during rectification: {str(e)}",
                details=f"members: {len(bundle)}, Error type: {type(e).__name__}",
            )

    def summary(self, report: RectificationReport) -> Dict[str, object]:
        """Short dictionary of the report for logs and progress output."""
        return {
            "second_point": report.second_point,
            "max_residual": report.max_residual,
            "tolerance": report.tolerance,
            "rectified": report.rectified,
        }
