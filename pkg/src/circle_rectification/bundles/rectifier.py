"""
Second common point detection and rectification by inversion.

A bundle of circles through a center O is rectifiable exactly when all
members pass through one more common point Q. Inverting in a sphere
centered at Q then sends every member to a straight line.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..config.constants import CENTER_EXCLUSION, DEFAULT_BUNDLE_TOL, NEAR_PARALLEL_SIN
from ..geometry.curves import Circle, Line, circle_point, fit_line, plane_basis, point_circle_distance, sample_curve
from ..geometry.spheres import Inversion, Vector3, invert_point, to_tuple3
from ..utils.exceptions import (
    AllSamplesNearCenterError,
    FewerThanThreeCirclesError,
    NearParallelImagesError,
)
from .bundle import CircleBundle

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RectificationReport:
    """Straightness of the inverted bundle members."""
    second_point: Optional[Vector3]
    per_circle_residual: List[float] = field(default_factory=list)
    max_residual: float = 0.0
    tolerance: Optional[float] = None

    @property
    def passed(self) -> bool:
        return self.tolerance is not None and self.max_residual < self.tolerance

    @property
    def rectified(self) -> bool:
        """A second point was found and every member inverts to a line."""
        return self.second_point is not None and self.passed


def bundle_scale(bundle: CircleBundle) -> float:
    """Median radius of the circle members; 1 for a bundle of lines."""
    radii = [c.radius for c in bundle.circles]
    return float(np.median(radii)) if radii else 1.0


def _image_line(circle: Circle, inv: Inversion) -> Line:
    """Image under ``inv`` of a circle through the inversion center."""
    center = np.asarray(inv.center)
    e1, e2 = plane_basis(circle.normal)
    offset = center - np.asarray(circle.center)
    start = math.atan2(float(offset @ e2), float(offset @ e1))
    images = [invert_point(inv, circle_point(circle, start + turn))
              for turn in (0.5 * math.pi, math.pi, 1.5 * math.pi)]
    line, _ = fit_line(images)
    return line


def _closest_approach(first: Line, second: Line) -> Tuple[np.ndarray, float]:
    """Midpoint of the common perpendicular of two lines and its length."""
    p1, u1 = np.asarray(first.point), np.asarray(first.direction)
    p2, u2 = np.asarray(second.point), np.asarray(second.direction)
    sine = float(np.linalg.norm(np.cross(u1, u2)))
    if sine < NEAR_PARALLEL_SIN:
        raise NearParallelImagesError("Inverted images of the first two circles are nearly parallel",
                                      details=f"sin(angle)={sine:.3e}")
    w = p1 - p2
    b = float(u1 @ u2)
    d = float(u1 @ w)
    e = float(u2 @ w)
    denom = 1.0 - b * b
    s = (b * e - d) / denom
    t = (e - b * d) / denom
    on_first = p1 + s * u1
    on_second = p2 + t * u2
    return (on_first + on_second) / 2.0, float(np.linalg.norm(on_first - on_second))


def second_common_point(bundle: CircleBundle, tol: Optional[float] = None) -> Optional[np.ndarray]:
    """
    Find the second point shared by every member of a bundle.

    The first two circle members are inverted in the unit sphere at the
    bundle center, their image lines are intersected, and the intersection
    is mapped back to a candidate Q. Q is returned only if every member
    passes within ``tol`` of it.

    Args:
        bundle: Simple bundle with at least three circle members
        tol: Acceptance distance; defaults to 1e-7 times the median radius

    Returns:
        The common point, or None if there is none (a bundle of lines has
        its second point at infinity)

    Raises:
        FewerThanThreeCirclesError: If the bundle has one or two circles
        NearParallelImagesError: If the first two images are nearly parallel;
            permute the members and retry
    """
    circles = bundle.circles
    if not circles:
        logger.debug("Bundle of lines: second point at infinity")
        return None
    if len(circles) < 3:
        raise FewerThanThreeCirclesError(
            "Second point search needs at least three circle members",
            details=f"got {len(circles)}",
        )
    if tol is None:
        tol = DEFAULT_BUNDLE_TOL * bundle_scale(bundle)

    center = np.asarray(bundle.center)
    inv = Inversion(bundle.center, 1.0)
    midpoint, gap = _closest_approach(_image_line(circles[0], inv), _image_line(circles[1], inv))
    offset2 = float((midpoint - center) @ (midpoint - center))
    if offset2 == 0.0:
        return None
    # Distances near the image point shrink by |M - O|^2 when mapped back
    if gap / offset2 >= tol:
        logger.debug("Image lines are skew: gap %.3e", gap)
        return None
    candidate = invert_point(inv, midpoint)

    worst = max(point_circle_distance(member.curve, candidate) for member in bundle.members)
    if worst >= tol:
        logger.debug("Candidate %s rejected: worst member distance %.3e", candidate, worst)
        return None
    logger.info("Second common point %s (worst member distance %.3e)", candidate, worst)
    return candidate


def build_rectifier(Q: Sequence[float]) -> Inversion:
    """The unit inversion centered at Q, which maps circles through Q to lines."""
    point = np.asarray(Q, dtype=float)
    if not np.all(np.isfinite(point)):
        raise ValueError(f"Rectifier center must be finite, got {tuple(point)}")
    return Inversion(to_tuple3(point), 1.0)


def verify_rectification(bundle: CircleBundle, inv: Inversion, samples_per_circle: int = 64,
                         tol: Optional[float] = None) -> RectificationReport:
    """
    Measure how straight the members become under an inversion.

    Each member is sampled, samples within 1e-3 of the inversion center are
    dropped, the rest are inverted and fitted by a total-least-squares line.

    Args:
        bundle: Bundle to check
        inv: Candidate rectifying inversion
        samples_per_circle: Samples per member (at least 4)
        tol: Optional acceptance threshold recorded in the report

    Returns:
        RectificationReport: Per-member RMS line residuals and their maximum

    Raises:
        AllSamplesNearCenterError: If a member has fewer than two usable samples
    """
    if samples_per_circle < 4:
        raise ValueError("samples_per_circle must be at least 4")
    center = np.asarray(inv.center)
    exclusion = CENTER_EXCLUSION * inv.radius
    span = bundle_scale(bundle)
    residuals = []
    for index, member in enumerate(bundle.members):
        points = sample_curve(member.curve, samples_per_circle, span=span)
        kept = points[np.linalg.norm(points - center, axis=1) > exclusion]
        if len(kept) < 2:
            raise AllSamplesNearCenterError(
                "Every sample of a member lies next to the inversion center",
                details=f"member {index}",
            )
        images = np.array([invert_point(inv, p) for p in kept])
        residuals.append(fit_line(images)[1])
    max_residual = max(residuals) if residuals else 0.0
    return RectificationReport(
        second_point=None,
        per_circle_residual=residuals,
        max_residual=max_residual,
        tolerance=tol,
    )
