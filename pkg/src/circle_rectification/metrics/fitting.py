"""
Circle fitting for point clouds in R^3.

The cloud is projected onto its best-fit plane, a circle is fitted
algebraically in that plane and refined on geometric distance. Clouds with
negligible curvature are reported as lines.
"""

import logging
from typing import Sequence, Tuple

import numpy as np
from scipy.optimize import least_squares

from ..config.constants import LINE_CURVATURE_FACTOR
from ..geometry.curves import Circle, CircleOrLine, fit_line
from ..utils.exceptions import DegenerateCloudError, TooFewPointsError

logger = logging.getLogger(__name__)

MIN_FIT_POINTS = 5


def _algebraic_circle(uv: np.ndarray) -> Tuple[float, np.ndarray, float]:
    """
    Fit A(u^2 + w^2) + D u + E w + F = 0 by the smallest singular vector.

    Returns:
        Tuple of the curvature 2|A| / sqrt(D^2 + E^2 - 4AF), the center and
        the radius (center and radius are meaningless when the curvature is 0)
    """
    design = np.column_stack([np.sum(uv * uv, axis=1), uv[:, 0], uv[:, 1], np.ones(len(uv))])
    _, _, vt = np.linalg.svd(design)
    A, D, E, F = vt[-1]
    root = float(np.sqrt(max(D * D + E * E - 4.0 * A * F, 0.0)))
    if A == 0.0 or root == 0.0:
        return 0.0, np.zeros(2), 0.0
    curvature = 2.0 * abs(A) / root
    return curvature, np.array([-D / (2.0 * A), -E / (2.0 * A)]), 1.0 / curvature


def circle_fit(points: Sequence[Sequence[float]]) -> Tuple[CircleOrLine, float]:
    """
    Fit a circle (or a line) to points in R^3.

    Args:
        points: At least five points, not all coincident

    Returns:
        Tuple of the fitted Circle or Line and the RMS 3-D distance of the
        points from it

    Raises:
        TooFewPointsError: If fewer than five points are given
        DegenerateCloudError: If all points coincide
    """
    cloud = np.asarray(points, dtype=float)
    if cloud.ndim != 2 or cloud.shape[1] != 3:
        raise ValueError(f"Expected an (n, 3) array of points, got shape {cloud.shape}")
    if len(cloud) < MIN_FIT_POINTS:
        raise TooFewPointsError(f"Circle fit needs at least {MIN_FIT_POINTS} points", details=f"got {len(cloud)}")
    centroid = cloud.mean(axis=0)
    centered = cloud - centroid
    spread = float(np.max(np.linalg.norm(centered, axis=1)))
    if spread == 0.0:
        raise DegenerateCloudError("All points coincide")

    _, _, vt = np.linalg.svd(centered)
    e1, e2, normal = vt[0], vt[1], vt[2]
    uv = np.column_stack([centered @ e1, centered @ e2]) / spread
    off_plane = centered @ normal

    curvature, center_uv, radius_uv = _algebraic_circle(uv)
    if curvature < LINE_CURVATURE_FACTOR:
        logger.debug("Curvature %.3e below line threshold, fitting a line", curvature / spread)
        return fit_line(cloud)

    def distances(params: np.ndarray) -> np.ndarray:
        return np.linalg.norm(uv - params[:2], axis=1) - params[2]

    refined = least_squares(distances, np.append(center_uv, radius_uv), method="lm",
                            xtol=1e-15, ftol=1e-15, gtol=1e-15)
    cu, cw, r = refined.x
    if not (np.all(np.isfinite(refined.x)) and r > 0):
        logger.debug("Geometric refinement failed, keeping the algebraic circle")
        cu, cw, r = center_uv[0], center_uv[1], radius_uv

    center = centroid + spread * (cu * e1 + cw * e2)
    circle = Circle(tuple(center), float(spread * r), tuple(normal))
    in_plane = spread * distances(np.array([cu, cw, r]))
    rms = float(np.sqrt(np.mean(in_plane ** 2 + off_plane ** 2)))
    return circle, rms
