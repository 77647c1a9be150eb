"""
Constant-curvature suite for metrics whose geodesics are circles.

This module contains the BeltramiChecker class that integrates seeded
geodesics, checks that they are circles, rectifies them with the metric's
characteristic map and measures the constancy of sectional curvature.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np

from ..config.constants import (
    BELTRAMI_BALL,
    BELTRAMI_CURVATURE_PLANES,
    BELTRAMI_CURVATURE_POINTS,
    BELTRAMI_GEODESICS,
    BELTRAMI_STEPS,
    BELTRAMI_T,
    CIRCLE_FIT_RMS_TOL,
    CURVATURE_BALL,
    CURVATURE_TOL,
    IMAGE_LINE_TOL,
)
from ..geometry.curves import line_fit_residual
from ..metrics.connection import CurvatureSurvey, curvature_survey, random_ball_points
from ..metrics.fields import MetricField, MetricKind
from ..metrics.fitting import circle_fit
from ..metrics.geodesics import energy_drift, geodesic_integrate, normalize_velocity
from ..metrics.maps import geometry_of, lifted_plane_residual, rectifying_map
from ..nets.sphere_net import GeometryClass, canonical_net, points_line_residual
from ..utils.exceptions import CircleGeometryError, MetricError, NetError

logger = logging.getLogger(__name__)

ENERGY_DRIFT_TOL = 1e-8


@dataclass(frozen=True)
class BeltramiReport:
    """Per-geodesic residuals and the curvature survey of one metric."""
    metric: str
    seed: int
    expected_curvature: float
    circle_rms: List[float] = field(default_factory=list)
    line_residuals: List[float] = field(default_factory=list)
    net_residuals: List[float] = field(default_factory=list)
    lift_residuals: List[float] = field(default_factory=list)
    energy_drifts: List[float] = field(default_factory=list)
    curvature: Optional[CurvatureSurvey] = None
    tolerances: Dict[str, float] = field(default_factory=dict)

    @staticmethod
    def _max(values: List[float]) -> float:
        return max(values) if values else 0.0

    @property
    def max_circle_rms(self) -> float:
        return self._max(self.circle_rms)

    @property
    def max_line_residual(self) -> float:
        return self._max(self.line_residuals)

    @property
    def max_net_residual(self) -> float:
        return self._max(self.net_residuals)

    @property
    def max_lift_residual(self) -> float:
        return self._max(self.lift_residuals)

    @property
    def max_energy_drift(self) -> float:
        return self._max(self.energy_drifts)

    def failures(self) -> List[str]:
        """Names of the checks that did not pass."""
        tol = self.tolerances
        failed = []
        if self.max_circle_rms >= tol["circle_rms"]:
            failed.append("circle_fit")
        if self.max_line_residual >= tol["image_line"]:
            failed.append("image_line")
        if self.max_net_residual >= tol["image_line"]:
            failed.append("net_line")
        if self.max_lift_residual >= tol["image_line"]:
            failed.append("gnomonic_lift")
        if self.max_energy_drift >= tol["energy_drift"]:
            failed.append("energy")
        if self.curvature is not None:
            if abs(self.curvature.mean - self.expected_curvature) >= tol["curvature"]:
                failed.append("curvature_mean")
            if self.curvature.stddev >= tol["curvature"]:
                failed.append("curvature_stddev")
        return failed

    @property
    def passed(self) -> bool:
        return not self.failures()


def characteristic_net_class(M: MetricField) -> GeometryClass:
    """Class of the net whose characteristic map straightens the geodesics of M."""
    if M.kind in (MetricKind.CIRCULAR_HYPERBOLIC, MetricKind.CIRCULAR_ELLIPTIC):
        return geometry_of(M)
    return GeometryClass.EUCLIDEAN


class BeltramiChecker:
    """
    Orchestrator for the geodesics-are-circles and constant-curvature suite.

    The checker coordinates four steps for each seeded geodesic:
    1. geodesic_integrate - RK4 path from a random point at unit speed
    2. circle_fit - RMS distance of the path from its best circle
    3. characteristic map - straightness of the mapped path, both in the
       affine chart and projectively through the canonical net
    4. gnomonic lift - the mapped path lifts into a 2-plane of R^4
    and finally surveys the sectional curvature at random points and planes.
    """

    def __init__(self, metric: MetricField, n_geodesics: int = BELTRAMI_GEODESICS,
                 ball: float = BELTRAMI_BALL, T: float = BELTRAMI_T, steps: int = BELTRAMI_STEPS,
                 curvature_points: int = BELTRAMI_CURVATURE_POINTS,
                 curvature_planes: int = BELTRAMI_CURVATURE_PLANES,
                 curvature_ball: float = CURVATURE_BALL,
                 tolerances: Optional[Dict[str, float]] = None):
        """
        Initialize the checker.

        Args:
            metric: Metric to check
            n_geodesics: Number of seeded geodesics
            ball: Radius of the ball the initial points are drawn from
            T: Time horizon of each geodesic (unit metric speed)
            steps: RK4 steps per geodesic
            curvature_points: Points of the curvature survey
            curvature_planes: Random planes per survey point
            curvature_ball: Radius of the ball the survey points are drawn from
            tolerances: Overrides for 'circle_rms', 'image_line',
                'energy_drift' and 'curvature'

        Raises:
            ValueError: If a parameter is out of range
        """
        if n_geodesics < 0 or curvature_points < 0 or curvature_planes < 1:
            raise ValueError("Sample counts must be non-negative")
        if not 0 < ball < metric.domain_radius:
            raise ValueError(f"Initial ball radius must lie in (0, {metric.domain_radius:g})")
        if not T > 0:
            raise ValueError("Time horizon must be positive")
        self.metric = metric
        self.n_geodesics = n_geodesics
        self.ball = ball
        self.T = T
        self.steps = steps
        self.curvature_points = curvature_points
        self.curvature_planes = curvature_planes
        self.curvature_ball = curvature_ball
        self.tolerances = {
            "circle_rms": CIRCLE_FIT_RMS_TOL,
            "image_line": IMAGE_LINE_TOL,
            "energy_drift": ENERGY_DRIFT_TOL,
            "curvature": CURVATURE_TOL,
        }
        self.tolerances.update(tolerances or {})
        self.rectifier = rectifying_map(metric)
        self.net = canonical_net(characteristic_net_class(metric))
        self.geometry = geometry_of(metric)

    def check_geodesic(self, x0: np.ndarray, direction: np.ndarray) -> Dict[str, float]:
        """Residuals of one geodesic started at x0 in the given direction."""
        v0 = normalize_velocity(self.metric, x0, direction)
        path = geodesic_integrate(self.metric, x0, v0, self.T, self.steps)
        points = path.points
        _, rms = circle_fit(points)
        images = self.rectifier.apply_all(points)
        result = {
            "circle_rms": rms,
            "line": line_fit_residual(images),
            "net": points_line_residual(self.net, points),
            "energy": energy_drift(self.metric, path),
        }
        if self.geometry is not GeometryClass.EUCLIDEAN:
            result["lift"] = lifted_plane_residual(images, self.geometry)
        return result

    def check(self, seed: int) -> BeltramiReport:
        """
        Run the complete suite.

        Args:
            seed: Seed of the generator; geodesics and curvature samples use
                independent child streams

        Returns:
            BeltramiReport: Residuals, survey and pass/fail

        Raises:
            MetricError: If a geodesic leaves the domain or a metric step fails
            NetError: If a path point is a base point of the net
            CircleGeometryError: For unexpected failures, wrapped with details
        """
        geodesic_rng, curvature_rng = (np.random.default_rng(s)
                                       for s in np.random.SeedSequence(seed).spawn(2))
        try:
            # Step 1: Seeded geodesics
            starts = random_ball_points(geodesic_rng, self.n_geodesics, self.ball)
            directions = geodesic_rng.normal(size=(self.n_geodesics, 3))
            results = []
            for index, (x0, direction) in enumerate(zip(starts, directions)):
                results.append(self.check_geodesic(x0, direction))
                logger.debug("Geodesic %d: %s", index, results[-1])

            # Step 2: Curvature survey
            survey = None
            if self.curvature_points:
                survey = curvature_survey(self.metric, curvature_rng, self.curvature_points,
                                          self.curvature_planes, self.curvature_ball)

            report = BeltramiReport(
                metric=self.metric.name,
                seed=seed,
                expected_curvature=self.metric.expected_curvature,
                circle_rms=[r["circle_rms"] for r in results],
                line_residuals=[r["line"] for r in results],
                net_residuals=[r["net"] for r in results],
                lift_residuals=[r["lift"] for r in results if "lift" in r],
                energy_drifts=[r["energy"] for r in results],
                curvature=survey,
                tolerances=dict(self.tolerances),
            )
            logger.info("Beltrami suite for %s: %s", self.metric.name,
                        "passed" if report.passed else f"failed {report.failures()}")
            return report

        except (MetricError, NetError):
            # Re-raise specific errors as-is
            raise

        except Exception as e:
            # Wrap unexpected errors in a general error
            raise CircleGeometryError(
                f"Unexpected error during the Beltrami suite: {str(e)}",
                details=f"metric: {self.metric.name}, Error type: {type(e).__name__}",
            )
