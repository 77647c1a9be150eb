"""
Geodesic integration with the classical fixed-step Runge-Kutta scheme.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import List, NamedTuple, Sequence

import numpy as np

from ..config.constants import MIN_GEODESIC_STEPS
from ..utils.exceptions import MetricError, OutOfDomainError
from .connection import christoffel
from .fields import MetricField, metric_eval

logger = logging.getLogger(__name__)


class GeodesicSample(NamedTuple):
    t: float
    x: np.ndarray
    v: np.ndarray


@dataclass(frozen=True)
class GeodesicPath:
    """Equidistant samples (t, x, v) of an integrated geodesic."""
    samples: List[GeodesicSample] = field(default_factory=list)
    step: float = 0.0

    @property
    def times(self) -> np.ndarray:
        return np.array([s.t for s in self.samples])

    @property
    def points(self) -> np.ndarray:
        return np.array([s.x for s in self.samples])

    @property
    def velocities(self) -> np.ndarray:
        return np.array([s.v for s in self.samples])

    def __len__(self):
        return len(self.samples)


def metric_speed(M: MetricField, x: Sequence[float], v: Sequence[float]) -> float:
    """sqrt(g_x(v, v))."""
    w = np.asarray(v, dtype=float)
    return math.sqrt(float(w @ metric_eval(M, x) @ w))


def normalize_velocity(M: MetricField, x: Sequence[float], v: Sequence[float]) -> np.ndarray:
    """Rescale v to unit metric speed at x."""
    speed = metric_speed(M, x, v)
    if speed == 0.0:
        raise MetricError("Cannot normalize the zero velocity")
    return np.asarray(v, dtype=float) / speed


def _acceleration(M: MetricField, x: np.ndarray, v: np.ndarray) -> np.ndarray:
    return -np.einsum("ijk,j,k->i", christoffel(M, x), v, v)


def geodesic_integrate(M: MetricField, x0: Sequence[float], v0: Sequence[float],
                       T: float, n: int) -> GeodesicPath:
    """
    Integrate x'' = -Gamma(x)(x', x') from (x0, v0) over [0, T] in n steps.

    Args:
        M: Metric
        x0: Initial point inside the domain
        v0: Nonzero initial velocity
        T: Time horizon
        n: Number of RK4 steps (at least 16)

    Returns:
        GeodesicPath: n + 1 samples at t = 0, T/n, ..., T

    Raises:
        OutOfDomainError: If the path leaves the domain; ``partial_path``
            holds the samples up to the last valid state
    """
    if n < MIN_GEODESIC_STEPS:
        raise ValueError(f"Geodesic integration needs at least {MIN_GEODESIC_STEPS} steps, got {n}")
    if not T > 0:
        raise ValueError(f"Time horizon must be positive, got {T}")
    x = np.asarray(x0, dtype=float).copy()
    v = np.asarray(v0, dtype=float).copy()
    if not np.any(v):
        raise ValueError("Initial velocity must be nonzero")
    metric_eval(M, x)

    h = T / n
    samples = [GeodesicSample(0.0, x.copy(), v.copy())]
    for step in range(1, n + 1):
        try:
            k1x, k1v = v, _acceleration(M, x, v)
            k2x = v + 0.5 * h * k1v
            k2v = _acceleration(M, x + 0.5 * h * k1x, k2x)
            k3x = v + 0.5 * h * k2v
            k3v = _acceleration(M, x + 0.5 * h * k2x, k3x)
            k4x = v + h * k3v
            k4v = _acceleration(M, x + h * k3x, k4x)
            x_next = x + h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x)
            v_next = v + h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)
            metric_eval(M, x_next)
        except OutOfDomainError as e:
            logger.debug("Geodesic left the %s domain after %d steps", M.name, step - 1)
            raise OutOfDomainError(
                f"Geodesic left the domain of the {M.name} metric at t={step * h:.6g}",
                point=e.point,
                partial_path=GeodesicPath(samples, h),
                details=e.details,
            )
        x, v = x_next, v_next
        samples.append(GeodesicSample(step * h, x.copy(), v.copy()))
    return GeodesicPath(samples, h)


def energy_drift(M: MetricField, path: GeodesicPath) -> float:
    """Largest relative change of g_x(v, v) along the path."""
    points = path.points
    velocities = path.velocities
    g = metric_eval(M, points)
    energies = np.einsum("ni,nij,nj->n", velocities, g, velocities)
    return float(np.max(np.abs(energies - energies[0])) / energies[0])
