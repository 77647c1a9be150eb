"""
The five metrics of constant curvature on regions of R^3.

Each metric is given in closed form. The circular metrics are the pullbacks
of the Klein and gnomonic metrics under the affine characteristic maps
x / (1 + |x|^2) and x / (1 - |x|^2); their geodesics are circles.

All evaluators accept a single point of shape (3,) or a stack of points of
shape (..., 3) and return matrices of shape (..., 3, 3).
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, Sequence

import numpy as np

from ..utils.exceptions import OutOfDomainError


class MetricKind(str, Enum):
    EUCLIDEAN = "euclidean"
    KLEIN_HYPERBOLIC = "klein-hyperbolic"
    GNOMONIC_ELLIPTIC = "gnomonic-elliptic"
    CIRCULAR_HYPERBOLIC = "circular-hyperbolic"
    CIRCULAR_ELLIPTIC = "circular-elliptic"


_DOMAIN_RADIUS = {
    MetricKind.EUCLIDEAN: math.inf,
    MetricKind.KLEIN_HYPERBOLIC: 1.0,
    MetricKind.GNOMONIC_ELLIPTIC: math.inf,
    MetricKind.CIRCULAR_HYPERBOLIC: 1.0,
    MetricKind.CIRCULAR_ELLIPTIC: 1.0,
}

_CURVATURE = {
    MetricKind.EUCLIDEAN: 0.0,
    MetricKind.KLEIN_HYPERBOLIC: -1.0,
    MetricKind.GNOMONIC_ELLIPTIC: 1.0,
    MetricKind.CIRCULAR_HYPERBOLIC: -1.0,
    MetricKind.CIRCULAR_ELLIPTIC: 1.0,
}


@dataclass(frozen=True)
class MetricField:
    """A metric of the toolkit, defined on the open ball of ``domain_radius``."""
    kind: MetricKind

    def __post_init__(self):
        object.__setattr__(self, "kind", MetricKind(self.kind))

    @classmethod
    def named(cls, name: str) -> "MetricField":
        """Look a metric up by its command-line name, e.g. 'circular-hyperbolic'."""
        try:
            return cls(MetricKind(name))
        except ValueError:
            known = ", ".join(kind.value for kind in MetricKind)
            raise ValueError(f"Unknown metric {name!r}; expected one of: {known}")

    @property
    def name(self) -> str:
        return self.kind.value

    @property
    def domain_radius(self) -> float:
        return _DOMAIN_RADIUS[self.kind]

    @property
    def expected_curvature(self) -> float:
        """The constant sectional curvature of the metric."""
        return _CURVATURE[self.kind]

    def contains(self, x: Sequence[float]) -> bool:
        p = np.asarray(x, dtype=float)
        return bool(np.all(np.isfinite(p)) and np.all(np.linalg.norm(p, axis=-1) < self.domain_radius))


def _outer(x: np.ndarray) -> np.ndarray:
    return x[..., :, None] * x[..., None, :]


def _euclidean(x: np.ndarray) -> np.ndarray:
    return np.broadcast_to(np.eye(3), x.shape[:-1] + (3, 3)).copy()


def _klein(y: np.ndarray) -> np.ndarray:
    w = 1.0 - np.sum(y * y, axis=-1)[..., None, None]
    return (w * np.eye(3) + _outer(y)) / (w * w)


def _gnomonic(y: np.ndarray) -> np.ndarray:
    w = 1.0 + np.sum(y * y, axis=-1)[..., None, None]
    return np.eye(3) / w - _outer(y) / (w * w)


def _circular_hyperbolic(x: np.ndarray) -> np.ndarray:
    r2 = np.sum(x * x, axis=-1)[..., None, None]
    D = 1.0 + r2 + r2 * r2
    return (np.eye(3) - 3.0 * _outer(x) / D) / D


def _circular_elliptic(x: np.ndarray) -> np.ndarray:
    r2 = np.sum(x * x, axis=-1)[..., None, None]
    D = 1.0 - r2 + r2 * r2
    return (np.eye(3) + 3.0 * _outer(x) / D) / D


_EVALUATORS: Dict[MetricKind, Callable[[np.ndarray], np.ndarray]] = {
    MetricKind.EUCLIDEAN: _euclidean,
    MetricKind.KLEIN_HYPERBOLIC: _klein,
    MetricKind.GNOMONIC_ELLIPTIC: _gnomonic,
    MetricKind.CIRCULAR_HYPERBOLIC: _circular_hyperbolic,
    MetricKind.CIRCULAR_ELLIPTIC: _circular_elliptic,
}


def check_domain(M: MetricField, x: np.ndarray) -> None:
    """
    Raises:
        OutOfDomainError: Naming the first point outside the metric's domain
    """
    points = np.asarray(x, dtype=float).reshape(-1, 3)
    radii = np.linalg.norm(points, axis=1)
    bad = ~np.isfinite(radii) | (radii >= M.domain_radius)
    if np.any(bad):
        point = points[int(np.argmax(bad))]
        raise OutOfDomainError(
            f"Point lies outside the domain of the {M.name} metric",
            point=point,
            details=f"|x|={float(np.linalg.norm(point)):.6g}, domain radius {M.domain_radius:g}",
        )


def metric_eval(M: MetricField, x: Sequence[float]) -> np.ndarray:
    """
    Metric matrix g(x).

    Args:
        M: Metric to evaluate
        x: Point of shape (3,) or stack of points of shape (..., 3)

    Returns:
        Symmetric positive-definite matrices of shape (..., 3, 3)

    Raises:
        OutOfDomainError: If a point lies outside the domain
    """
    p = np.asarray(x, dtype=float)
    if p.shape[-1:] != (3,):
        raise ValueError(f"Expected points of shape (..., 3), got {p.shape}")
    check_domain(M, p)
    return _EVALUATORS[M.kind](p)
