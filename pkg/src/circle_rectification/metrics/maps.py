"""
Maps of space, metric pullbacks and gnomonic lifts.

The affine characteristic map x / (1 + s|x|^2) is the characteristic map of
the net {x, y, z, 1 + s|x|^2} read in the affine chart of the last
coordinate. It carries the circular metrics onto the Klein (s = +1) and
gnomonic (s = -1) metrics, whose geodesics are straight lines.
"""

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..geometry.spheres import Inversion, as_vector3, invert_point
from ..interfaces.space_map import SpaceMap
from ..nets.sphere_net import GeometryClass
from ..utils.exceptions import (
    CenterSingularityError,
    MapSingularError,
    OutOfDomainError,
    UnsupportedClassError,
)
from .fields import MetricField, MetricKind, metric_eval

SINGULAR_TOL = 1e-12


@dataclass(frozen=True)
class AffineChar(SpaceMap):
    """Phi(x) = x / (1 + sign |x|^2); sign -1 is undefined on the unit sphere."""
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"AffineChar sign must be +1 or -1, got {self.sign!r}")

    @property
    def name(self) -> str:
        return f"affine-char({self.sign:+d})"

    def _denominator(self, p: np.ndarray) -> float:
        w = 1.0 + self.sign * float(p @ p)
        if abs(w) < SINGULAR_TOL:
            raise MapSingularError(f"{self.name} is undefined at {tuple(p)}")
        return w

    def apply(self, x: Sequence[float]) -> np.ndarray:
        p = as_vector3(x)
        return p / self._denominator(p)

    def jacobian(self, x: Sequence[float]) -> np.ndarray:
        p = as_vector3(x)
        w = self._denominator(p)
        if abs(1.0 - self.sign * float(p @ p)) < SINGULAR_TOL:
            raise MapSingularError(f"{self.name} has a singular Jacobian at {tuple(p)}")
        return np.eye(3) / w - 2.0 * self.sign * np.outer(p, p) / (w * w)


@dataclass(frozen=True)
class InversionMap(SpaceMap):
    inversion: Inversion

    @property
    def name(self) -> str:
        return "inversion"

    def apply(self, x: Sequence[float]) -> np.ndarray:
        try:
            return invert_point(self.inversion, x)
        except CenterSingularityError as e:
            raise MapSingularError("Inversion is undefined at its center", details=str(e))

    def jacobian(self, x: Sequence[float]) -> np.ndarray:
        d = as_vector3(x) - np.asarray(self.inversion.center)
        d2 = float(d @ d)
        if d2 == 0.0:
            raise MapSingularError("Inversion is undefined at its center")
        return self.inversion.radius ** 2 / d2 * (np.eye(3) - 2.0 * np.outer(d, d) / d2)


@dataclass(frozen=True)
class Identity(SpaceMap):

    @property
    def name(self) -> str:
        return "identity"

    def apply(self, x: Sequence[float]) -> np.ndarray:
        return as_vector3(x).copy()

    def jacobian(self, x: Sequence[float]) -> np.ndarray:
        as_vector3(x)
        return np.eye(3)


def pullback_metric(M: MetricField, phi: SpaceMap, x: Sequence[float]) -> np.ndarray:
    """
    The pulled-back metric J(x)^T g(phi(x)) J(x).

    Raises:
        MapSingularError: If phi is undefined or singular at x
        OutOfDomainError: If phi(x) lies outside the domain of M
    """
    J = phi.jacobian(x)
    g = metric_eval(M, phi.apply(x))
    return J.T @ g @ J


def gnomonic_lift(y: Sequence[float], geometry: GeometryClass) -> np.ndarray:
    """
    Lift a chart point to the hyperboloid or the unit sphere of R^4.

    Hyperbolic: (y, 1) / sqrt(1 - |y|^2) on z1^2 + z2^2 + z3^2 - z4^2 = -1.
    Elliptic: (y, 1) / sqrt(1 + |y|^2) on the unit sphere S^3.

    Raises:
        OutOfDomainError: If |y| >= 1 for the hyperbolic lift
        UnsupportedClassError: For the Euclidean class
    """
    p = as_vector3(y)
    r2 = float(p @ p)
    geometry = GeometryClass(geometry)
    if geometry is GeometryClass.HYPERBOLIC:
        if r2 >= 1.0:
            raise OutOfDomainError("Hyperbolic lift needs a point of the open unit ball", point=p)
        scale = math.sqrt(1.0 - r2)
    elif geometry is GeometryClass.ELLIPTIC:
        scale = math.sqrt(1.0 + r2)
    else:
        raise UnsupportedClassError("The gnomonic lift is not defined for the Euclidean class")
    return np.append(p, 1.0) / scale


def lifted_plane_residual(points: Sequence[Sequence[float]], geometry: GeometryClass) -> float:
    """
    How far the lifted points are from a 2-plane through the origin of R^4.

    Straight chart lines lift into such planes, i.e. onto great circles or
    hyperbolic geodesics. Returns sigma3 of the lifted n x 4 matrix.
    """
    lifted = np.array([gnomonic_lift(p, geometry) for p in points])
    if len(lifted) < 3:
        raise ValueError("At least three points are needed for the plane test")
    singular = np.linalg.svd(lifted, compute_uv=False)
    return float(singular[2])


_GEOMETRY = {
    MetricKind.EUCLIDEAN: GeometryClass.EUCLIDEAN,
    MetricKind.KLEIN_HYPERBOLIC: GeometryClass.HYPERBOLIC,
    MetricKind.CIRCULAR_HYPERBOLIC: GeometryClass.HYPERBOLIC,
    MetricKind.GNOMONIC_ELLIPTIC: GeometryClass.ELLIPTIC,
    MetricKind.CIRCULAR_ELLIPTIC: GeometryClass.ELLIPTIC,
}


def geometry_of(M: MetricField) -> GeometryClass:
    return _GEOMETRY[M.kind]


def rectifying_map(M: MetricField) -> SpaceMap:
    """The map sending the geodesics of M to straight lines."""
    if M.kind is MetricKind.CIRCULAR_HYPERBOLIC:
        return AffineChar(1)
    if M.kind is MetricKind.CIRCULAR_ELLIPTIC:
        return AffineChar(-1)
    return Identity()
