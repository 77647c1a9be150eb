"""
Circles and lines in space.

Circles and lines are separate alternatives of CircleOrLine rather than a
line being a circle of infinite radius; rectified images are lines and
are handled exactly. Both carry a canonical orientation so that equal
curves compare equal.
"""

import math
from dataclasses import dataclass
from typing import Sequence, Tuple, Union

import numpy as np

from ..config.constants import SPHERE_EQUALITY_RTOL, TANGENCY_FACTOR, UNIT_TOL
from ..utils.exceptions import (
    CoincidentPointsError,
    DisjointError,
    GeometryError,
    IdenticalError,
    TangentError,
)
from .spheres import (
    Imaginary,
    Plane,
    PointAtInfinity,
    PointSphere,
    RealSphere,
    SphereEq,
    Vector3,
    as_vector3,
    sphere_equal,
    sphere_eval,
    sphere_from_center_radius,
    sphere_geometry,
    to_tuple3,
)


def canonical_sign(v: Sequence[float]) -> np.ndarray:
    """Flip ``v`` so that its first non-negligible component is positive."""
    arr = np.asarray(v, dtype=float)
    scale = float(np.max(np.abs(arr))) if arr.size else 0.0
    for component in arr:
        if abs(component) > UNIT_TOL * scale:
            return arr if component > 0 else -arr
    return arr


def unit(v: Sequence[float]) -> np.ndarray:
    arr = np.asarray(v, dtype=float)
    norm = float(np.linalg.norm(arr))
    if norm == 0.0:
        raise GeometryError("Cannot normalize the zero vector")
    return arr / norm


def plane_basis(normal: Sequence[float]) -> Tuple[np.ndarray, np.ndarray]:
    """Orthonormal pair spanning the plane orthogonal to ``normal``."""
    n = unit(normal)
    helper = np.zeros(3)
    helper[int(np.argmin(np.abs(n)))] = 1.0
    e1 = unit(np.cross(n, helper))
    e2 = np.cross(n, e1)
    return e1, e2


@dataclass(frozen=True)
class Circle:
    """Circle with center, positive radius and canonical unit normal."""
    center: Vector3
    radius: float
    normal: Vector3

    def __post_init__(self):
        if not self.radius > 0.0:
            raise GeometryError(f"Circle radius must be positive, got {self.radius!r}")
        object.__setattr__(self, "center", to_tuple3(self.center))
        object.__setattr__(self, "radius", float(self.radius))
        object.__setattr__(self, "normal", to_tuple3(canonical_sign(unit(self.normal))))

    @property
    def kind(self) -> str:
        return "circle"


@dataclass(frozen=True)
class Line:
    """
    Line through ``point`` with canonical unit ``direction``.

    The stored point is the foot of the perpendicular from the origin.
    """
    point: Vector3
    direction: Vector3

    def __post_init__(self):
        u = canonical_sign(unit(self.direction))
        p = as_vector3(self.point)
        foot = p - (p @ u) * u
        object.__setattr__(self, "point", to_tuple3(foot))
        object.__setattr__(self, "direction", to_tuple3(u))

    @property
    def kind(self) -> str:
        return "line"


CircleOrLine = Union[Circle, Line]


def _plane_plane(p1: Plane, p2: Plane) -> Line:
    n1 = np.asarray(p1.normal)
    n2 = np.asarray(p2.normal)
    u = np.cross(n1, n2)
    uu = float(u @ u)
    if uu <= SPHERE_EQUALITY_RTOL ** 2:
        raise DisjointError("Parallel planes do not meet",
                            details=f"normals {p1.normal} and {p2.normal}")
    point = (p1.offset * np.cross(n2, u) + p2.offset * np.cross(u, n1)) / uu
    return Line(to_tuple3(point), to_tuple3(u))


def _sphere_plane(sphere: RealSphere, plane: Plane) -> Circle:
    q = np.asarray(sphere.center)
    n = np.asarray(plane.normal)
    offset = float(n @ q) - plane.offset
    rho2 = sphere.radius ** 2 - offset ** 2
    threshold = TANGENCY_FACTOR * sphere.radius ** 2
    if rho2 < -threshold:
        raise DisjointError("Plane misses the sphere",
                            details=f"distance {abs(offset)!r} > radius {sphere.radius!r}")
    if rho2 <= threshold:
        raise TangentError("Plane is tangent to the sphere",
                           details=f"distance {abs(offset)!r}, radius {sphere.radius!r}")
    return Circle(to_tuple3(q - offset * n), math.sqrt(rho2), to_tuple3(n))


def _radical_plane(S: SphereEq, S2: SphereEq) -> Plane:
    v = S.vector / S.a - S2.vector / S2.a
    b = v[1:4]
    nb = float(np.linalg.norm(b))
    if nb <= SPHERE_EQUALITY_RTOL * float(np.linalg.norm(v)):
        raise DisjointError("Distinct concentric spheres do not meet")
    return Plane(to_tuple3(b / nb), -float(v[4]) / nb)


def circle_from_sphere_pair(S: SphereEq, S2: SphereEq) -> CircleOrLine:
    """
    Intersect two surfaces given by sphere equations.

    Sphere-sphere intersections are reduced to sphere-plane through the
    radical plane; plane-plane intersections produce lines.

    Raises:
        IdenticalError: If the two equations agree up to scale
        DisjointError: If the surfaces do not meet
        TangentError: If the surfaces meet in a single point
    """
    if sphere_equal(S, S2):
        raise IdenticalError("Sphere equations describe the same surface",
                             details=f"{S!r} ~ {S2!r}")
    g1 = sphere_geometry(S)
    g2 = sphere_geometry(S2)
    for g, other in ((g1, S2), (g2, S)):
        if isinstance(g, (Imaginary, PointAtInfinity)):
            raise DisjointError("Surface has no real points", details=type(g).__name__)
        if isinstance(g, PointSphere):
            if abs(sphere_eval(other, g.center)) <= SPHERE_EQUALITY_RTOL * float(np.linalg.norm(other.vector)):
                raise TangentError("Point sphere lies on the other surface",
                                   details=f"point {g.center}")
            raise DisjointError("Point sphere misses the other surface",
                                details=f"point {g.center}")
    if isinstance(g1, Plane) and isinstance(g2, Plane):
        return _plane_plane(g1, g2)
    if isinstance(g1, Plane):
        return _sphere_plane(g2, g1)
    if isinstance(g2, Plane):
        return _sphere_plane(g1, g2)
    return _sphere_plane(g1, _radical_plane(S, S2))


def circle_through_points(p1: Sequence[float], p2: Sequence[float],
                          p3: Sequence[float]) -> CircleOrLine:
    """
    The unique circle through three points, or their line if collinear.

    Raises:
        CoincidentPointsError: If two of the points coincide
    """
    x1, x2, x3 = as_vector3(p1), as_vector3(p2), as_vector3(p3)
    scale = max(1.0, float(np.max(np.abs(np.stack([x1, x2, x3])))))
    for u, w in ((x1, x2), (x1, x3), (x2, x3)):
        if np.linalg.norm(u - w) <= 1e-14 * scale:
            raise CoincidentPointsError("Points must be pairwise distinct",
                                        details=f"{to_tuple3(u)} repeated")
    a = x1 - x3
    b = x2 - x3
    axb = np.cross(a, b)
    if np.linalg.norm(axb) <= UNIT_TOL * np.linalg.norm(a) * np.linalg.norm(b):
        far = x2 if np.linalg.norm(x2 - x1) > np.linalg.norm(x3 - x1) else x3
        return Line(to_tuple3(x1), to_tuple3(far - x1))
    axb2 = float(axb @ axb)
    offset = np.cross((a @ a) * b - (b @ b) * a, axb) / (2.0 * axb2)
    return Circle(to_tuple3(x3 + offset), float(np.linalg.norm(offset)), to_tuple3(axb))


def point_circle_distance(C: CircleOrLine, x: Sequence[float]) -> float:
    """Euclidean distance from ``x`` to the point set of ``C``."""
    p = as_vector3(x)
    if isinstance(C, Line):
        d = p - np.asarray(C.point)
        u = np.asarray(C.direction)
        return float(np.linalg.norm(d - (d @ u) * u))
    d = p - np.asarray(C.center)
    n = np.asarray(C.normal)
    h = float(d @ n)
    rho = float(np.linalg.norm(d - h * n))
    return math.hypot(rho - C.radius, h)


def circle_point(C: Circle, theta: float) -> np.ndarray:
    """Point of the circle at angle ``theta`` in its canonical in-plane frame."""
    e1, e2 = plane_basis(C.normal)
    return np.asarray(C.center) + C.radius * (math.cos(theta) * e1 + math.sin(theta) * e2)


def sample_curve(C: CircleOrLine, n: int, phase: float = 0.0, span: float = 1.0) -> np.ndarray:
    """
    Evenly spaced points on a curve, as an (n, 3) array.

    Circles are sampled over the full turn starting at ``phase``; lines over
    the segment of half-length ``span`` around the stored point.
    """
    if n < 1:
        raise ValueError("Sample count must be positive")
    if isinstance(C, Line):
        t = np.linspace(-span, span, n)
        return np.asarray(C.point) + t[:, None] * np.asarray(C.direction)
    e1, e2 = plane_basis(C.normal)
    angles = phase + 2.0 * np.pi * np.arange(n) / n
    return (np.asarray(C.center)
            + C.radius * (np.cos(angles)[:, None] * e1 + np.sin(angles)[:, None] * e2))


def tangent_at(C: CircleOrLine, x: Sequence[float]) -> np.ndarray:
    """Unit tangent of the curve at a point ``x`` lying on it."""
    if isinstance(C, Line):
        return np.asarray(C.direction)
    radial = as_vector3(x) - np.asarray(C.center)
    return unit(np.cross(np.asarray(C.normal), radial))


def curve_surfaces(C: CircleOrLine) -> Tuple[SphereEq, SphereEq]:
    """
    Two sphere equations cutting out the curve.

    A circle is its plane together with the sphere of the same center and
    radius; a line is cut out by two orthogonal planes through it.
    """
    if isinstance(C, Line):
        e1, e2 = plane_basis(C.direction)
        p = np.asarray(C.point)
        return (SphereEq(0.0, tuple(e1), -float(e1 @ p)),
                SphereEq(0.0, tuple(e2), -float(e2 @ p)))
    n = np.asarray(C.normal)
    plane = SphereEq(0.0, tuple(n), -float(n @ np.asarray(C.center)))
    return plane, sphere_from_center_radius(C.center, C.radius)


def fit_line(points: Sequence[Sequence[float]]) -> Tuple[Line, float]:
    """
    Total-least-squares line through a point cloud.

    The direction is the principal axis of the centered cloud; the
    returned residual is the RMS orthogonal distance to the line.

    Raises:
        CoincidentPointsError: If fewer than two distinct points are given
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[0] < 2:
        raise CoincidentPointsError("A line fit needs at least two points")
    centroid = pts.mean(axis=0)
    centered = pts - centroid
    _, s, vt = np.linalg.svd(centered, full_matrices=False)
    if s[0] <= SPHERE_EQUALITY_RTOL * max(1.0, float(np.max(np.abs(pts)))):
        raise CoincidentPointsError("All points coincide")
    direction = vt[0]
    along = centered @ direction
    orth = centered - along[:, None] * direction
    rms = float(np.sqrt(np.mean(np.sum(orth * orth, axis=1))))
    return Line(to_tuple3(centroid), to_tuple3(direction)), rms


def line_fit_residual(points: Sequence[Sequence[float]]) -> float:
    """RMS orthogonal distance of the points to their total-least-squares line."""
    return fit_line(points)[1]


def transform_curve(C: CircleOrLine, rotation: np.ndarray, translation: Sequence[float]) -> CircleOrLine:
    """Image of a curve under the rigid motion x -> R x + t."""
    R = np.asarray(rotation, dtype=float)
    t = as_vector3(translation)
    if isinstance(C, Line):
        return Line(to_tuple3(R @ np.asarray(C.point) + t), to_tuple3(R @ np.asarray(C.direction)))
    return Circle(to_tuple3(R @ np.asarray(C.center) + t), C.radius, to_tuple3(R @ np.asarray(C.normal)))
