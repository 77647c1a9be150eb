"""
Circle bundles through a common center.

A bundle is generated from two functions A(k, m), B(k, m): the member with
tangent (1, k, m) at the origin is the intersection of the surfaces

    y = kx + A(k, m) |x|^2,    z = mx + B(k, m) |x|^2,

i.e. of the sphere equations (A, (k, -1, 0), 0) and (B, (m, 0, -1), 0).
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Iterable, List, NamedTuple, Sequence, Tuple

import numpy as np
from scipy.spatial.distance import pdist

from ..config.constants import CHART_LIMIT, DIRECTION_SEPARATION
from ..geometry.curves import (
    Circle,
    CircleOrLine,
    Line,
    circle_from_sphere_pair,
    point_circle_distance,
    tangent_at,
    transform_curve,
)
from ..geometry.spheres import SphereEq, Vector3, to_tuple3
from ..taylor.polynomials import BivarPoly
from ..utils.exceptions import BundleMemberError, ChartError, GeometryError

logger = logging.getLogger(__name__)


class TangentParam(NamedTuple):
    """Slopes (k, m) of the tangent direction (1, k, m) at the bundle center."""
    k: float
    m: float

    @property
    def direction(self) -> np.ndarray:
        return np.array([1.0, self.k, self.m])


def tangent_param(k: float, m: float) -> TangentParam:
    """
    Validated tangent parameter.

    Raises:
        ChartError: If k or m is not finite or exceeds the chart limit
    """
    k, m = float(k), float(m)
    if not (math.isfinite(k) and math.isfinite(m)) or abs(k) > CHART_LIMIT or abs(m) > CHART_LIMIT:
        raise ChartError(k, m, details=f"chart limit {CHART_LIMIT:g}")
    return TangentParam(k, m)


def tangent_params(dirs: Iterable[Sequence[float]]) -> List[TangentParam]:
    return [tangent_param(k, m) for k, m in dirs]


def directions_from_vectors(vectors: Iterable[Sequence[float]]) -> List[TangentParam]:
    """Tangent parameters of direction vectors (x, y, z), read in the chart x = 1."""
    params = []
    for v in vectors:
        x, y, z = (float(c) for c in v)
        if x == 0.0:
            raise ChartError(math.inf, math.inf, details=f"direction {tuple(v)} is orthogonal to the x-axis")
        params.append(tangent_param(y / x, z / x))
    return params


@dataclass(frozen=True)
class BundleMember:
    tangent: TangentParam
    curve: CircleOrLine


@dataclass(frozen=True)
class CircleBundle:
    """Curves through ``center``, each tagged with its tangent parameter."""
    center: Vector3
    members: Tuple[BundleMember, ...]

    def __post_init__(self):
        object.__setattr__(self, "center", to_tuple3(self.center))
        object.__setattr__(self, "members", tuple(self.members))

    @property
    def tangents(self) -> List[TangentParam]:
        return [member.tangent for member in self.members]

    @property
    def curves(self) -> List[CircleOrLine]:
        return [member.curve for member in self.members]

    @property
    def circles(self) -> List[Circle]:
        return [member.curve for member in self.members if isinstance(member.curve, Circle)]

    def __len__(self):
        return len(self.members)


def eq3_spheres(a_value: float, b_value: float, k: float, m: float) -> Tuple[SphereEq, SphereEq]:
    """The two sphere equations of the member with tangent (1, k, m)."""
    return SphereEq(a_value, (k, -1.0, 0.0), 0.0), SphereEq(b_value, (m, 0.0, -1.0), 0.0)


def member_from_values(a_value: float, b_value: float, tangent: TangentParam) -> CircleOrLine:
    """
    The member curve for given values A(k, m), B(k, m).

    Raises:
        BundleMemberError: If the two surfaces do not cut out a curve
    """
    k, m = tangent
    if a_value == 0.0 and b_value == 0.0:
        return Line((0.0, 0.0, 0.0), (1.0, k, m))
    try:
        return circle_from_sphere_pair(*eq3_spheres(a_value, b_value, k, m))
    except GeometryError as e:
        raise BundleMemberError("Bundle member is degenerate", k, m, details=str(e))


def bundle_from_values(A: Callable[[float, float], float], B: Callable[[float, float], float],
                       dirs: Sequence[Sequence[float]]) -> CircleBundle:
    """Bundle centered at the origin from real-valued A and B."""
    if not dirs:
        raise ValueError("At least one direction is required")
    members = []
    for tangent in tangent_params(dirs):
        a_value = float(A(tangent.k, tangent.m))
        b_value = float(B(tangent.k, tangent.m))
        members.append(BundleMember(tangent, member_from_values(a_value, b_value, tangent)))
    logger.debug("Generated bundle with %d members", len(members))
    return CircleBundle((0.0, 0.0, 0.0), tuple(members))


def bundle_from_AB(A: BivarPoly, B: BivarPoly, dirs: Sequence[Sequence[float]]) -> CircleBundle:
    """
    Generate the bundle of A(k, m) and B(k, m) for the given tangent parameters.

    Args:
        A: Polynomial multiplying |x|^2 in the y-surface
        B: Polynomial multiplying |x|^2 in the z-surface
        dirs: Nonempty sequence of (k, m) pairs

    Returns:
        CircleBundle: Bundle centered at the origin

    Raises:
        ChartError: If a direction lies outside the (1, k, m) chart
        BundleMemberError: If a member is degenerate
    """
    return bundle_from_values(A.evaluate, B.evaluate, dirs)


class PencilSpheres(NamedTuple):
    """
    Spheres through the origin spanning a rectifiable bundle.

    The member for (k, m) is cut out by base_y + k * shared and
    base_z + m * shared.
    """
    base_y: SphereEq
    base_z: SphereEq
    shared: SphereEq


def pencil_spheres(alpha: float, beta: float, gamma: float) -> PencilSpheres:
    """Pencil spheres of A = alpha k + beta, B = alpha m + gamma."""
    return PencilSpheres(
        base_y=SphereEq(beta, (0.0, -1.0, 0.0), 0.0),
        base_z=SphereEq(gamma, (0.0, 0.0, -1.0), 0.0),
        shared=SphereEq(alpha, (1.0, 0.0, 0.0), 0.0),
    )


def bundle_from_spheres(base_y: SphereEq, base_z: SphereEq, shared: SphereEq,
                        dirs: Sequence[Sequence[float]]) -> CircleBundle:
    """
    Bundle cut out by the pencils base_y + k shared and base_z + m shared.

    All three spheres must pass through the origin (zero constant term).
    """
    for sphere in (base_y, base_z, shared):
        if sphere.c != 0.0:
            raise GeometryError("Pencil spheres must pass through the origin", details=repr(sphere))
    members = []
    for tangent in tangent_params(dirs):
        k, m = tangent
        first = SphereEq.from_vector(base_y.vector + k * shared.vector)
        second = SphereEq.from_vector(base_z.vector + m * shared.vector)
        if first.a == 0.0 and second.a == 0.0:
            curve = Line((0.0, 0.0, 0.0), tuple(np.cross(first.b, second.b)))
        else:
            try:
                curve = circle_from_sphere_pair(first, second)
            except GeometryError as e:
                raise BundleMemberError("Bundle member is degenerate", k, m, details=str(e))
        members.append(BundleMember(tangent, curve))
    return CircleBundle((0.0, 0.0, 0.0), tuple(members))


def closed_form_second_point(alpha: float, beta: float, gamma: float) -> np.ndarray:
    """The second common point (-alpha, beta, gamma) / (alpha^2 + beta^2 + gamma^2)."""
    v = np.array([-alpha, beta, gamma], dtype=float)
    norm2 = float(v @ v)
    if norm2 == 0.0:
        raise ValueError("Linear coefficients must not all vanish")
    return v / norm2


def is_simple(bundle: CircleBundle, separation: float = DIRECTION_SEPARATION) -> bool:
    """True iff the tangent parameters are pairwise farther apart than ``separation``."""
    if len(bundle.members) < 2:
        return True
    params = np.array([[t.k, t.m] for t in bundle.tangents])
    return bool(pdist(params).min() > separation)


def bundle_defects(bundle: CircleBundle) -> Tuple[float, float]:
    """
    Largest deviations from the bundle invariants.

    Returns:
        Tuple of the largest member distance from the center and the largest
        sine between a member's tangent at the center and its (1, k, m).
    """
    center = np.asarray(bundle.center)
    worst_distance = 0.0
    worst_angle = 0.0
    for member in bundle.members:
        worst_distance = max(worst_distance, point_circle_distance(member.curve, center))
        expected = member.tangent.direction / np.linalg.norm(member.tangent.direction)
        tangent = tangent_at(member.curve, center)
        worst_angle = max(worst_angle, float(np.linalg.norm(np.cross(tangent, expected))))
    return worst_distance, worst_angle


def transform_bundle(bundle: CircleBundle, rotation: np.ndarray, translation: Sequence[float]) -> CircleBundle:
    """Image of a bundle under the rigid motion x -> R x + t; tangent tags are kept."""
    R = np.asarray(rotation, dtype=float)
    center = R @ np.asarray(bundle.center) + np.asarray(translation, dtype=float)
    members = tuple(BundleMember(member.tangent, transform_curve(member.curve, R, translation))
                    for member in bundle.members)
    return CircleBundle(to_tuple3(center), members)
