"""
Sphere equations, their geometry, and inversions.

A sphere equation is the projective 5-vector (a, b, c) of the surface
a|x|^2 + <b, x> + c = 0. Planes are the equations with a = 0. The space of
equations carries the Moebius inner product <S, S'> = b.b' - 2(ac' + a'c),
which vanishes exactly for orthogonal surfaces.
"""

import math
from dataclasses import dataclass
from typing import Sequence, Tuple, Union

import numpy as np

from ..config.constants import SPHERE_EQUALITY_RTOL
from ..utils.exceptions import (
    CenterSingularityError,
    GeometryError,
    NonPositiveRadiusError,
    NotARealSphereError,
)

Vector3 = Tuple[float, float, float]

# Gram matrix of the Moebius form in the (a, b1, b2, b3, c) ordering
MOBIUS_GRAM = np.array([
    [0.0, 0.0, 0.0, 0.0, -2.0],
    [0.0, 1.0, 0.0, 0.0, 0.0],
    [0.0, 0.0, 1.0, 0.0, 0.0],
    [0.0, 0.0, 0.0, 1.0, 0.0],
    [-2.0, 0.0, 0.0, 0.0, 0.0],
])


def as_vector3(x: Sequence[float]) -> np.ndarray:
    """Return ``x`` as a float array of shape (3,)."""
    arr = np.asarray(x, dtype=float)
    if arr.shape != (3,):
        raise ValueError(f"Expected a 3-vector, got shape {arr.shape}")
    return arr


def to_tuple3(x: Sequence[float]) -> Vector3:
    return (float(x[0]), float(x[1]), float(x[2]))


@dataclass(frozen=True)
class SphereEq:
    """
    Projective sphere equation a|x|^2 + <b, x> + c = 0.

    (s*a, s*b, s*c) denotes the same surface for every nonzero s; use
    sphere_equal for up-to-scale comparison.
    """
    a: float
    b: Vector3
    c: float

    def __post_init__(self):
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", to_tuple3(self.b))
        object.__setattr__(self, "c", float(self.c))
        if self.a == 0.0 and self.c == 0.0 and not any(self.b):
            raise GeometryError("Sphere equation coefficients must not all be zero")

    @property
    def vector(self) -> np.ndarray:
        """The 5-vector (a, b1, b2, b3, c)."""
        return np.array([self.a, self.b[0], self.b[1], self.b[2], self.c])

    @classmethod
    def from_vector(cls, v: Sequence[float]) -> "SphereEq":
        return cls(v[0], (v[1], v[2], v[3]), v[4])

    @property
    def disc(self) -> float:
        """|b|^2 - 4ac; equals mobius_inner(S, S)."""
        b = np.asarray(self.b)
        return float(b @ b - 4.0 * self.a * self.c)

    def scaled(self, s: float) -> "SphereEq":
        return SphereEq.from_vector(s * self.vector)


# Geometric realizations of a sphere equation

@dataclass(frozen=True)
class Plane:
    """Plane <normal, x> = offset with unit normal."""
    normal: Vector3
    offset: float


@dataclass(frozen=True)
class RealSphere:
    center: Vector3
    radius: float


@dataclass(frozen=True)
class PointSphere:
    """Sphere of radius zero."""
    center: Vector3


@dataclass(frozen=True)
class Imaginary:
    """Sphere of imaginary radius: no real points."""
    pass


@dataclass(frozen=True)
class PointAtInfinity:
    """The equation (0, 0, c): the radius-zero class centered at infinity."""
    pass


SphereGeometry = Union[Plane, RealSphere, PointSphere, Imaginary, PointAtInfinity]


@dataclass(frozen=True)
class Inversion:
    """Inversion x -> q + r^2 (x - q)/|x - q|^2 in the sphere of center q and radius r."""
    center: Vector3
    radius: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "center", to_tuple3(self.center))
        object.__setattr__(self, "radius", float(self.radius))
        if not self.radius > 0.0:
            raise NonPositiveRadiusError(self.radius)


UNIT_INVERSION = Inversion((0.0, 0.0, 0.0), 1.0)


def sphere_normalized(S: SphereEq) -> np.ndarray:
    """Unit-norm representative of S as a 5-vector."""
    v = S.vector
    return v / np.linalg.norm(v)


def sphere_equal(S: SphereEq, S2: SphereEq, rtol: float = SPHERE_EQUALITY_RTOL) -> bool:
    """Projective equality: the unit representatives agree up to sign."""
    u = sphere_normalized(S)
    w = sphere_normalized(S2)
    return bool(min(np.linalg.norm(u - w), np.linalg.norm(u + w)) <= rtol)


def sphere_eval(S: SphereEq, x: Sequence[float]) -> float:
    """Value of a|x|^2 + <b, x> + c at x."""
    p = as_vector3(x)
    return float(S.a * (p @ p) + np.asarray(S.b) @ p + S.c)


def sphere_from_center_radius(q: Sequence[float], r: float) -> SphereEq:
    """Equation (1, -2q, |q|^2 - r^2) of the sphere |x - q| = r."""
    if not r > 0.0:
        raise NonPositiveRadiusError(r)
    center = as_vector3(q)
    return SphereEq(1.0, tuple(-2.0 * center), float(center @ center - r * r))


def sphere_geometry(S: SphereEq) -> SphereGeometry:
    """
    Classify a sphere equation by a and disc = |b|^2 - 4ac.

    Zero tests are relative to the squared norm of the 5-vector so that
    the classification does not depend on the representative.
    """
    scale = float(S.vector @ S.vector)
    b = np.asarray(S.b)
    if abs(S.a) <= SPHERE_EQUALITY_RTOL * math.sqrt(scale):
        nb = float(np.linalg.norm(b))
        if nb <= SPHERE_EQUALITY_RTOL * math.sqrt(scale):
            return PointAtInfinity()
        return Plane(to_tuple3(b / nb), -S.c / nb)
    disc = S.disc
    center = to_tuple3(-b / (2.0 * S.a))
    if abs(disc) <= SPHERE_EQUALITY_RTOL * scale:
        return PointSphere(center)
    if disc < 0.0:
        return Imaginary()
    return RealSphere(center, math.sqrt(disc) / (2.0 * abs(S.a)))


def mobius_inner(S: SphereEq, S2: SphereEq) -> float:
    """The signature-(4,1) form b.b' - 2(ac' + a'c)."""
    return float(np.asarray(S.b) @ np.asarray(S2.b) - 2.0 * (S.a * S2.c + S2.a * S.c))


def power_of_point(S: SphereEq, x: Sequence[float]) -> float:
    """|x - q|^2 - r^2 for a real sphere S of center q and radius r."""
    if not isinstance(sphere_geometry(S), RealSphere):
        raise NotARealSphereError("Power of a point needs a real sphere", details=repr(S))
    return sphere_eval(S, x) / S.a


def orthogonal_sphere_at(S: SphereEq, o: Sequence[float]) -> SphereEq:
    """
    The sphere centered at o orthogonal to the real sphere S.

    Its squared radius is the power of o with respect to S, so o must lie
    outside S.
    """
    power = power_of_point(S, o)
    if power <= 0.0:
        raise GeometryError(
            "No real orthogonal sphere centered at a point on or inside the sphere",
            details=f"power={power!r}",
        )
    return sphere_from_center_radius(o, math.sqrt(power))


def invert_point(inv: Inversion, x: Sequence[float]) -> np.ndarray:
    """Image of x under the inversion; the inversion sphere is fixed pointwise."""
    q = np.asarray(inv.center)
    d = as_vector3(x) - q
    d2 = float(d @ d)
    if d2 == 0.0:
        raise CenterSingularityError("Cannot invert the center of the inversion",
                                     details=f"center={inv.center}")
    return q + (inv.radius ** 2) * d / d2


def translate_sphere(S: SphereEq, t: Sequence[float]) -> SphereEq:
    """Equation of the image of S under x -> x + t."""
    shift = as_vector3(t)
    b = np.asarray(S.b)
    return SphereEq(
        S.a,
        tuple(b - 2.0 * S.a * shift),
        float(S.a * (shift @ shift) - b @ shift + S.c),
    )


def scale_sphere(S: SphereEq, s: float) -> SphereEq:
    """Equation of the image of S under x -> s x (s != 0)."""
    if s == 0.0:
        raise GeometryError("Scale factor must be nonzero")
    return SphereEq(S.a, tuple(s * np.asarray(S.b)), s * s * S.c)


def unit_invert_sphere(S: SphereEq) -> SphereEq:
    """Image of S under the unit inversion at the origin: (a, b, c) -> (c, b, a)."""
    return SphereEq(S.c, S.b, S.a)


def invert_sphere(inv: Inversion, S: SphereEq) -> SphereEq:
    """
    Equation of the image of S under an inversion.

    Conjugates the unit inversion by translation and scaling, each of
    which acts linearly on (a, b, c).
    """
    q = np.asarray(inv.center)
    moved = scale_sphere(translate_sphere(S, -q), 1.0 / inv.radius)
    inverted = unit_invert_sphere(moved)
    return translate_sphere(scale_sphere(inverted, inv.radius), q)
