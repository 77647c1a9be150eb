"""
Nets of spheres and their characteristic maps.

A net is a three-dimensional linear system of sphere equations, given by
four independent equations S1..S4. Its characteristic map sends a point x
to [S1(x) : S2(x) : S3(x) : S4(x)] in real projective 3-space and takes
every circle of the net's family to a projective line.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence, Tuple

import numpy as np
from scipy.linalg import null_space

from ..config.constants import BASE_POINT_TOL, CLASSIFICATION_TAU, DEGENERACY_FACTOR
from ..geometry.curves import CircleOrLine, canonical_sign, sample_curve
from ..geometry.spheres import MOBIUS_GRAM, SphereEq, as_vector3
from ..utils.exceptions import BasePointError, BasePointHitError, InvalidNetError

logger = logging.getLogger(__name__)


class GeometryClass(str, Enum):
    HYPERBOLIC = "hyperbolic"
    EUCLIDEAN = "euclidean"
    ELLIPTIC = "elliptic"


@dataclass(frozen=True)
class ProjPoint3:
    """Point of RP^3 stored by its canonical homogeneous coordinates."""
    coords: Tuple[float, float, float, float]

    @classmethod
    def canonical(cls, v: Sequence[float]) -> "ProjPoint3":
        """Unit norm, first non-negligible coordinate positive."""
        arr = np.asarray(v, dtype=float)
        norm = float(np.linalg.norm(arr))
        if arr.shape != (4,) or norm == 0.0:
            raise ValueError(f"Homogeneous coordinates must be a nonzero 4-vector, got {tuple(arr)}")
        arr = canonical_sign(arr / norm)
        return cls(tuple(float(c) for c in arr))

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.coords)


@dataclass(frozen=True)
class SphereNet:
    """Four independent sphere equations spanning a net."""
    basis: Tuple[SphereEq, SphereEq, SphereEq, SphereEq]

    def __post_init__(self):
        basis = tuple(self.basis)
        if len(basis) != 4:
            raise InvalidNetError("A net needs exactly four sphere equations", details=f"got {len(basis)}")
        object.__setattr__(self, "basis", basis)
        rank = np.linalg.matrix_rank(self.matrix)
        if rank != 4:
            raise InvalidNetError("Net basis spheres are linearly dependent", details=f"rank {rank}")

    @property
    def matrix(self) -> np.ndarray:
        """The 4x5 coefficient matrix, one (a, b1, b2, b3, c) row per sphere."""
        return np.array([S.vector for S in self.basis])


def _lifted(x: np.ndarray) -> np.ndarray:
    return np.array([x @ x, x[0], x[1], x[2], 1.0])


def char_map_values(net: SphereNet, x: Sequence[float]) -> np.ndarray:
    """The raw values (S1(x), ..., S4(x))."""
    return net.matrix @ _lifted(as_vector3(x))


def char_map_eval(net: SphereNet, x: Sequence[float]) -> ProjPoint3:
    """
    Image of x under the characteristic map.

    Raises:
        BasePointError: If all four spheres vanish at x
    """
    p = as_vector3(x)
    values = char_map_values(net, p)
    scale = float(np.max(np.linalg.norm(net.matrix, axis=1))) * (1.0 + float(p @ p))
    if float(np.max(np.abs(values))) <= BASE_POINT_TOL * scale:
        raise BasePointError(p)
    return ProjPoint3.canonical(values)


def char_determinant(net: SphereNet, x: Sequence[float]) -> float:
    """
    Determinant of the rows (dS_i/dx, dS_i/dy, dS_i/dz, S_i(x)).

    For {x, y, z, 1 + |x|^2}, {x, y, z, |x|^2} and {x, y, z, 1 - |x|^2} it
    equals 1 - |x|^2, -|x|^2 and 1 + |x|^2.
    """
    return float(np.linalg.det(_determinant_matrix(net, as_vector3(x))))


def _determinant_matrix(net: SphereNet, p: np.ndarray) -> np.ndarray:
    rows = []
    for S in net.basis:
        gradient = 2.0 * S.a * p + np.asarray(S.b)
        value = S.a * (p @ p) + np.asarray(S.b) @ p + S.c
        rows.append([gradient[0], gradient[1], gradient[2], value])
    return np.array(rows)


def degenerate_test(net: SphereNet, x: Sequence[float], factor: float = DEGENERACY_FACTOR) -> bool:
    """
    True iff the characteristic map has zero Jacobian at x.

    The determinant is compared against ``factor`` times the product of the
    row norms, which is homogeneous of the same degree in each sphere.
    """
    matrix = _determinant_matrix(net, as_vector3(x))
    scale = float(np.prod(np.linalg.norm(matrix, axis=1)))
    return bool(abs(np.linalg.det(matrix)) < factor * scale)


def orthogonal_complement(net: SphereNet) -> SphereEq:
    """
    The sphere S0 orthogonal to every sphere of the net.

    The Moebius form is nondegenerate, so the null space of the net matrix
    times the Gram matrix is one-dimensional.
    """
    kernel = null_space(net.matrix @ MOBIUS_GRAM)
    if kernel.shape[1] != 1:
        raise InvalidNetError("Net has no unique orthogonal sphere", details=f"kernel dimension {kernel.shape[1]}")
    return SphereEq.from_vector(canonical_sign(kernel[:, 0]))


def unit_disc(S: SphereEq) -> float:
    """|b|^2 - 4ac of the unit-norm representative of S."""
    v = S.vector
    return S.disc / float(v @ v)


def classify_net(net: SphereNet, tau: float = CLASSIFICATION_TAU) -> GeometryClass:
    """Geometry of the net from the sign of the disc of its orthogonal sphere."""
    disc = unit_disc(orthogonal_complement(net))
    if disc > tau:
        return GeometryClass.HYPERBOLIC
    if disc < -tau:
        return GeometryClass.ELLIPTIC
    return GeometryClass.EUCLIDEAN


_COORDINATE_PLANES = (
    SphereEq(0.0, (1.0, 0.0, 0.0), 0.0),
    SphereEq(0.0, (0.0, 1.0, 0.0), 0.0),
    SphereEq(0.0, (0.0, 0.0, 1.0), 0.0),
)

_FOURTH_SPHERE = {
    GeometryClass.HYPERBOLIC: SphereEq(1.0, (0.0, 0.0, 0.0), 1.0),
    GeometryClass.EUCLIDEAN: SphereEq(0.0, (0.0, 0.0, 0.0), 1.0),
    GeometryClass.ELLIPTIC: SphereEq(-1.0, (0.0, 0.0, 0.0), 1.0),
}


def canonical_net(geometry: GeometryClass) -> SphereNet:
    """{x, y, z, 1 + |x|^2}, {x, y, z, 1} or {x, y, z, 1 - |x|^2}."""
    return SphereNet(_COORDINATE_PLANES + (_FOURTH_SPHERE[GeometryClass(geometry)],))


def euclidean_origin_net() -> SphereNet:
    """The Euclidean net in its origin-pencil presentation {x, y, z, |x|^2}."""
    return SphereNet(_COORDINATE_PLANES + (SphereEq(1.0, (0.0, 0.0, 0.0), 0.0),))


def points_line_residual(net: SphereNet, points: Sequence[Sequence[float]]) -> float:
    """
    How far the images of ``points`` are from a projective line.

    Returns sigma3 + sigma4 of the matrix of unit homogeneous image vectors.

    Raises:
        BasePointHitError: If a point is a base point of the net
    """
    images = []
    for p in points:
        try:
            images.append(char_map_eval(net, p).vector)
        except BasePointError as e:
            raise BasePointHitError(e.point, details="sampled point is a base point of the net")
    if len(images) < 4:
        raise ValueError("At least four points are needed for the projective line test")
    singular = np.linalg.svd(np.array(images), compute_uv=False)
    return float(singular[2] + singular[3])


def image_line_residual(net: SphereNet, curve: CircleOrLine, n_samples: int) -> float:
    """Projective line residual of ``n_samples`` evenly spaced points of a curve."""
    if n_samples < 6:
        raise ValueError("n_samples must be at least 6")
    residual = points_line_residual(net, sample_curve(curve, n_samples))
    logger.debug("Image line residual of %s: %.3e", curve.kind, residual)
    return residual


def conjugate_net(net: SphereNet, transform: Callable[[SphereEq], SphereEq]) -> SphereNet:
    """Image of a net under a Moebius transformation acting on sphere equations."""
    return SphereNet(tuple(transform(S) for S in net.basis))
