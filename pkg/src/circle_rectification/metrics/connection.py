"""
Levi-Civita connection and sectional curvature by finite differences.

Christoffel symbols are built from central differences of the metric;
the curvature tensor from central differences of the Christoffel symbols.
Both operate on stacks of points so that every stencil is one call into
the metric evaluator.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..config.constants import CHRISTOFFEL_STEP, CURVATURE_BALL, CURVATURE_STEP
from ..utils.exceptions import DegeneratePlaneError, OutOfDomainError, SingularMetricError
from .fields import MetricField, check_domain, metric_eval

logger = logging.getLogger(__name__)

_OFFSETS = np.concatenate([np.eye(3), -np.eye(3)])


def _stencil(x: np.ndarray, h: float) -> np.ndarray:
    """Points x + h e_l (first three) and x - h e_l (last three), shape (..., 6, 3)."""
    return x[..., None, :] + h * _OFFSETS


def default_step(x: np.ndarray, base: float = CHRISTOFFEL_STEP) -> float:
    return base * (1.0 + float(np.max(np.linalg.norm(np.asarray(x).reshape(-1, 3), axis=1))))


def christoffel(M: MetricField, x: Sequence[float], h: Optional[float] = None) -> np.ndarray:
    """
    Christoffel symbols Gamma^i_jk of the Levi-Civita connection.

    Args:
        M: Metric
        x: Point of shape (3,) or stack of shape (..., 3)
        h: Difference step; defaults to 1e-5 * (1 + |x|)

    Returns:
        Array of shape (..., 3, 3, 3) indexed [i, j, k], symmetric in (j, k)

    Raises:
        OutOfDomainError: If the stencil leaves the domain
        SingularMetricError: If the metric cannot be inverted
    """
    p = np.asarray(x, dtype=float)
    if h is None:
        h = default_step(p)
    check_domain(M, p)
    radius = float(np.max(np.linalg.norm(p.reshape(-1, 3), axis=1)))
    if radius + 2.0 * h >= M.domain_radius:
        raise OutOfDomainError(
            f"Difference stencil leaves the domain of the {M.name} metric",
            point=p.reshape(-1, 3)[0],
            details=f"step {h:g}",
        )
    g_plus_minus = metric_eval(M, _stencil(p, h))
    # dg[..., l, j, k] = d_l g_jk
    dg = (g_plus_minus[..., :3, :, :] - g_plus_minus[..., 3:, :, :]) / (2.0 * h)
    g = metric_eval(M, p)
    try:
        g_inv = np.linalg.inv(g)
    except np.linalg.LinAlgError as e:
        raise SingularMetricError(f"Metric of {M.name} is singular", details=str(e))
    if not np.all(np.isfinite(g_inv)):
        raise SingularMetricError(f"Metric of {M.name} is singular")
    # term[l, j, k] = d_j g_lk + d_k g_jl - d_l g_jk
    term = (np.swapaxes(dg, -3, -2)
            + np.moveaxis(dg, -3, -1)
            - dg)
    return 0.5 * np.einsum("...il,...ljk->...ijk", g_inv, term)


def riemann_tensor(M: MetricField, x: Sequence[float], h: float = CURVATURE_STEP) -> np.ndarray:
    """
    Curvature tensor R^i_jkl at x, indexed [i, j, k, l].

    R^i_jkl = d_k Gamma^i_lj - d_l Gamma^i_kj
              + Gamma^i_kp Gamma^p_lj - Gamma^i_lp Gamma^p_kj
    """
    p = np.asarray(x, dtype=float)
    gammas = christoffel(M, _stencil(p, h))
    # dG[k, i, l, j] = d_k Gamma^i_lj
    dG = (gammas[:3] - gammas[3:]) / (2.0 * h)
    G = christoffel(M, p)
    derivative = np.einsum("kilj->ijkl", dG)
    quadratic = np.einsum("ikp,plj->ijkl", G, G)
    return derivative - np.swapaxes(derivative, 2, 3) + quadratic - np.swapaxes(quadratic, 2, 3)


def sectional_curvature(M: MetricField, x: Sequence[float], u: Sequence[float], v: Sequence[float],
                        h: float = CURVATURE_STEP) -> float:
    """
    Sectional curvature K = g(R(u,v)v, u) / (g(u,u) g(v,v) - g(u,v)^2).

    Raises:
        DegeneratePlaneError: If u and v do not span a 2-plane
    """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    g = metric_eval(M, x)
    area2 = float(u @ g @ u) * float(v @ g @ v) - float(u @ g @ v) ** 2
    if area2 <= 1e-12 * float(u @ g @ u) * float(v @ g @ v):
        raise DegeneratePlaneError("Tangent vectors do not span a 2-plane", details=f"u={tuple(u)}, v={tuple(v)}")
    R = riemann_tensor(M, x, h)
    Ruvv = np.einsum("ijkl,j,k,l->i", R, v, u, v)
    return float(Ruvv @ g @ u) / area2


@dataclass(frozen=True)
class CurvatureSurvey:
    """Sectional curvatures sampled at random points and planes."""
    metric: str
    samples: List[Tuple[Tuple[float, float, float], float]] = field(default_factory=list)

    @property
    def values(self) -> np.ndarray:
        return np.array([K for _, K in self.samples])

    @property
    def mean(self) -> float:
        return float(np.mean(self.values))

    @property
    def stddev(self) -> float:
        return float(np.std(self.values, ddof=1)) if len(self.samples) > 1 else 0.0


def random_ball_points(rng: np.random.Generator, count: int, radius: float) -> np.ndarray:
    """Uniform samples from the open ball of the given radius."""
    directions = rng.normal(size=(count, 3))
    directions /= np.linalg.norm(directions, axis=1)[:, None]
    radii = radius * rng.random(count) ** (1.0 / 3.0)
    return directions * radii[:, None]


def curvature_survey(M: MetricField, rng: np.random.Generator, n_points: int, n_planes: int = 3,
                     ball: float = CURVATURE_BALL) -> CurvatureSurvey:
    """
    Sectional curvature at ``n_points`` random points, ``n_planes`` random planes each.

    Samples are drawn in index order from ``rng``, so the result depends only
    on the generator state.
    """
    if n_points < 1 or n_planes < 1:
        raise ValueError("n_points and n_planes must be positive")
    points = random_ball_points(rng, n_points, min(ball, 0.99 * M.domain_radius))
    samples = []
    for x in points:
        for _ in range(n_planes):
            u, v = rng.normal(size=(2, 3))
            samples.append((tuple(float(c) for c in x), sectional_curvature(M, x, u, v)))
    survey = CurvatureSurvey(M.name, samples)
    logger.info("Curvature survey of %s: mean %.6f, stddev %.3e over %d samples",
                M.name, survey.mean, survey.stddev, len(samples))
    return survey
