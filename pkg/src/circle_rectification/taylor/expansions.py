"""
Taylor coefficients of bundle curves at the center.

A member of the bundle with tangent (1, k, m) at the origin is written as
the graph y = kx + phi2 x^2 + phi3 x^3 + phi4 x^4 + ...,
z = mx + psi2 x^2 + psi3 x^3 + psi4 x^4 + ...; phi_l is the coefficient of
x^l, so y''(0) = 2 phi2.

This module gives the closed forms of the six coefficients for the
bundle generated by A(k, m) and B(k, m), the exact identities they satisfy,
and a numeric extraction of the same coefficients from a concrete circle.
"""

import logging
import math
from dataclasses import dataclass, fields
from typing import Dict, FrozenSet, Generic, Tuple, TypeVar

import numpy as np

from ..config.constants import (
    NEWTON_MAX_ITER,
    NEWTON_TOL,
    STENCIL_FIT_DEGREE,
    STENCIL_NODES,
    STENCIL_STEP,
)
from ..geometry.curves import Circle, CircleOrLine, Line, point_circle_distance, tangent_at
from ..geometry.spheres import SphereEq
from ..utils.exceptions import (
    IllConditionedStencilError,
    NewtonDivergenceError,
    PolynomialError,
)
from .polynomials import BivarPoly, divides, fundamental_factor

logger = logging.getLogger(__name__)

T = TypeVar("T", BivarPoly, float)

K = BivarPoly.k()
M = BivarPoly.m()


@dataclass(frozen=True)
class TaylorSextet(Generic[T]):
    """
    The coefficients phi2, phi3, phi4, psi2, psi3, psi4.

    Exact mode holds BivarPoly values; numeric mode holds floats for one
    fixed tangent parameter.
    """
    phi2: T
    phi3: T
    phi4: T
    psi2: T
    psi3: T
    psi4: T

    def evaluate(self, k: float, m: float) -> "TaylorSextet[float]":
        """Numeric sextet of an exact one at (k, m)."""
        return TaylorSextet(*(float(p.evaluate(float(k), float(m))) for p in self.values()))

    def values(self) -> Tuple[T, ...]:
        return (self.phi2, self.phi3, self.phi4, self.psi2, self.psi3, self.psi4)

    def as_dict(self) -> Dict[str, T]:
        return {field.name: getattr(self, field.name) for field in fields(self)}


def closed_taylor(A: BivarPoly, B: BivarPoly) -> TaylorSextet[BivarPoly]:
    """
    Closed-form Taylor coefficients of the bundle generated by A and B.

    With f = 1 + k^2 + m^2 and g = kA + mB:
    phi2 = A f, phi3 = 2 A g f, phi4 = A (A^2 + B^2) f^2 + 4 A g^2 f,
    and the psi coefficients with B in place of the leading A.
    """
    f = fundamental_factor()
    g = K * A + M * B
    norm2 = A * A + B * B
    return TaylorSextet(
        phi2=A * f,
        phi3=2 * A * g * f,
        phi4=A * norm2 * f * f + 4 * A * g * g * f,
        psi2=B * f,
        psi3=2 * B * g * f,
        psi4=B * norm2 * f * f + 4 * B * g * g * f,
    )


def identity_check_third_order(A: BivarPoly, B: BivarPoly) -> Tuple[BivarPoly, BivarPoly]:
    """
    Residuals f phi3 - 2 phi2 (k phi2 + m psi2) and f psi3 - 2 psi2 (k phi2 + m psi2).

    Both are the zero polynomial for every A and B.
    """
    s = closed_taylor(A, B)
    f = fundamental_factor()
    g = K * s.phi2 + M * s.psi2
    return f * s.phi3 - 2 * s.phi2 * g, f * s.psi3 - 2 * s.psi2 * g


def identity_check_mixed(A: BivarPoly, B: BivarPoly) -> BivarPoly:
    """Residual of f (m phi3 + k psi3) = 2km (phi2^2 + psi2^2) + 2 (k^2 + m^2) phi2 psi2."""
    s = closed_taylor(A, B)
    f = fundamental_factor()
    lhs = f * (M * s.phi3 + K * s.psi3)
    rhs = 2 * K * M * (s.phi2 * s.phi2 + s.psi2 * s.psi2) + 2 * (K * K + M * M) * s.phi2 * s.psi2
    return lhs - rhs


def identity_check_fourth_order(A: BivarPoly, B: BivarPoly) -> Tuple[BivarPoly, BivarPoly]:
    """
    Residuals of the fourth-order identities.

    f^2 phi4 = f phi2 (phi2^2 + psi2^2) + 4 phi2 (k phi2 + m psi2)^2, and the
    same with psi4 and psi2 in the leading places.
    """
    s = closed_taylor(A, B)
    f = fundamental_factor()
    norm2 = s.phi2 * s.phi2 + s.psi2 * s.psi2
    g = K * s.phi2 + M * s.psi2
    phi = f * f * s.phi4 - (f * s.phi2 * norm2 + 4 * s.phi2 * g * g)
    psi = f * f * s.psi4 - (f * s.psi2 * norm2 + 4 * s.psi2 * g * g)
    return phi, psi


def divisibility_chain(phi2: BivarPoly, psi2: BivarPoly) -> Dict[str, bool]:
    """
    Exact divisibility by f of the second-order quantities.

    The chain phi2^2 + psi2^2, then phi2 psi2, then phi2 and psi2 is what
    forces A and B to be linear once phi2 and psi2 have degree at most 3.
    """
    f = fundamental_factor()
    return {
        "phi2": divides(f, phi2),
        "psi2": divides(f, psi2),
        "k*phi2 + m*psi2": divides(f, K * phi2 + M * psi2),
        "phi2^2 + psi2^2": divides(f, phi2 * phi2 + psi2 * psi2),
        "phi2*psi2": divides(f, phi2 * psi2),
    }


DEGREE_BOUNDS = {"phi2": 3, "psi2": 3, "phi3": 5, "psi3": 5, "phi4": 7, "psi4": 7}


@dataclass(frozen=True)
class DegreeReport:
    degrees: Dict[str, float]
    bounds: Dict[str, int]

    @property
    def within_bounds(self) -> bool:
        return all(self.degrees[name] <= bound for name, bound in self.bounds.items())

    @property
    def exceeded(self) -> FrozenSet[str]:
        return frozenset(name for name, bound in self.bounds.items() if self.degrees[name] > bound)


def degree_report(A: BivarPoly, B: BivarPoly) -> DegreeReport:
    """Degrees of the closed-form coefficients against the bounds 3, 5 and 7."""
    s = closed_taylor(A, B).as_dict()
    return DegreeReport({name: s[name].degree for name in DEGREE_BOUNDS}, dict(DEGREE_BOUNDS))


def symmetry_violations(a, b, d, e, tol: float = 0.0) -> FrozenSet[str]:
    """
    Violated constraints among b = 0, d = 0 and a = e.

    ``tol`` is absolute; zero means exact comparison.
    """
    violated = set()
    if abs(b) > tol:
        violated.add("b=0")
    if abs(d) > tol:
        violated.add("d=0")
    if abs(a - e) > tol:
        violated.add("a=e")
    return frozenset(violated)


def symmetry_check(A: BivarPoly, B: BivarPoly) -> FrozenSet[str]:
    """
    Check the symmetry constraints for A = a k + b m + c, B = d k + e m + g.

    Returns the set of violated constraints; it is empty exactly when
    A = alpha k + beta and B = alpha m + gamma.

    Raises:
        DegreeTooHighError: If A or B has degree above 1
    """
    a, b, _ = A.linear_coefficients()
    d, e, _ = B.linear_coefficients()
    return symmetry_violations(a, b, d, e)


# Numeric extraction

def _fold_distance(curve: Circle) -> float:
    """Distance in x from the origin to the nearest point where the curve turns back in x."""
    n = np.asarray(curve.normal)
    extent = curve.radius * math.sqrt(max(0.0, 1.0 - n[0] * n[0]))
    cx = curve.center[0]
    return min(extent + cx, extent - cx)


def _surface_values(S: SphereEq, x: float, y: float, z: float) -> Tuple[float, float, float]:
    """Value and (d/dy, d/dz) partials of the sphere equation."""
    value = S.a * (x * x + y * y + z * z) + S.b[0] * x + S.b[1] * y + S.b[2] * z + S.c
    return value, 2.0 * S.a * y + S.b[1], 2.0 * S.a * z + S.b[2]


def _newton_solve(surfaces: Tuple[SphereEq, SphereEq], x: float, y: float, z: float) -> Tuple[float, float]:
    """Solve both surface equations for (y, z) at fixed x."""
    S1, S2 = surfaces
    previous = math.inf
    for iteration in range(NEWTON_MAX_ITER):
        f1, a11, a12 = _surface_values(S1, x, y, z)
        f2, a21, a22 = _surface_values(S2, x, y, z)
        det = a11 * a22 - a12 * a21
        if det == 0.0 or not math.isfinite(det):
            raise IllConditionedStencilError("Singular Jacobian while solving for the curve",
                                             details=f"x={x!r}")
        dy = (a22 * f1 - a12 * f2) / det
        dz = (a11 * f2 - a21 * f1) / det
        y -= dy
        z -= dz
        step = math.hypot(dy, dz)
        scale = abs(x) + abs(y) + abs(z)
        if step <= NEWTON_TOL * scale:
            return y, z
        # Rounding floor: the step has stopped shrinking at a tiny size
        if iteration > 3 and step >= 0.5 * previous and step <= 1e-10 * scale:
            return y, z
        previous = step
    raise NewtonDivergenceError("Newton iteration did not converge",
                                details=f"x={x!r}, last step={previous!r}")


def numeric_taylor(curve: CircleOrLine, k: float, m: float,
                   step: float = STENCIL_STEP) -> TaylorSextet[float]:
    """
    Estimate phi2..phi4, psi2..psi4 of a curve through the origin with tangent (1, k, m).

    The plane and sphere of the circle are solved for y(x), z(x) by Newton
    iteration at x = j h for j in the stencil nodes; the exact linear part is
    removed and a polynomial in x/h is fitted by least squares. The step h is
    ``step`` times the distance from the origin to the nearest fold of the
    circle over the x-axis, which bounds the convergence radius of the
    expansion. Lines return all-zero coefficients.

    Raises:
        PolynomialError: If the curve does not pass through the origin with
            the given tangent
        NewtonDivergenceError: If a stencil point cannot be solved
        IllConditionedStencilError: If the stencil fit is rank deficient
    """
    origin = np.zeros(3)
    size = 1.0 if isinstance(curve, Line) else curve.radius
    if point_circle_distance(curve, origin) > 1e-9 * size:
        raise PolynomialError("Curve does not pass through the origin", details=repr(curve))
    expected = np.array([1.0, k, m]) / math.sqrt(1.0 + k * k + m * m)
    if np.linalg.norm(np.cross(tangent_at(curve, origin), expected)) > 1e-7:
        raise PolynomialError("Curve tangent at the origin is not (1, k, m)",
                              details=f"k={k!r}, m={m!r}")
    if isinstance(curve, Line):
        # A line through the origin is its own linear part
        return TaylorSextet(0.0, 0.0, 0.0, 0.0, 0.0, 0.0)

    scale = _fold_distance(curve)
    if not scale > 0.0:
        raise IllConditionedStencilError("Curve is not a graph over the x-axis near the origin",
                                         details=f"fold distance {scale!r}")
    h = step * scale
    # Both surfaces written with a zero constant term so the origin is exact
    normal = np.asarray(curve.normal)
    surfaces = (SphereEq(0.0, tuple(normal), 0.0),
                SphereEq(1.0, tuple(-2.0 * np.asarray(curve.center)), 0.0))
    nodes = np.asarray(STENCIL_NODES, dtype=float)
    ys = np.empty(len(nodes))
    zs = np.empty(len(nodes))
    for index, j in enumerate(nodes):
        x = j * h
        ys[index], zs[index] = _newton_solve(surfaces, x, k * x, m * x)

    powers = np.arange(2, STENCIL_FIT_DEGREE + 1)
    vandermonde = nodes[:, None] ** powers[None, :]
    rhs = np.column_stack([ys - k * nodes * h, zs - m * nodes * h])
    solution, _, rank, singular = np.linalg.lstsq(vandermonde, rhs, rcond=None)
    if rank < len(powers):
        raise IllConditionedStencilError("Stencil fit is rank deficient",
                                         details=f"rank {rank} < {len(powers)}")
    coefficients = solution / (h ** powers)[:, None]
    logger.debug("Stencil h=%g, condition %g", h, singular[0] / singular[-1])
    return TaylorSextet(
        phi2=float(coefficients[0, 0]),
        phi3=float(coefficients[1, 0]),
        phi4=float(coefficients[2, 0]),
        psi2=float(coefficients[0, 1]),
        psi3=float(coefficients[1, 1]),
        psi4=float(coefficients[2, 1]),
    )


def closed_taylor_values(a_value: float, b_value: float, k: float, m: float) -> TaylorSextet[float]:
    """Closed-form coefficients from the values A(k, m), B(k, m) at one direction."""
    f = 1.0 + k * k + m * m
    g = k * a_value + m * b_value
    norm2 = a_value * a_value + b_value * b_value
    return TaylorSextet(
        phi2=a_value * f,
        phi3=2.0 * a_value * g * f,
        phi4=a_value * norm2 * f * f + 4.0 * a_value * g * g * f,
        psi2=b_value * f,
        psi3=2.0 * b_value * g * f,
        psi4=b_value * norm2 * f * f + 4.0 * b_value * g * g * f,
    )

