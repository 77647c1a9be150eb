"""
Rectifiability diagnostic on a grid of tangent directions.

The second-order coefficients phi2 = A f and psi2 = B f of a rectifiable
bundle are polynomials of degree at most 3 divisible by f, with quotients
A = alpha k + beta and B = alpha m + gamma. The diagnostic fits bivariate
polynomials to coefficient values sampled on a grid and checks each of
these facts numerically.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from ..bundles.genericity import is_generic_54
from ..config.constants import DIAGNOSTIC_MIN_POINTS, FIT_RESIDUAL_RTOL, REMAINDER_RTOL
from ..utils.exceptions import DegenerateGridError
from .expansions import (
    DEGREE_BOUNDS,
    TaylorSextet,
    closed_taylor_values,
    divisibility_chain,
    numeric_taylor,
    symmetry_violations,
)
from .polynomials import BivarPoly, fundamental_factor, monomials_up_to, poly_divrem

logger = logging.getLogger(__name__)

SNAP_DENOMINATOR = 10 ** 6
SNAP_RTOL = 1e-9


class Verdict(str, Enum):
    RECTIFIABLE = "Rectifiable"
    NOT_RECTIFIABLE = "NotRectifiable"


@dataclass(frozen=True)
class DiagnosticReport:
    """
    Outcome of the rectifiability diagnostic.

    ``fit_residuals`` are relative least-squares residuals of the degree
    3/5/7 fits; ``remainders`` are the remainders of the fitted phi2, psi2
    modulo f relative to their largest coefficient.
    """
    source: str
    grid_size: int
    fit_residuals: Dict[str, float]
    remainders: Dict[str, float]
    linear_coefficients: Dict[str, float]
    recovered: Optional[Tuple[float, float, float]]
    violations: FrozenSet[str]
    divisibility: Dict[str, bool] = field(default_factory=dict)
    verdict: Verdict = Verdict.NOT_RECTIFIABLE

    @property
    def rectifiable(self) -> bool:
        return self.verdict is Verdict.RECTIFIABLE


def fit_bivariate(ks: np.ndarray, ms: np.ndarray, values: np.ndarray,
                  degree: int) -> Tuple[Dict[Tuple[int, int], float], float]:
    """
    Least-squares fit of a polynomial of total degree ``degree``.

    Returns:
        Tuple of the fitted coefficients keyed by (i, j) and the relative
        residual norm (0 for identically zero data)
    """
    monomials = list(monomials_up_to(degree))
    design = np.column_stack([ks ** i * ms ** j for i, j in monomials])
    coefficients, *_ = np.linalg.lstsq(design, values, rcond=None)
    scale = float(np.linalg.norm(values))
    if scale == 0.0:
        return {mono: 0.0 for mono in monomials}, 0.0
    residual = float(np.linalg.norm(design @ coefficients - values)) / scale
    return dict(zip(monomials, (float(c) for c in coefficients))), residual


def _snap(value: float) -> Fraction:
    """Nearest small-denominator rational if it is within rounding of ``value``."""
    exact = Fraction(value)
    snapped = exact.limit_denominator(SNAP_DENOMINATOR)
    if abs(float(snapped) - value) <= SNAP_RTOL * max(1.0, abs(value)):
        return snapped
    return exact


def _relative_remainder(fit: BivarPoly) -> Tuple[float, BivarPoly]:
    quotient, remainder = poly_divrem(fit, fundamental_factor())
    largest = fit.max_abs_coefficient()
    if largest == 0:
        return 0.0, quotient
    return float(remainder.max_abs_coefficient() / largest), quotient


def _sextets(A_eval: Callable[[float, float], float], B_eval: Callable[[float, float], float],
             grid: Sequence[Tuple[float, float]], source: str) -> List[TaylorSextet]:
    if source == "closed":
        return [closed_taylor_values(float(A_eval(k, m)), float(B_eval(k, m)), k, m) for k, m in grid]
    if source == "numeric":
        from ..bundles.bundle import member_from_values, tangent_param

        sextets = []
        for k, m in grid:
            curve = member_from_values(float(A_eval(k, m)), float(B_eval(k, m)), tangent_param(k, m))
            sextets.append(numeric_taylor(curve, k, m))
        return sextets
    raise ValueError(f"Unknown coefficient source {source!r}; expected 'closed' or 'numeric'")


def rectifiability_diagnostic(A_eval: Callable[[float, float], float],
                              B_eval: Callable[[float, float], float],
                              grid: Sequence[Sequence[float]],
                              source: str = "closed",
                              fit_rtol: float = FIT_RESIDUAL_RTOL,
                              remainder_rtol: float = REMAINDER_RTOL) -> DiagnosticReport:
    """
    Decide numerically whether A and B generate a rectifiable bundle.

    Args:
        A_eval: Real function (k, m) -> A(k, m)
        B_eval: Real function (k, m) -> B(k, m)
        grid: At least 54 tangent parameters, the first 54 in general position
        source: "closed" evaluates the closed-form coefficients; "numeric"
            builds each member circle and extracts them by numeric_taylor
        fit_rtol: Largest relative fit residual accepted for phi2, psi2
        remainder_rtol: Largest relative remainder modulo f accepted

    Returns:
        DiagnosticReport: Residuals, remainders, recovered coefficients and verdict

    Raises:
        DegenerateGridError: If the grid is too small or not generic
    """
    points = [(float(k), float(m)) for k, m in grid]
    if len(points) < DIAGNOSTIC_MIN_POINTS:
        raise DegenerateGridError(
            f"Diagnostic grid needs at least {DIAGNOSTIC_MIN_POINTS} points",
            details=f"got {len(points)}",
        )
    if not is_generic_54(points[:DIAGNOSTIC_MIN_POINTS]):
        raise DegenerateGridError("The first 54 grid directions are not in general position")

    ks = np.array([k for k, _ in points])
    ms = np.array([m for _, m in points])
    sextets = _sextets(A_eval, B_eval, points, source)

    fit_residuals: Dict[str, float] = {}
    fits: Dict[str, Dict[Tuple[int, int], float]] = {}
    for name, degree in DEGREE_BOUNDS.items():
        values = np.array([getattr(s, name) for s in sextets])
        fits[name], fit_residuals[name] = fit_bivariate(ks, ms, values, degree)

    phi2_fit = BivarPoly.from_floats(fits["phi2"])
    psi2_fit = BivarPoly.from_floats(fits["psi2"])
    phi2_remainder, A_fit = _relative_remainder(phi2_fit)
    psi2_remainder, B_fit = _relative_remainder(psi2_fit)
    remainders = {"phi2": phi2_remainder, "psi2": psi2_remainder}

    a, b, c = (float(v) for v in (A_fit.coefficient(1, 0), A_fit.coefficient(0, 1), A_fit.coefficient(0, 0)))
    d, e, g = (float(v) for v in (B_fit.coefficient(1, 0), B_fit.coefficient(0, 1), B_fit.coefficient(0, 0)))
    linear = {"a": a, "b": b, "c": c, "d": d, "e": e, "g": g}
    scale = max(1.0, *(abs(v) for v in linear.values()))
    violations = symmetry_violations(a, b, d, e, tol=remainder_rtol * scale)

    snapped_phi2 = BivarPoly({mono: _snap(v) for mono, v in fits["phi2"].items()})
    snapped_psi2 = BivarPoly({mono: _snap(v) for mono, v in fits["psi2"].items()})
    divisibility = divisibility_chain(snapped_phi2, snapped_psi2)

    rectifiable = (
        fit_residuals["phi2"] <= fit_rtol
        and fit_residuals["psi2"] <= fit_rtol
        and phi2_remainder <= remainder_rtol
        and psi2_remainder <= remainder_rtol
        and not violations
    )
    recovered = ((a + e) / 2.0, c, g) if rectifiable else None
    logger.info("Diagnostic (%s): phi2 residual %.3e, psi2 residual %.3e, violations %s",
                source, fit_residuals["phi2"], fit_residuals["psi2"], sorted(violations))
    return DiagnosticReport(
        source=source,
        grid_size=len(points),
        fit_residuals=fit_residuals,
        remainders=remainders,
        linear_coefficients=linear,
        recovered=recovered,
        violations=violations,
        divisibility=divisibility,
        verdict=Verdict.RECTIFIABLE if rectifiable else Verdict.NOT_RECTIFIABLE,
    )
