"""
Exception hierarchy for the circle rectification toolkit.

Every error raised by the library derives from CircleGeometryError so that
callers (and the command-line front end) can catch a single base class,
while the subclasses keep the context needed to report what went wrong.
"""

from typing import Dict, FrozenSet, List, Optional, Sequence


class CircleGeometryError(Exception):
    """
    Base exception for all errors raised by the toolkit.

    Carries a human-readable message and optional debugging details.
    """

    def __init__(self, message: str, details: Optional[str] = None):
        """
        Initialize the exception.

        Args:
            message: Human-readable error message
            details: Optional additional details for debugging
        """
        super().__init__(message)
        self.message = message
        self.details = details

    def __str__(self):
        if self.details:
            return f"{self.message}\nDetails: {self.details}"
        return self.message


class ConfigurationError(CircleGeometryError):
    """
    Configuration validation errors.

    Raised when run configuration (environment variables or flags) is
    missing or malformed.
    """

    def __init__(self, message: str, missing_vars: Optional[List[str]] = None,
                 invalid_vars: Optional[Dict[str, str]] = None, details: Optional[str] = None):
        """
        Initialize configuration error with validation details.

        Args:
            message: Human-readable error message
            missing_vars: List of missing required variables
            invalid_vars: Dictionary of invalid variables and their issues
            details: Additional error details
        """
        super().__init__(message, details)
        self.missing_vars = missing_vars or []
        self.invalid_vars = invalid_vars or {}


# Geometry primitives

class GeometryError(CircleGeometryError):
    """Errors raised by sphere, circle and inversion primitives."""
    pass


class NonPositiveRadiusError(GeometryError):
    """Raised when a sphere or inversion is requested with radius <= 0."""

    def __init__(self, radius: float, details: Optional[str] = None):
        super().__init__(f"Radius must be positive, got {radius!r}", details)
        self.radius = radius


class CenterSingularityError(GeometryError):
    """Raised when a point coincides with the center of an inversion."""
    pass


class NotARealSphereError(GeometryError):
    """Raised when an operation needs a real sphere but got a plane, point or imaginary sphere."""
    pass


class DisjointError(GeometryError):
    """Raised when two surfaces do not meet."""
    pass


class TangentError(GeometryError):
    """Raised when two surfaces meet in a single point."""
    pass


class IdenticalError(GeometryError):
    """Raised when two sphere equations describe the same surface."""
    pass


class CoincidentPointsError(GeometryError):
    """Raised when points that must be distinct coincide."""
    pass


# Bundles

class BundleError(CircleGeometryError):
    """Errors raised while building, testing or rectifying circle bundles."""
    pass


class ChartError(BundleError):
    """
    Raised for tangent parameters outside the (1, k, m) chart.

    Directions whose slopes are not finite or exceed the chart limit
    are rejected.
    """

    def __init__(self, k: float, m: float, details: Optional[str] = None):
        super().__init__(f"Tangent parameter ({k!r}, {m!r}) is outside the (1,k,m) chart", details)
        self.k = k
        self.m = m


class BundleMemberError(BundleError):
    """Raised when the member of a bundle for direction (k, m) cannot be built."""

    def __init__(self, message: str, k: float, m: float, details: Optional[str] = None):
        super().__init__(message, details)
        self.k = k
        self.m = m

    def __str__(self):
        parts = [self.message, f"Direction: (k={self.k}, m={self.m})"]
        if self.details:
            parts.append(f"Details: {self.details}")
        return " | ".join(parts)


class CountMismatchError(BundleError):
    """Raised when an operation receives the wrong number of directions."""

    def __init__(self, expected: int, actual: int):
        super().__init__(f"Expected exactly {expected} directions, got {actual}")
        self.expected = expected
        self.actual = actual


class FewerThanThreeCirclesError(BundleError):
    """Raised when the second-point search has fewer than three circle members."""
    pass


class NearParallelImagesError(BundleError):
    """
    Raised when the inverted images of the first two members are nearly parallel.

    The caller should permute the members and retry.
    """
    pass


class AllSamplesNearCenterError(BundleError):
    """Raised when every sample of a member lies too close to the inversion center."""
    pass


# Polynomials and Taylor machinery

class PolynomialError(CircleGeometryError):
    """Errors raised by exact polynomial arithmetic and Taylor extraction."""
    pass


class ZeroDivisorError(PolynomialError):
    """Raised when dividing by the zero polynomial."""
    pass


class NonInvertibleLeadingCoefficientError(PolynomialError):
    """Raised when the divisor's leading coefficient in k is not a nonzero constant."""
    pass


class DegreeTooHighError(PolynomialError):
    """Raised when a polynomial exceeds the degree an operation accepts."""

    def __init__(self, message: str, degree: int, limit: int):
        super().__init__(message, details=f"degree {degree} > {limit}")
        self.degree = degree
        self.limit = limit


class DegenerateGridError(PolynomialError):
    """Raised when a diagnostic grid is too small or not in general position."""
    pass


class NewtonDivergenceError(PolynomialError):
    """Raised when Newton iteration on a curve's equations fails to converge."""
    pass


class IllConditionedStencilError(PolynomialError):
    """Raised when the Taylor stencil cannot be solved reliably."""
    pass


# Sphere nets

class NetError(CircleGeometryError):
    """Errors raised by nets of spheres and characteristic maps."""
    pass


class InvalidNetError(NetError):
    """Raised when four sphere equations are not independent."""
    pass


class BasePointError(NetError):
    """Raised when all four sphere equations of a net vanish at the point."""

    def __init__(self, point: Sequence[float], details: Optional[str] = None):
        super().__init__(f"Point {tuple(float(c) for c in point)} is a base point of the net", details)
        self.point = tuple(float(c) for c in point)


class BasePointHitError(BasePointError):
    """Raised when a sampled curve point is a base point of the net."""
    pass


class UnsupportedClassError(NetError):
    """Raised when an operation is not defined for the given geometry class."""
    pass


# Metrics

class MetricError(CircleGeometryError):
    """Errors raised by metric evaluation, geodesics, curvature and fitting."""
    pass


class OutOfDomainError(MetricError):
    """
    Raised when a point leaves the domain of a metric or map.

    When raised during geodesic integration, ``partial_path`` holds the
    samples computed up to the last valid state.
    """

    def __init__(self, message: str, point: Optional[Sequence[float]] = None,
                 partial_path=None, details: Optional[str] = None):
        super().__init__(message, details)
        self.point = None if point is None else tuple(float(c) for c in point)
        self.partial_path = partial_path


class SingularMetricError(MetricError):
    """Raised when a metric matrix cannot be inverted."""
    pass


class MapSingularError(MetricError):
    """Raised when a space map is undefined or has a singular Jacobian at the point."""
    pass


class DegeneratePlaneError(MetricError):
    """Raised when two tangent vectors do not span a 2-plane."""
    pass


class TooFewPointsError(MetricError):
    """Raised when a fit receives fewer points than it needs."""
    pass


class DegenerateCloudError(MetricError):
    """Raised when all points of a fit coincide."""
    pass


# Expression parsing

class ExpressionSyntaxError(CircleGeometryError):
    """
    Raised when a polynomial expression cannot be parsed.

    Carries the byte offset of the failure and the set of tokens that
    would have been accepted there.
    """

    def __init__(self, message: str, offset: int, expected: FrozenSet[str] = frozenset(),
                 source: Optional[str] = None):
        super().__init__(message)
        self.offset = offset
        self.expected = frozenset(expected)
        self.source = source

    def __str__(self):
        parts = [f"{self.message} at offset {self.offset}"]
        if self.expected:
            parts.append(f"expected: {', '.join(sorted(self.expected))}")
        if self.source is not None:
            parts.append(f"in: {self.source!r}")
        return " | ".join(parts)


class ZeroDenominatorError(ExpressionSyntaxError):
    """Raised when a rational literal has a zero denominator."""
    pass

