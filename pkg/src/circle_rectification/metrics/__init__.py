"""
Metrics of constant curvature: evaluation, connection, geodesics,
curvature, circle fitting and characteristic-map pullbacks.
"""

from .connection import CurvatureSurvey, christoffel, curvature_survey, random_ball_points, riemann_tensor, sectional_curvature
from .fields import MetricField, MetricKind, metric_eval
from .fitting import circle_fit
from .geodesics import GeodesicPath, GeodesicSample, energy_drift, geodesic_integrate, metric_speed, normalize_velocity
from .maps import (
    AffineChar,
    Identity,
    InversionMap,
    geometry_of,
    gnomonic_lift,
    lifted_plane_residual,
    pullback_metric,
    rectifying_map,
)

__all__ = [
    'CurvatureSurvey', 'christoffel', 'curvature_survey', 'random_ball_points', 'riemann_tensor',
    'sectional_curvature', 'MetricField', 'MetricKind', 'metric_eval', 'circle_fit',
    'GeodesicPath', 'GeodesicSample', 'energy_drift', 'geodesic_integrate', 'metric_speed',
    'normalize_velocity', 'AffineChar', 'Identity', 'InversionMap', 'gnomonic_lift',
    'lifted_plane_residual', 'pullback_metric', 'geometry_of', 'rectifying_map',
]
