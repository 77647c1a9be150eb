"""
Sphere equations, inversions, circles and lines.

This module provides the primitives every other part of the toolkit is
built from: projective sphere equations with the Moebius inner product,
inversions acting on points and spheres, and circle/line intersections.
"""

from .spheres import (
    Imaginary,
    Inversion,
    Plane,
    PointAtInfinity,
    PointSphere,
    RealSphere,
    SphereEq,
    UNIT_INVERSION,
    invert_point,
    invert_sphere,
    mobius_inner,
    orthogonal_sphere_at,
    power_of_point,
    scale_sphere,
    sphere_equal,
    sphere_eval,
    sphere_from_center_radius,
    sphere_geometry,
    sphere_normalized,
    translate_sphere,
)
from .curves import (
    Circle,
    CircleOrLine,
    Line,
    circle_from_sphere_pair,
    circle_through_points,
    curve_surfaces,
    fit_line,
    line_fit_residual,
    point_circle_distance,
    sample_curve,
    tangent_at,
    transform_curve,
)

__all__ = [
    'Imaginary', 'Inversion', 'Plane', 'PointAtInfinity', 'PointSphere', 'RealSphere',
    'SphereEq', 'UNIT_INVERSION', 'invert_point', 'invert_sphere', 'mobius_inner',
    'orthogonal_sphere_at', 'power_of_point', 'scale_sphere', 'sphere_equal', 'sphere_eval',
    'sphere_from_center_radius', 'sphere_geometry', 'sphere_normalized', 'translate_sphere',
    'Circle', 'CircleOrLine', 'Line', 'circle_from_sphere_pair', 'circle_through_points',
    'curve_surfaces', 'fit_line', 'line_fit_residual', 'point_circle_distance',
    'sample_curve', 'tangent_at', 'transform_curve',
]
