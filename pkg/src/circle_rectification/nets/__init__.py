"""
Nets of spheres, characteristic maps and their classification.
"""

from .sphere_net import (
    GeometryClass,
    ProjPoint3,
    SphereNet,
    canonical_net,
    char_determinant,
    char_map_eval,
    char_map_values,
    classify_net,
    conjugate_net,
    degenerate_test,
    euclidean_origin_net,
    image_line_residual,
    orthogonal_complement,
    points_line_residual,
    unit_disc,
)

__all__ = [
    'GeometryClass', 'ProjPoint3', 'SphereNet', 'canonical_net', 'char_determinant',
    'char_map_eval', 'char_map_values', 'classify_net', 'conjugate_net', 'degenerate_test',
    'euclidean_origin_net', 'image_line_residual', 'orthogonal_complement',
    'points_line_residual', 'unit_disc',
]
