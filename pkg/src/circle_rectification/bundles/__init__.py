"""
Circle bundles: generation, simplicity and genericity tests, and
rectification by inversion.
"""

from .bundle import (
    BundleMember,
    CircleBundle,
    PencilSpheres,
    TangentParam,
    bundle_defects,
    bundle_from_AB,
    bundle_from_spheres,
    bundle_from_values,
    closed_form_second_point,
    directions_from_vectors,
    is_simple,
    member_from_values,
    pencil_spheres,
    tangent_param,
    transform_bundle,
)
from .genericity import cone_monomial_matrix, cone_rank, exact_cone_rank, is_generic_54
from .rectifier import (
    RectificationReport,
    build_rectifier,
    second_common_point,
    verify_rectification,
)

__all__ = [
    'BundleMember', 'CircleBundle', 'PencilSpheres', 'TangentParam', 'bundle_defects',
    'bundle_from_AB', 'bundle_from_spheres', 'bundle_from_values', 'closed_form_second_point',
    'directions_from_vectors', 'is_simple', 'member_from_values', 'pencil_spheres',
    'tangent_param', 'transform_bundle', 'cone_monomial_matrix', 'cone_rank',
    'exact_cone_rank', 'is_generic_54', 'RectificationReport', 'build_rectifier',
    'second_common_point', 'verify_rectification',
]
