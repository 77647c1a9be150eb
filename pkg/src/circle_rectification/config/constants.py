"""
Numeric constants shared across the toolkit.

Tolerances live here so that library defaults, the command-line front end
and the reports all agree on the same values.
"""

# Projective equality of sphere 5-vectors (after unit normalization)
SPHERE_EQUALITY_RTOL = 1e-12

# Unit-vector and on-curve checks
UNIT_TOL = 1e-12

# Tangency vs. transversal intersection: discriminant against factor * scale^2
TANGENCY_FACTOR = 1e-10

# Bundles
DEFAULT_BUNDLE_TOL = 1e-7
CHART_LIMIT = 1e6
DIRECTION_SEPARATION = 1e-9
GENERIC_COUNT = 54
CONE_DEGREE = 9
GENERIC_RANK_RTOL = 1e-9
NEAR_PARALLEL_SIN = 1e-6
CENTER_EXCLUSION = 1e-3

# Taylor extraction
STENCIL_STEP = 1e-2
STENCIL_NODES = (-4, -3, -2, -1, 1, 2, 3, 4)
STENCIL_FIT_DEGREE = 8
NEWTON_MAX_ITER = 50
NEWTON_TOL = 1e-15

# Rectifiability diagnostic
DIAGNOSTIC_MIN_POINTS = 54
FIT_RESIDUAL_RTOL = 1e-8
REMAINDER_RTOL = 1e-8

# Sphere nets
CLASSIFICATION_TAU = 1e-10
DEGENERACY_FACTOR = 1e-10
BASE_POINT_TOL = 1e-14

# Metrics
CHRISTOFFEL_STEP = 1e-5
CURVATURE_STEP = 1e-4
LINE_CURVATURE_FACTOR = 1e-9
MIN_GEODESIC_STEPS = 16

# Command-line defaults
DEFAULT_SEED = 0
DEFAULT_SAMPLES = 64
REPORT_VERSION = 1

# Beltrami suite defaults
BELTRAMI_GEODESICS = 50
BELTRAMI_BALL = 0.25
BELTRAMI_T = 0.2
BELTRAMI_STEPS = 2000
BELTRAMI_CURVATURE_POINTS = 50
BELTRAMI_CURVATURE_PLANES = 3
CURVATURE_BALL = 0.8
CIRCLE_FIT_RMS_TOL = 1e-6
IMAGE_LINE_TOL = 1e-7
CURVATURE_TOL = 1e-3
