"""
The 54-lines genericity test.

Fifty-four lines through the origin are generic when they lie on a unique
(up to scale) homogeneous cone of degree 9: the 54 x 55 matrix of all
degree-9 monomials x^i y^j z^l evaluated at the directions (1, k, m) has
rank 54.
"""

import logging
from fractions import Fraction
from math import lcm
from typing import List, Sequence, Tuple

import numpy as np
from numpy.polynomial import chebyshev

from ..config.constants import CONE_DEGREE, GENERIC_COUNT, GENERIC_RANK_RTOL
from ..utils.exceptions import CountMismatchError

logger = logging.getLogger(__name__)


def cone_monomials(degree: int = CONE_DEGREE) -> List[Tuple[int, int, int]]:
    """Exponents (i, j, l) with i + j + l = degree, in a fixed order."""
    return [(degree - j - l, j, l) for j in range(degree + 1) for l in range(degree + 1 - j)]


def cone_monomial_matrix(dirs: Sequence[Sequence[float]], degree: int = CONE_DEGREE) -> np.ndarray:
    """Rows of degree-``degree`` monomials evaluated at (1, k, m)."""
    params = np.asarray(dirs, dtype=float)
    ks, ms = params[:, 0], params[:, 1]
    return np.column_stack([ks ** j * ms ** l for _, j, l in cone_monomials(degree)])


def _chebyshev_matrix(dirs: Sequence[Sequence[float]], degree: int) -> np.ndarray:
    params = np.asarray(dirs, dtype=float)
    scaled = []
    for column in params.T:
        low, high = float(column.min()), float(column.max())
        half = (high - low) / 2.0 or 1.0
        scaled.append((column - (low + high) / 2.0) / half)
    tk = chebyshev.chebvander(scaled[0], degree)
    tm = chebyshev.chebvander(scaled[1], degree)
    return np.column_stack([tk[:, i] * tm[:, j]
                            for i in range(degree + 1) for j in range(degree + 1 - i)])


def cone_rank(dirs: Sequence[Sequence[float]], degree: int = CONE_DEGREE,
              rtol: float = GENERIC_RANK_RTOL) -> int:
    """
    Numeric rank of the cone matrix.

    Computed in a tensor Chebyshev basis on the bounding box of the (k, m)
    data, which differs from the monomial matrix by an invertible column
    transformation and so has the same rank with far better conditioning.
    """
    singular = np.linalg.svd(_chebyshev_matrix(dirs, degree), compute_uv=False)
    if singular.size == 0 or singular[0] == 0.0:
        return 0
    rank = int(np.sum(singular > rtol * singular[0]))
    logger.debug("Cone matrix singular values %g..%g, rank %d", singular[0], singular[-1], rank)
    return rank


def is_generic_54(dirs: Sequence[Sequence[float]]) -> bool:
    """
    True iff the 54 directions (1, k, m) lie on a unique cone of degree 9.

    Raises:
        CountMismatchError: If not exactly 54 directions are given
    """
    if len(dirs) != GENERIC_COUNT:
        raise CountMismatchError(GENERIC_COUNT, len(dirs))
    return cone_rank(dirs) == GENERIC_COUNT


def _integer_direction(k: Fraction, m: Fraction) -> Tuple[int, int, int]:
    k, m = Fraction(k), Fraction(m)
    scale = lcm(k.denominator, m.denominator)
    return scale, int(k * scale), int(m * scale)


def bareiss_rank(rows: List[List[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    matrix = [list(row) for row in rows]
    if not matrix:
        return 0
    n_rows, n_cols = len(matrix), len(matrix[0])
    rank = 0
    previous = 1
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if matrix[r][col] != 0), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        lead = matrix[rank][col]
        for r in range(rank + 1, n_rows):
            factor = matrix[r][col]
            row = matrix[r]
            top = matrix[rank]
            for c in range(col + 1, n_cols):
                row[c] = (row[c] * lead - factor * top[c]) // previous
            row[col] = 0
        previous = lead
        rank += 1
        if rank == n_rows:
            break
    return rank


def exact_cone_rank(dirs: Sequence[Tuple[Fraction, Fraction]], degree: int = CONE_DEGREE) -> int:
    """
    Exact rank of the cone matrix for rational tangent parameters.

    Each direction (1, k, m) is replaced by an integer multiple of itself,
    which scales its row by a nonzero factor and leaves the rank unchanged.
    """
    monomials = cone_monomials(degree)
    rows = []
    for k, m in dirs:
        x, y, z = _integer_direction(k, m)
        rows.append([x ** i * y ** j * z ** l for i, j, l in monomials])
    return bareiss_rank(rows)
