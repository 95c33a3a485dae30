"""Exact linear algebra over the rationals."""

import logging
from typing import Sequence

from sympy import Matrix, QQ
from sympy.polys.matrices import DomainMatrix

from .check_models import LinearSolution
from .errors import IdentityViolation

logger = logging.getLogger(__name__)


def _as_matrix(values) -> Matrix:
    return values if isinstance(values, Matrix) else Matrix(values)


def determinant(a) -> object:
    """Fraction-free (Bareiss) determinant."""
    return _as_matrix(a).det(method="bareiss")


def rank(a) -> int:
    a = _as_matrix(a)
    if 0 in a.shape:
        return 0
    return DomainMatrix.from_Matrix(a).convert_to(QQ).rank()


def solve_linear(a, b: Sequence) -> LinearSolution:
    """Solve a·x = b exactly.

    Returns one particular solution (free parameters set to zero) with a basis of
    the nullspace, or, for an inconsistent system, a certificate y with y·a = 0
    and y·b != 0.
    """
    a = _as_matrix(a)
    rhs = Matrix(list(b))
    try:
        solution, params = a.gauss_jordan_solve(rhs)
    except ValueError:
        for y in a.T.nullspace():
            if (y.T * rhs)[0] != 0:
                logger.debug("inconsistent %dx%d system", *a.shape)
                return LinearSolution(consistent=False, certificate=list(y))
        raise IdentityViolation("elimination reported an inconsistent system without a certificate")
    if params.shape[0]:
        solution = solution.subs({p: 0 for p in params})
    return LinearSolution(
        consistent=True,
        solution=list(solution),
        nullspace=[list(v) for v in a.nullspace()],
    )


def schur_complement(matrix: Matrix, keep: int) -> Matrix:
    """M_kk - M_ke M_ee^{-1} M_ek for the leading ``keep`` rows/columns; the
    eliminated block must be invertible."""
    size = matrix.shape[0]
    if keep == size:
        return Matrix(matrix)
    top_left = matrix[:keep, :keep]
    top_right = matrix[:keep, keep:]
    bottom_left = matrix[keep:, :keep]
    bottom_right = matrix[keep:, keep:]
    if bottom_right.shape[0] and determinant(bottom_right) == 0:
        raise ZeroDivisionError("eliminated block is singular")
    return top_left - top_right * bottom_right.LUsolve(bottom_left)
