"""Plücker coordinates and their inverse on decomposable vectors."""

import logging
from itertools import combinations
from typing import Optional, Tuple

from sympy import Integer, Matrix, zeros

from .errors import PreconditionError
from .groves import proportionality_factor
from .linalg import determinant, rank
from .models import ExteriorVector, SubspaceRep, ground_index

logger = logging.getLogger(__name__)


def parse_index_set(text: str) -> Tuple[int, ...]:
    """``"1,1~,2"`` -> sorted ground positions."""
    positions = []
    for token in text.split(","):
        token = token.strip()
        tilde = token.endswith("~")
        positions.append(ground_index(int(token.rstrip("~")), tilde=tilde))
    return tuple(sorted(positions))


def wedge_rows(rows: Matrix, n: int) -> ExteriorVector:
    """Coordinates of the wedge of the rows of a k x 2n matrix (its maximal minors)."""
    k = rows.shape[0]
    coords = {}
    for columns in combinations(range(2 * n), k):
        minor = determinant(rows.extract(list(range(k)), list(columns))) if k else Integer(1)
        if minor != 0:
            coords[columns] = minor
    return ExteriorVector(n=n, degree=k, coords=coords)


def plucker(rep: SubspaceRep) -> ExteriorVector:
    matrix = Matrix(rep.matrix)
    if rank(matrix) < matrix.shape[0]:
        raise PreconditionError("representative is rank deficient; Plücker coordinates vanish")
    return wedge_rows(matrix, rep.n)


def subspace_from_coordinates(vector: ExteriorVector, pivot: Optional[Tuple[int, ...]] = None) -> SubspaceRep:
    """A representative whose Plücker vector is proportional to a decomposable ``vector``.

    Rows carry the identity on the columns of ``pivot`` (default: the first nonzero
    coordinate); entry (r, c) is ± Δ_{pivot with its r-th element replaced by c} / Δ_pivot.
    """
    if vector.is_zero():
        raise PreconditionError("the zero vector is not a point of the Grassmannian")
    pivot = tuple(pivot) if pivot is not None else next(iter(vector.coords))
    base = vector.get(pivot)
    if base == 0:
        raise PreconditionError(f"pivot coordinate {ExteriorVector.key_label(pivot)} vanishes")
    size = 2 * vector.n
    result = zeros(len(pivot), size)
    for r, j in enumerate(pivot):
        result[r, j] = 1
        rest = [x for x in pivot if x != j]
        for c in range(size):
            if c in pivot:
                continue
            between = sum(1 for x in rest if min(j, c) < x < max(j, c))
            key = tuple(sorted(rest + [c]))
            result[r, c] = (-1) ** between * vector.get(key) / base
    return SubspaceRep(matrix=result)


def proportional(left: ExteriorVector, right: ExteriorVector):
    """The scalar q with left = q * right, or None."""
    if left.n != right.n or left.degree != right.degree:
        return None
    return proportionality_factor(left.coords, right.coords)
