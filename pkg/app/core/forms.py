"""The skew forms Ω and Ω^D, the sign matrix D, the shift Σ and the contraction κ."""

import logging
from functools import lru_cache
from itertools import combinations
from math import comb

from sympy import ImmutableMatrix, Integer, Matrix, diag, zeros

from .config import get_settings
from .errors import PreconditionError
from .linalg import rank
from .models import ExteriorVector, SkewForm, SubspaceRep, ground_index

logger = logging.getLogger(__name__)


def _require_n(n: int) -> None:
    if n < 2:
        raise PreconditionError("the forms are defined for n >= 2")


def _set_pair(matrix: Matrix, x: int, y: int, value) -> None:
    """Add ``value`` to Ω(e_x, e_y) and its negative to Ω(e_y, e_x)."""
    matrix[x, y] += value
    matrix[y, x] -= value


def omega(n: int) -> SkewForm:
    _require_n(n)
    w = zeros(2 * n, 2 * n)
    for i in range(1, n + 1):
        _set_pair(w, ground_index(i), ground_index(i, tilde=True), 1)
    for j in range(1, n):
        _set_pair(w, ground_index(j + 1), ground_index(j, tilde=True), 1)
    _set_pair(w, ground_index(1), ground_index(n, tilde=True), (-1) ** n)
    return SkewForm(matrix=w, variant="omega")


def omega_d(n: int) -> SkewForm:
    _require_n(n)
    w = zeros(2 * n, 2 * n)
    for i in range(1, n + 1):
        _set_pair(w, ground_index(i), ground_index(i, tilde=True), 1)
    for j in range(1, n + 1):
        _set_pair(w, ground_index(j, tilde=True), ground_index(j % n + 1), 1)
    return SkewForm(matrix=w, variant="omega_d")


def d_matrix(n: int) -> ImmutableMatrix:
    return ImmutableMatrix(diag(*[(-1) ** (g // 2) for g in range(2 * n)]))


def shift(n: int) -> ImmutableMatrix:
    """Σ acting on row vectors: e_1 -> (-1)^n e_n~, and every other basis vector to
    its predecessor in the order 1 < 1~ < 2 < ... < n~."""
    s = zeros(2 * n, 2 * n)
    s[0, 2 * n - 1] = (-1) ** n
    for g in range(1, 2 * n):
        s[g, g - 1] = 1
    return ImmutableMatrix(s)


# -----------------------------
# Contraction
# -----------------------------

def kappa(form: SkewForm, vector: ExteriorVector) -> ExteriorVector:
    """κ(e_{s_1} ∧ ... ∧ e_{s_k}) = Σ_{p<q} (-1)^{p+q-1} Ω(e_{s_p}, e_{s_q}) e_{S minus s_p, s_q}."""
    if vector.n != form.n:
        raise PreconditionError(f"vector lives on n={vector.n}, form on n={form.n}")
    w = form.matrix
    coords = {}
    for key, value in vector.coords.items():
        for p, q in combinations(range(len(key)), 2):
            pairing = w[key[p], key[q]]
            if pairing == 0:
                continue
            # positions are 1-based in the sign rule
            sign = (-1) ** (p + q + 1)
            rest = key[:p] + key[p + 1:q] + key[q + 1:]
            coords[rest] = coords.get(rest, Integer(0)) + sign * pairing * value
    return ExteriorVector(n=vector.n, degree=max(vector.degree - 2, 0), coords=coords)


@lru_cache(maxsize=None)
def _kappa_matrix(n: int) -> ImmutableMatrix:
    form = omega(n)
    sources = list(combinations(range(2 * n), n + 1))
    targets = {key: row for row, key in enumerate(combinations(range(2 * n), n - 1))}
    matrix = zeros(len(targets), len(sources))
    for column, key in enumerate(sources):
        image = kappa(form, ExteriorVector(n=n, degree=n + 1, coords={key: 1}))
        for target, value in image.coords.items():
            matrix[targets[target], column] = value
    return ImmutableMatrix(matrix)


def kernel_dimension_of_kappa(n: int) -> int:
    _require_n(n)
    cap = get_settings().kappa_max_n
    if n > cap:
        raise PreconditionError(f"n={n} exceeds the κ size cap of {cap}")
    matrix = _kappa_matrix(n)
    nullity = comb(2 * n, n + 1) - rank(matrix)
    logger.debug("κ on n=%d: %dx%d matrix, nullity %d", n, *matrix.shape, nullity)
    return nullity


# -----------------------------
# Membership checks
# -----------------------------

def is_isotropic(rep: SubspaceRep, form: SkewForm) -> bool:
    m = Matrix(rep.matrix)
    if m.shape[1] != form.matrix.shape[0]:
        raise PreconditionError("representative and form have different ambient dimensions")
    return bool((m * form.matrix * m.T).is_zero_matrix)


def is_totally_nonnegative(vector: ExteriorVector) -> bool:
    if vector.is_zero():
        raise PreconditionError("sign normalization of the zero vector is undefined")
    first = next(iter(vector.coords.values()))
    sign = 1 if first > 0 else -1
    return all(sign * value >= 0 for value in vector.coords.values())
