"""Lam's map into ∧^{n+1} R^{2n}, the cyclic shift, and the two Schubert charts."""

import logging
from typing import Literal, Tuple

from sympy import ImmutableMatrix, Integer, Matrix, zeros

from .combinat import concordant_index_pairs, enumerate_noncrossing, kreweras_pair
from .errors import ChartPivotError, NotInImageError, PreconditionError
from .check_models import ExtremeCoordinates
from .electrical import lstar_from_resistance, resistance_matrix, response_matrix
from .exterior import subspace_from_coordinates, wedge_rows
from .forms import d_matrix, is_isotropic, kappa, omega, shift
from .groves import lambda_vector
from .linalg import solve_linear
from .models import (
    CactusNetwork,
    ExteriorVector,
    GroveMeasurements,
    NoncrossingPartition,
    ResponseMatrix,
    SubspaceRep,
    ground_index,
)

logger = logging.getLogger(__name__)

Chart = Literal["not-shorted", "connected"]


def f_sigma(sigma: NoncrossingPartition) -> ExteriorVector:
    pair = kreweras_pair(sigma)
    coords = {index.ground(): Integer(1) for index in concordant_index_pairs(pair)}
    return ExteriorVector(n=sigma.n, degree=sigma.n + 1, coords=coords)


def block_vectors(sigma: NoncrossingPartition) -> SubspaceRep:
    """Rows v = Σ_{b in block} (-1)^b e_b over the blocks of σ and then of its complement."""
    n = sigma.n
    pair = kreweras_pair(sigma)
    rows = []
    for blocks, tilde in ((pair.sigma.blocks, False), (pair.sigma_tilde.blocks, True)):
        for block in blocks:
            row = [0] * (2 * n)
            for b in block:
                row[ground_index(b, tilde=tilde)] = (-1) ** b
            rows.append(row)
    return SubspaceRep(matrix=rows)


def block_wedge(sigma: NoncrossingPartition) -> ExteriorVector:
    return wedge_rows(Matrix(block_vectors(sigma).matrix), sigma.n)


def lam_map(measurements: GroveMeasurements) -> ExteriorVector:
    n = measurements.n
    result = ExteriorVector(n=n, degree=n + 1)
    for sigma, value in measurements.values.items():
        result = result + f_sigma(sigma).scaled(value)
    return result


def lambda_from_coordinates(vector: ExteriorVector) -> GroveMeasurements:
    """Solve Σ Λ_σ f_σ = vector exactly; raises when the vector lies outside the span."""
    n = vector.n
    partitions = enumerate_noncrossing(n)
    columns = [f_sigma(sigma) for sigma in partitions]
    keys = sorted(set(vector.coords).union(*(column.coords for column in columns)))
    system = Matrix([[column.get(key) for column in columns] for key in keys])
    solved = solve_linear(system, [vector.get(key) for key in keys])
    if not solved.consistent:
        raise NotInImageError("coordinates are not a combination of the f_σ")
    return GroveMeasurements(n=n, values=dict(zip(partitions, solved.solution)))


# -----------------------------
# Cyclic shift
# -----------------------------

def cyclic_shift(rep: SubspaceRep) -> SubspaceRep:
    return SubspaceRep(matrix=rep.matrix * shift(rep.n))


def _inversions(values) -> int:
    return sum(1 for i in range(len(values)) for j in range(i + 1, len(values)) if values[i] > values[j])


def shift_coordinates(vector: ExteriorVector) -> ExteriorVector:
    """∧^k Σ on coordinates, as a signed permutation of basis indices."""
    size = 2 * vector.n
    coords = {}
    for key, value in vector.coords.items():
        factor = Integer(1)
        image = []
        for g in key:
            if g == 0:
                image.append(size - 1)
                factor *= (-1) ** vector.n
            else:
                image.append(g - 1)
        factor *= (-1) ** _inversions(image)
        coords[tuple(sorted(image))] = factor * value
    return ExteriorVector(n=vector.n, degree=vector.degree, coords=coords)


# -----------------------------
# Extreme coordinates and Δ-ratio forms
# -----------------------------

def _untilded(labels) -> list:
    return [ground_index(i) for i in labels]


def _tilded(labels) -> list:
    return [ground_index(i, tilde=True) for i in labels]


def _key(*parts) -> Tuple[int, ...]:
    return tuple(sorted(g for part in parts for g in part))


def _require_image(vector: ExteriorVector) -> None:
    n = vector.n
    if n < 2 or vector.degree != n + 1:
        raise NotInImageError(f"expected a degree {n + 1} vector with n >= 2")
    if not kappa(omega(n), vector).is_zero():
        raise NotInImageError("κ does not vanish: the vector is not isotropic")


def extreme_coordinates(vector: ExteriorVector) -> ExtremeCoordinates:
    _require_image(vector)
    n = vector.n
    everything = range(1, n + 1)
    not_shorted = {vector.get(_key(_untilded(everything), _tilded([k]))) for k in everything}
    connected = {vector.get(_key(_untilded([k]), _tilded(everything))) for k in everything}
    if len(not_shorted) != 1 or len(connected) != 1:
        raise NotInImageError("extreme Plücker coordinates are not constant in k")
    return ExtremeCoordinates(not_shorted=not_shorted.pop(), connected=connected.pop())


def response_from_coordinates(vector: ExteriorVector) -> Matrix:
    """L_ij = Δ_{[n]∖{j}, {(i-1)~, i~}} / Δ_{[n], {i~}} for i < j, symmetric, zero row sums."""
    extremes = extreme_coordinates(vector)
    if extremes.not_shorted == 0:
        raise ChartPivotError("Δ_{[n],{k~}} vanishes: the point is shorted")
    n = vector.n
    result = zeros(n, n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            previous = (i - 2) % n + 1
            rest = [k for k in range(1, n + 1) if k != j]
            value = vector.get(_key(_untilded(rest), _tilded([previous, i]))) / extremes.not_shorted
            result[i - 1, j - 1] = result[j - 1, i - 1] = value
    for i in range(n):
        result[i, i] = -sum(result[i, j] for j in range(n) if j != i)
    return result


def resistance_from_coordinates(vector: ExteriorVector) -> Matrix:
    """R_ij = Σ_{k=i}^{j-1} Δ_{{i,j}, [n~]∖{k~}} / Δ_{{i}, [n~]} for i < j."""
    extremes = extreme_coordinates(vector)
    if extremes.connected == 0:
        raise ChartPivotError("Δ_{{k},[n~]} vanishes: the point is disconnected")
    n = vector.n
    result = zeros(n, n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            total = Integer(0)
            for k in range(i, j):
                tildes = [t for t in range(1, n + 1) if t != k]
                total += vector.get(_key(_untilded([i, j]), _tilded(tildes)))
            result[i - 1, j - 1] = result[j - 1, i - 1] = total / extremes.connected
    return result


# -----------------------------
# Charts
# -----------------------------

def _square(matrix, name: str) -> Matrix:
    m = Matrix(matrix.matrix if isinstance(matrix, ResponseMatrix) else matrix)
    if m.shape[0] != m.shape[1] or m.shape[0] < 2:
        raise PreconditionError(f"{name} must be a square matrix of size at least 2")
    if m != m.T:
        raise PreconditionError(f"{name} is not symmetric")
    if any(sum(m.col(j)) != 0 for j in range(m.shape[1])):
        raise PreconditionError(f"{name} has a column that does not sum to zero")
    return m


def chart_from_response(response) -> SubspaceRep:
    """Not-shorted chart: S_{j,i-1} = S_{j,i} + L_{ij} with S_{j,n} = 0; rows
    (0,1,0,1,...) and, for each j, 1 at column j and S_{j,i} at column i~; times D."""
    l = _square(response, "response matrix")
    n = l.shape[0]
    s = zeros(n, n)
    for j in range(n):
        for i in range(n - 1, 0, -1):
            s[j, i - 1] = s[j, i] + l[i, j]
    pattern = zeros(n + 1, 2 * n)
    for i in range(1, n + 1):
        pattern[0, ground_index(i, tilde=True)] = 1
    for j in range(1, n + 1):
        pattern[j, ground_index(j)] = 1
        for i in range(1, n + 1):
            pattern[j, ground_index(i, tilde=True)] = s[j - 1, i - 1]
    return SubspaceRep(matrix=pattern * d_matrix(n))


def chart_from_lstar(lstar) -> SubspaceRep:
    """Connected chart: T_{j,i+1} = T_{j,i} + L*_{ij} with T_{j,1} = 0; rows
    (1,0,1,0,...) and, for each j, T_{j,i} at column i and 1 at column j~; times D."""
    l = _square(lstar, "dual response matrix")
    n = l.shape[0]
    t = zeros(n, n)
    for j in range(n):
        for i in range(n - 1):
            t[j, i + 1] = t[j, i] + l[i, j]
    pattern = zeros(n + 1, 2 * n)
    for i in range(1, n + 1):
        pattern[0, ground_index(i)] = 1
    for j in range(1, n + 1):
        pattern[j, ground_index(j, tilde=True)] = 1
        for i in range(1, n + 1):
            pattern[j, ground_index(i)] = t[j - 1, i - 1]
    return SubspaceRep(matrix=pattern * d_matrix(n))


def extract_symmetric(rep: SubspaceRep, chart: Chart) -> ResponseMatrix:
    """Row-reduce M·D to the chart pattern and return its difference matrix:
    S_{c,r-1} - S_{c,r} (not-shorted) or T_{c,r+1} - T_{c,r} (connected)."""
    n = rep.n
    if not is_isotropic(rep, omega(n)):
        raise PreconditionError("representative is not isotropic for Ω")
    pattern = Matrix(rep.matrix) * d_matrix(n)
    pivots_first = [ground_index(i, tilde=(chart == "connected")) for i in range(1, n + 1)]
    others = [ground_index(i, tilde=(chart != "connected")) for i in range(1, n + 1)]
    reduced, pivots = pattern.extract(list(range(n + 1)), pivots_first + others).rref()
    if tuple(pivots[:n]) != tuple(range(n)) or len(pivots) != n + 1:
        raise ChartPivotError(f"representative is outside the {chart} chart")

    block = reduced[:n, n:]
    result = zeros(n, n)
    for r in range(n):
        for c in range(n):
            if chart == "connected":
                result[r, c] = block[c, (r + 1) % n] - block[c, r]
            else:
                result[r, c] = block[c, (r - 1) % n] - block[c, r]
    if result != result.T:
        raise PreconditionError("recovered matrix is not symmetric")
    return ResponseMatrix(matrix=ImmutableMatrix(result), labels=tuple(str(k) for k in range(1, n + 1)))


def representative(vector: ExteriorVector, chart: Chart = "not-shorted") -> SubspaceRep:
    """Rebuild a matrix for a 𝒯-image, pivoting on the chart's extreme coordinate."""
    n = vector.n
    everything = range(1, n + 1)
    if chart == "connected":
        pivot = _key(_untilded([1]), _tilded(everything))
    else:
        pivot = _key(_untilded(everything), _tilded([1]))
    if vector.get(pivot) == 0:
        raise ChartPivotError(f"the point lies outside the {chart} chart")
    return subspace_from_coordinates(vector, pivot)


# -----------------------------
# Network entry points
# -----------------------------

def chart_for_network(net: CactusNetwork, source: Literal["response", "resistance"] = "response") -> SubspaceRep:
    """The chart representative built from a network's L (or from L* via R).

    L is indexed by the blocks of the shape, so the response chart needs all
    singletons; R and L* are indexed by boundary labels for any connected network.
    """
    if source == "response":
        if len(net.shape) != net.n:
            raise PreconditionError("the response chart needs a network whose shape is all singletons")
        return chart_from_response(response_matrix(net))
    return chart_from_lstar(lstar_from_resistance(resistance_matrix(net)))


def extract_from_network(net: CactusNetwork, chart: Chart) -> ResponseMatrix:
    """Recover L (not-shorted) or L* (connected) from the 𝒯-image of the network."""
    vector = lam_map(lambda_vector(net))
    logger.debug("extracting the %s matrix from %d coordinates", chart, len(vector.coords))
    return extract_symmetric(representative(vector, chart), chart)
