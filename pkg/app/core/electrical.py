"""Laplacian, response matrix, effective resistance and the dual response L*."""

import logging

import networkx as nx
from sympy import ImmutableMatrix, Matrix, zeros

from .errors import DisconnectedNetworkError, IdentityViolation, PreconditionError, SingularInteriorError
from .linalg import schur_complement, solve_linear
from .models import CactusNetwork, QuotientGraph, ResistanceMatrix, ResponseMatrix
from .network import quotient_graph

logger = logging.getLogger(__name__)


def laplacian(gamma: QuotientGraph) -> Matrix:
    """𝓛 on Γ with vertices ordered boundary blocks first, then internal vertices.

    Diagonal entries are the summed incident conductances; quotient loops are ignored.
    """
    order = {vertex: i for i, vertex in enumerate(gamma.vertices)}
    result = zeros(len(order), len(order))
    for u, v, data in gamma.graph.edges(data=True):
        if u == v:
            continue
        c = data["conductance"]
        i, j = order[u], order[v]
        result[i, i] += c
        result[j, j] += c
        result[i, j] -= c
        result[j, i] -= c
    return result


def _check_response(matrix: Matrix) -> None:
    size = matrix.shape[0]
    if matrix != matrix.T:
        raise IdentityViolation("response matrix is not symmetric")
    if any(sum(matrix.row(i)) != 0 for i in range(size)):
        raise IdentityViolation("response matrix rows do not sum to zero")


def response_matrix(net: CactusNetwork) -> ResponseMatrix:
    """L = -(Schur complement of 𝓛 eliminating internal vertices), over the blocks of the shape."""
    gamma = quotient_graph(net)
    full = laplacian(gamma)
    keep = len(gamma.boundary)
    try:
        reduced = schur_complement(full, keep)
    except ZeroDivisionError as exc:
        raise SingularInteriorError(
            "interior block of the Laplacian is singular: some internal component misses the boundary"
        ) from exc
    result = -reduced
    _check_response(result)
    logger.debug("response matrix over %d blocks from %d vertices", keep, full.shape[0])
    return ResponseMatrix(matrix=result, labels=gamma.boundary)


def resistance_matrix(net: CactusNetwork) -> ResistanceMatrix:
    """R_ij = V(v) - V(u) for L V = e_u - e_v, gauge V(u) = 0; labels in one block get 0."""
    gamma = quotient_graph(net)
    if not nx.is_connected(gamma.graph):
        raise DisconnectedNetworkError("effective resistance needs a connected quotient graph")
    response = response_matrix(net).matrix
    blocks = net.shape
    position = {label: k for k, block in enumerate(blocks) for label in block}
    size = len(blocks)
    result = zeros(net.n, net.n)
    for i in range(1, net.n + 1):
        for j in range(i + 1, net.n + 1):
            u, v = position[i], position[j]
            if u == v:
                continue
            gauge = zeros(1, size)
            gauge[0, u] = 1
            system = Matrix.vstack(Matrix(response), gauge)
            rhs = [0] * size + [0]
            rhs[u], rhs[v] = 1, -1
            solved = solve_linear(system, rhs)
            if not solved.consistent or solved.nullspace:
                raise IdentityViolation(f"potential problem for R_{i}{j} is not uniquely solvable")
            value = solved.solution[v] - solved.solution[u]
            result[i - 1, j - 1] = result[j - 1, i - 1] = value
    return ResistanceMatrix(matrix=result)


def lstar_from_resistance(resistance: ResistanceMatrix) -> ResponseMatrix:
    """L*_ij = (R_ij + R_{i+1,j+1} - R_{i+1,j} - R_{i,j+1}) / 2 with indices mod n."""
    r = resistance.matrix
    n = r.shape[0]
    if n == 0:
        raise PreconditionError("empty resistance matrix")
    result = zeros(n, n)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            a, b = (i + 1) % n, (j + 1) % n
            result[i, j] = (r[i, j] + r[a, b] - r[a, j] - r[i, b]) / 2
    for i in range(n):
        result[i, i] = -sum(result[i, j] for j in range(n) if j != i)
    _check_response(result)
    return ResponseMatrix(matrix=ImmutableMatrix(result), labels=tuple(str(k) for k in range(1, n + 1)))
