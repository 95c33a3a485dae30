"""Groves of a cactus network and the grove measurements Λ_σ."""

import logging
from typing import Dict, Iterator, List, Optional, Tuple

import networkx as nx
from sympy import Integer, Matrix, zeros

from .check_models import EquivalenceResult
from .combinat import is_concordant, enumerate_noncrossing
from .config import get_settings
from .errors import DisconnectedNetworkError, GroveLimitError, IdentityViolation, PreconditionError
from .models import CactusNetwork, Grove, GroveMeasurements, NoncrossingPartition, _find_crossing
from .network import quotient_graph

logger = logging.getLogger(__name__)


def _walk_groves(net: CactusNetwork) -> Iterator[Tuple[Tuple[str, ...], List[int]]]:
    """Yield (edge ids, component label per vertex) for every grove, in
    lexicographic order of the sorted edge-id tuples."""
    cap = get_settings().grove_edge_cap
    if len(net.edges) > cap:
        raise GroveLimitError(f"{len(net.edges)} edges exceed the grove enumeration cap of {cap}")

    gamma = quotient_graph(net)
    index = {vertex: i for i, vertex in enumerate(gamma.vertices)}
    boundary_count = len(gamma.boundary)
    edges = sorted(
        (edge_id, index[u], index[v])
        for u, v, edge_id in gamma.graph.edges(keys=True)
        if edge_id not in gamma.loops
    )
    logger.debug("Step 1: enumerating groves over %d edges", len(edges))

    def is_grove(labels: List[int]) -> bool:
        anchored = {labels[i] for i in range(boundary_count)}
        return all(label in anchored for label in labels)

    def extend(start: int, chosen: List[str], labels: List[int]):
        if is_grove(labels):
            yield tuple(chosen), labels
        for k in range(start, len(edges)):
            edge_id, u, v = edges[k]
            if labels[u] == labels[v]:
                continue
            old, new = labels[v], labels[u]
            merged = [new if label == old else label for label in labels]
            yield from extend(k + 1, chosen + [edge_id], merged)

    yield from extend(0, [], list(range(len(gamma.vertices))))


def enumerate_groves(net: CactusNetwork) -> Iterator[Grove]:
    for edge_ids, _ in _walk_groves(net):
        yield Grove(edges=edge_ids)


def _partition_from_labels(net: CactusNetwork, labels: List[int]) -> NoncrossingPartition:
    by_label: Dict[int, List[int]] = {}
    for position, block in enumerate(net.shape):
        by_label.setdefault(labels[position], []).extend(block)
    blocks = list(by_label.values())
    crossing = _find_crossing(blocks)
    if crossing:
        raise IdentityViolation(f"grove connects crossing boundary pairs {crossing}; embedding is invalid")
    return NoncrossingPartition(n=net.n, blocks=blocks)


def grove_partition(net: CactusNetwork, grove: Grove) -> NoncrossingPartition:
    gamma = quotient_graph(net)
    forest = nx.Graph()
    forest.add_nodes_from(gamma.vertices)
    for u, v, edge_id in gamma.graph.edges(keys=True):
        if edge_id in grove.edges:
            if edge_id in gamma.loops:
                raise PreconditionError(f"edge {edge_id} is a loop of the quotient and lies in no grove")
            forest.add_edge(u, v)
    if forest.number_of_edges() != len(grove.edges) or not nx.is_forest(forest):
        raise PreconditionError(f"{grove.edges} is not a grove of this network")
    labels = {}
    for label, component in enumerate(nx.connected_components(forest)):
        if not any(vertex in gamma.boundary for vertex in component):
            raise PreconditionError(f"{grove.edges} leaves a component without boundary vertices")
        for vertex in component:
            labels[vertex] = label
    return _partition_from_labels(net, [labels[vertex] for vertex in gamma.vertices])


def lambda_vector(net: CactusNetwork) -> GroveMeasurements:
    conductance = {edge.id: edge.conductance for edge in net.edges}
    values: Dict[NoncrossingPartition, object] = {}
    count = 0
    for edge_ids, labels in _walk_groves(net):
        weight = Integer(1)
        for edge_id in edge_ids:
            weight *= conductance[edge_id]
        sigma = _partition_from_labels(net, labels)
        values[sigma] = values.get(sigma, Integer(0)) + weight
        count += 1
    logger.debug("Step 2: %d groves realize %d partitions", count, len(values))
    return GroveMeasurements(n=net.n, values=values)


def proportionality_factor(left: Dict, right: Dict) -> Optional[object]:
    """q with left = q * right, or None. Zero supports must match; the check is
    by cross-multiplication on the common support."""
    if set(left) != set(right) or not left:
        return None
    pivot = next(iter(sorted(left)))
    a, b = left[pivot], right[pivot]
    if any(left[key] * b != right[key] * a for key in left):
        return None
    return a / b


def electrically_equivalent(net1: CactusNetwork, net2: CactusNetwork) -> EquivalenceResult:
    if net1.n != net2.n:
        raise PreconditionError(f"networks have {net1.n} and {net2.n} boundary vertices")
    first, second = lambda_vector(net1), lambda_vector(net2)
    if first.is_zero() or second.is_zero():
        raise PreconditionError("a network with a zero grove measurement vector is degenerate")
    factor = proportionality_factor(first.values, second.values)
    if factor is None or factor <= 0:
        return EquivalenceResult(equivalent=False)
    return EquivalenceResult(equivalent=True, factor=factor)


# -----------------------------
# Response and resistance read off groves
# -----------------------------

def response_from_groves(measurements: GroveMeasurements) -> Matrix:
    """Off-diagonal L_ij = Λ_{{i,j}, rest singletons} / Λ_{all singletons}; diagonal by zero row sums."""
    n = measurements.n
    base = measurements.get(NoncrossingPartition.singletons(n))
    if base == 0:
        raise PreconditionError("all-singletons measurement vanishes: the network is shorted")
    result = zeros(n, n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            blocks = [(i, j)] + [(k,) for k in range(1, n + 1) if k not in (i, j)]
            value = measurements.get(NoncrossingPartition(n=n, blocks=blocks)) / base
            result[i - 1, j - 1] = result[j - 1, i - 1] = value
    for i in range(n):
        result[i, i] = -sum(result[i, j] for j in range(n) if j != i)
    return result


def resistance_from_groves(measurements: GroveMeasurements) -> Matrix:
    """R_ij = sum of Λ_σ over σ concordant with {i, j}, divided by Λ_{[n]}."""
    n = measurements.n
    base = measurements.get(NoncrossingPartition.whole(n))
    if base == 0:
        raise DisconnectedNetworkError("single-block measurement vanishes: the network is disconnected")
    result = zeros(n, n)
    partitions = enumerate_noncrossing(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            total = sum(
                (measurements.get(sigma) for sigma in partitions if is_concordant((i, j), sigma)),
                Integer(0),
            )
            result[i - 1, j - 1] = result[j - 1, i - 1] = total / base
    return result
