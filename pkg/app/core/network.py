"""Cactus networks as combinatorial maps: validation, quotient graph, medial strands."""

import logging
from collections import Counter
from typing import Dict, List, NamedTuple, Optional, Tuple, Union

import networkx as nx

from .check_models import CheckResult, ValidationReport
from .errors import InvalidNetworkError, StrandTracingError
from .models import (
    CactusNetwork,
    Matching,
    MedialPairing,
    QuotientGraph,
    Strand,
    _find_crossing,
    _partition_problem,
)

logger = logging.getLogger(__name__)


class Dart(NamedTuple):
    """A half-edge. ``kind`` is ``"edge"`` or ``"arc"``; arc i runs from boundary
    label i clockwise to i+1, side 0 in that direction."""

    kind: str
    key: Union[str, int]
    side: int

    def reverse(self) -> "Dart":
        return Dart(self.kind, self.key, 1 - self.side)

    @property
    def is_arc(self) -> bool:
        return self.kind == "arc"


def block_key(block) -> str:
    return "{" + ",".join(str(x) for x in block) + "}"


def edge_dart_at(net: CactusNetwork, edge_id: str, vertex: str) -> Dart:
    edge = net.edge(edge_id)
    return Dart("edge", edge_id, 0 if edge.ends[0] == vertex else 1)


def dart_origin(net: CactusNetwork, dart: Dart) -> str:
    """The pre-quotient vertex a dart leaves from."""
    if dart.is_arc:
        label = dart.key if dart.side == 0 else dart.key % net.n + 1
        return net.boundary_name(label)
    return net.edge(dart.key).ends[dart.side]


def disc_rotation(net: CactusNetwork, label: int) -> List[Dart]:
    """Clockwise darts at boundary vertex ``label`` before gluing: the arc toward
    label+1, the listed edges, the arc from label-1."""
    name = net.boundary_name(label)
    return (
        [Dart("arc", label, 0)]
        + [edge_dart_at(net, edge_id, name) for edge_id in net.rotation(name)]
        + [Dart("arc", (label - 2) % net.n + 1, 1)]
    )


class CactusMap:
    """Clockwise rotation system with boundary arcs included.

    ``glued=False`` gives the drawing in the disc, one vertex per boundary label.
    The glued map merges each block at one vertex: the block is pinched inside a
    single face of the disc drawing, the face holding the corner just before the
    incoming arc at the block's first member, and at every other member the last
    corner of that face.

    Faces are orbits of phi(d) = next_cw(reverse(d)); each face lies to the left
    of its darts. The exterior face is the cycle of forward arcs.
    """

    def __init__(self, net: CactusNetwork, glued: bool = True):
        self.net = net
        self.glued = glued
        self.vertex_of: Dict[str, str] = {}
        self.rotation: Dict[str, List[Dart]] = {}

        disc = {label: disc_rotation(net, label) for label in range(1, net.n + 1)}
        cuts = self._pinch_corners(disc) if glued else {}
        for block in net.shape:
            if not glued:
                for label in block:
                    name = net.boundary_name(label)
                    self.vertex_of[name] = name
                    self.rotation[name] = disc[label]
                continue
            key = block_key(block)
            cyclic: List[Dart] = []
            for label in block:
                self.vertex_of[net.boundary_name(label)] = key
                darts, cut = disc[label], cuts.get(label, len(disc[label]) - 2)
                cyclic.extend(darts[cut + 1:] + darts[:cut + 1])
            self.rotation[key] = cyclic

        for vertex in net.internal_vertices:
            self.vertex_of[vertex] = vertex
            self.rotation[vertex] = [edge_dart_at(net, edge_id, vertex) for edge_id in net.rotation(vertex)]
        self._link()

    def _pinch_corners(self, disc: Dict[int, List[Dart]]) -> Dict[int, int]:
        """Index c per member of a non-singleton block: the block is pinched in the
        corner between darts c and c+1 of its disc rotation."""
        blocks = [block for block in self.net.shape if len(block) > 1]
        if not blocks:
            return {}
        unglued = CactusMap(self.net, glued=False)
        cuts: Dict[int, int] = {}
        for block in blocks:
            face = set(unglued.face_of(disc[block[0]][-1]))
            for label in block:
                darts = disc[label]
                corners = [c for c in range(len(darts) - 1) if darts[c + 1] in face]
                if not corners:
                    raise ValueError(f"block {list(block)} does not lie in a single face of the drawing")
                cuts[label] = corners[-1]
        return cuts

    def _link(self) -> None:
        self._tail: Dict[Dart, str] = {}
        self._next: Dict[Dart, Dart] = {}
        self._prev: Dict[Dart, Dart] = {}
        for vertex, cyclic in self.rotation.items():
            for i, dart in enumerate(cyclic):
                if dart in self._tail:
                    raise ValueError(f"half-edge {dart} appears twice in the rotation system")
                self._tail[dart] = vertex
                self._next[dart] = cyclic[(i + 1) % len(cyclic)]
                self._prev[dart] = cyclic[i - 1]

        expected = {Dart("edge", e.id, s) for e in self.net.edges for s in (0, 1)}
        expected |= {Dart("arc", i, s) for i in range(1, self.net.n + 1) for s in (0, 1)}
        if set(self._tail) != expected:
            missing = sorted(map(str, expected - set(self._tail)))
            raise ValueError(f"rotation system misses half-edges {missing}")

    @property
    def darts(self) -> List[Dart]:
        return sorted(self._tail)

    def tail(self, dart: Dart) -> str:
        return self._tail[dart]

    def head(self, dart: Dart) -> str:
        return self._tail[dart.reverse()]

    def phi(self, dart: Dart) -> Dart:
        return self._next[dart.reverse()]

    def phi_inverse(self, dart: Dart) -> Dart:
        return self._prev[dart].reverse()

    def faces(self) -> List[List[Dart]]:
        seen = set()
        faces = []
        for start in self.darts:
            if start in seen:
                continue
            face = []
            dart = start
            while dart not in seen:
                seen.add(dart)
                face.append(dart)
                dart = self.phi(dart)
            faces.append(face)
        return faces

    def face_of(self, dart: Dart) -> List[Dart]:
        face = [dart]
        nxt = self.phi(dart)
        while nxt != dart:
            face.append(nxt)
            nxt = self.phi(nxt)
        return face

    def as_graph(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.rotation)
        for edge in self.net.edges:
            graph.add_edge(self.vertex_of[edge.ends[0]], self.vertex_of[edge.ends[1]], key=edge.id)
        for i in range(1, self.net.n + 1):
            graph.add_edge(self.tail(Dart("arc", i, 0)), self.head(Dart("arc", i, 0)), key=f"arc{i}")
        return graph


# -----------------------------
# Validation
# -----------------------------

def _structure_problems(net: CactusNetwork) -> List[str]:
    problems = []
    names = set(net.boundary_vertices)
    for vertex in net.internal_vertices:
        if vertex in names or vertex.startswith("{"):
            problems.append(f"internal vertex id {vertex!r} is reserved or repeated")
        names.add(vertex)
    ids = Counter(edge.id for edge in net.edges)
    problems += [f"edge id {edge_id!r} is repeated" for edge_id, count in ids.items() if count > 1]
    for edge in net.edges:
        for end in edge.ends:
            if end not in names:
                problems.append(f"edge {edge.id} ends at unknown vertex {end!r}")
        if edge.ends[0] == edge.ends[1]:
            problems.append(f"edge {edge.id} is a loop")
    return problems


def _rotation_problems(net: CactusNetwork) -> List[str]:
    problems = []
    known = set(net.vertices)
    for vertex in net.rotations:
        if vertex not in known:
            problems.append(f"rotation given for unknown vertex {vertex!r}")
    for vertex in net.vertices:
        incident = sorted(e.id for e in net.edges if vertex in e.ends)
        listed = sorted(net.rotation(vertex))
        if incident != listed:
            problems.append(f"rotation at {vertex} lists {listed}, incident edges are {incident}")
    return problems


def _euler_problems(cmap: CactusMap) -> List[str]:
    faces = cmap.faces()
    graph = cmap.as_graph()
    isolated = sum(1 for cyclic in cmap.rotation.values() if not cyclic)
    v, e, f = graph.number_of_nodes(), graph.number_of_edges(), len(faces) + isolated
    components = nx.number_connected_components(graph)
    if v - e + f == 2 * components:
        return []
    return [f"V - E + F = {v} - {e} + {f} = {v - e + f}, expected {2 * components} for {components} component(s)"]


def validate(net: CactusNetwork) -> ValidationReport:
    checks: List[CheckResult] = []

    def record(name: str, problems: List[str]) -> bool:
        checks.append(CheckResult(name=name, passed=not problems, detail="; ".join(problems)))
        return not problems

    def skip(*names: str) -> ValidationReport:
        for name in names:
            record(name, ["skipped: earlier checks failed"])
        return ValidationReport(checks=checks)

    partition_problem = _partition_problem(net.n, net.shape)
    shape_ok = record("partition", [partition_problem] if partition_problem else [])
    if shape_ok:
        crossing = _find_crossing(net.shape)
        shape_ok = record("noncrossing", [f"blocks cross at {crossing}"] if crossing else [])
    else:
        record("noncrossing", ["skipped: shape is not a partition"])

    record("conductances", [
        f"edge {e.id} has non-positive conductance {e.conductance}" for e in net.edges if e.conductance <= 0
    ])
    structure_ok = record("edges", _structure_problems(net))
    rotation_ok = structure_ok and record("rotation-system", _rotation_problems(net))
    if not structure_ok:
        record("rotation-system", ["skipped: edge list is malformed"])

    if not (shape_ok and rotation_ok):
        return skip("planarity", "outer-face", "gluing")

    try:
        disc = CactusMap(net, glued=False)
    except ValueError as exc:
        record("planarity", [str(exc)])
        return skip("outer-face", "gluing")
    planar = record("planarity", _euler_problems(disc))

    outer = disc.face_of(Dart("arc", 1, 0))
    expected = [Dart("arc", i, 0) for i in range(1, net.n + 1)]
    on_disc = record("outer-face", [] if outer == expected else [
        "boundary labels are not in clockwise order on the outer face"
    ])
    if not (planar and on_disc):
        return skip("gluing")

    try:
        record("gluing", _euler_problems(CactusMap(net)))
    except ValueError as exc:
        record("gluing", [str(exc)])
    return ValidationReport(checks=checks)


def ensure_valid(net: CactusNetwork) -> CactusNetwork:
    report = validate(net)
    if not report.is_valid:
        details = "; ".join(f"{c.name}: {c.detail}" for c in report.failures)
        raise InvalidNetworkError(f"invalid network: {details}", report=report)
    return net


# -----------------------------
# Quotient graph
# -----------------------------

def quotient_graph(net: CactusNetwork) -> QuotientGraph:
    ensure_valid(net)
    cmap = CactusMap(net)
    graph = nx.MultiGraph()
    boundary = tuple(block_key(block) for block in net.shape)
    for block, key in zip(net.shape, boundary):
        graph.add_node(key, boundary=True, labels=block)
    for vertex in net.internal_vertices:
        graph.add_node(vertex, boundary=False)

    loops = []
    for edge in net.edges:
        u, v = cmap.vertex_of[edge.ends[0]], cmap.vertex_of[edge.ends[1]]
        graph.add_edge(u, v, key=edge.id, conductance=edge.conductance)
        if u == v:
            loops.append(edge.id)
    if loops:
        logger.info("quotient creates loops %s; they are ignored by groves and the Laplacian", loops)

    return QuotientGraph(
        graph=graph,
        boundary=boundary,
        internal=tuple(net.internal_vertices),
        loops=tuple(loops),
    )


# -----------------------------
# Medial strands
# -----------------------------
# A strand is followed corner by corner. State ("A", d): leaving the current edge
# through the corner (left face of d, head of d). State ("B", d): leaving through
# (left face of d, tail of d). Crossing an edge in an A-step uses one diagonal of
# its medial vertex (1), in a B-step the other (0).

def _t_point_after_a(dart: Dart, n: int) -> int:
    i = dart.key
    return 2 * i if dart.side == 0 else (2 * i) % (2 * n) + 1


def _t_point_after_b(dart: Dart, n: int) -> int:
    i = dart.key
    return (2 * i) % (2 * n) + 1 if dart.side == 0 else 2 * i


def _start_state(t: int, n: int) -> Tuple[str, Dart]:
    if t % 2 == 0:
        return "A", Dart("arc", t // 2, 1)
    label = (t + 1) // 2
    return "B", Dart("arc", (label - 2) % n + 1, 1)


def _walk(cmap: CactusMap, mode: str, dart: Dart, limit: int, stop: Optional[Tuple[str, int]] = None):
    """Follow a strand; returns (crossings, end t-point or None when it closes at ``stop``)."""
    n = cmap.net.n
    crossings: List[Tuple[str, int]] = []
    for _ in range(limit):
        if mode == "A":
            nxt = cmap.phi(dart)
            if nxt.is_arc:
                return crossings, _t_point_after_a(nxt, n)
            crossing = (nxt.key, 1)
            mode, dart = "B", nxt.reverse()
        else:
            nxt = cmap.phi_inverse(dart)
            if nxt.is_arc:
                return crossings, _t_point_after_b(nxt, n)
            crossing = (nxt.key, 0)
            mode, dart = "A", nxt.reverse()
        if crossing == stop:
            return crossings, None
        crossings.append(crossing)
    raise StrandTracingError("medial strand does not close; the rotation system is malformed")


def medial_strands(net: CactusNetwork) -> List[Strand]:
    """All strands: the n boundary-to-boundary ones first (ordered by smaller
    endpoint), then closed ones."""
    ensure_valid(net)
    cmap = CactusMap(net)
    limit = 4 * len(net.edges) + 4
    owner: Dict[Tuple[str, int], int] = {}
    strands: List[Strand] = []
    matched = set()

    def claim(crossings, index):
        for crossing in crossings:
            if crossing in owner:
                raise StrandTracingError(f"medial vertex of edge {crossing[0]} visited twice")
            owner[crossing] = index

    for t in range(1, 2 * net.n + 1):
        if t in matched:
            continue
        mode, dart = _start_state(t, net.n)
        crossings, end = _walk(cmap, mode, dart, limit)
        if end in matched or end == t:
            raise StrandTracingError(f"strand from t{t} ends at an occupied point t{end}")
        matched.update((t, end))
        claim(crossings, len(strands))
        strands.append(Strand(endpoints=(t, end), crossings=tuple(c[0] for c in crossings)))

    for edge in net.edges:
        for diagonal in (0, 1):
            if (edge.id, diagonal) in owner:
                continue
            start = (edge.id, diagonal)
            mode = "A" if diagonal == 0 else "B"
            crossings, end = _walk(cmap, mode, Dart("edge", edge.id, 0), limit, stop=start)
            if end is not None:
                raise StrandTracingError("a closed strand reached the boundary")
            crossings = [start] + crossings
            claim(crossings, len(strands))
            strands.append(Strand(endpoints=None, crossings=tuple(c[0] for c in crossings)))

    logger.debug("traced %d medial strands on %d edges", len(strands), len(net.edges))
    return strands


def medial_pairing(net: CactusNetwork) -> MedialPairing:
    pairs = [s.endpoints for s in medial_strands(net) if not s.closed]
    return MedialPairing(matching=Matching(n=net.n, pairs=pairs))


def is_minimal(net: CactusNetwork) -> bool:
    strands = medial_strands(net)
    if any(s.closed for s in strands):
        return False
    through: Dict[str, List[int]] = {}
    for index, strand in enumerate(strands):
        for edge_id in strand.crossings:
            through.setdefault(edge_id, []).append(index)
    meetings = Counter()
    for edge_id, owners in through.items():
        first, second = owners
        if first == second:
            return False
        meetings[frozenset(owners)] += 1
    return all(count < 2 for count in meetings.values())
