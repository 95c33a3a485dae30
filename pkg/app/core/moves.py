"""Local rewrites of cactus networks: the Y-Δ move and the planar dual."""

import logging
from typing import Dict, List, Literal, Sequence, Tuple, Union

import networkx as nx

from .errors import IdentityViolation, InvalidNetworkError, PreconditionError, SiteShapeError
from .models import CactusNetwork, Edge
from .network import CactusMap, Dart, dart_origin, ensure_valid, quotient_graph

logger = logging.getLogger(__name__)

Direction = Literal["ytod", "dtoy"]


def _fresh_index(taken: set, *patterns: str) -> int:
    m = 1
    while any(pattern.format(m=m) in taken for pattern in patterns):
        m += 1
    return m


def _rebuild(net: CactusNetwork, **changes) -> CactusNetwork:
    data = net.model_dump()
    data.update(changes)
    result = CactusNetwork.model_validate(data)
    try:
        return ensure_valid(result)
    except InvalidNetworkError as exc:
        raise IdentityViolation(f"local rewrite produced an invalid network: {exc}") from exc


def _replace_in_rotation(rotation: Sequence[str], old: Sequence[str], new: Sequence[str], cyclic: bool) -> List[str]:
    """Replace the consecutive run ``old`` by ``new``, wrapping around for cyclic rotations."""
    items = list(rotation)
    size, width = len(items), len(old)
    starts = range(size) if cyclic else range(size - width + 1)
    for start in starts:
        if all(items[(start + k) % size] == old[k] for k in range(width)):
            if start + width <= size:
                return items[:start] + list(new) + items[start + width:]
            # the run wraps past the end of an internal rotation
            tail = (start + width) % size
            return items[tail:start] + list(new)
    raise IdentityViolation(f"edges {list(old)} are not consecutive in rotation {items}")


def y_to_delta(net: CactusNetwork, vertex: str) -> CactusNetwork:
    ensure_valid(net)
    if vertex not in net.internal_vertices:
        raise SiteShapeError(f"{vertex!r} is not an internal vertex")
    spokes = net.rotation(vertex)
    if len(spokes) != 3:
        raise SiteShapeError(f"{vertex} has degree {len(spokes)}, a Y center needs exactly 3")

    cmap = CactusMap(net)
    edges = [net.edge(edge_id) for edge_id in spokes]
    outer = [e.ends[1] if e.ends[0] == vertex else e.ends[0] for e in edges]
    if len({cmap.vertex_of[u] for u in outer}) != 3:
        raise SiteShapeError(f"the neighbors of {vertex} are not three distinct vertices")

    total = sum((e.conductance for e in edges), 0)
    m = _fresh_index({e.id for e in net.edges}, "d{m}_1", "d{m}_2", "d{m}_3")
    sides = []
    for k in range(3):
        following = (k + 1) % 3
        sides.append(Edge(
            id=f"d{m}_{k + 1}",
            ends=(outer[k], outer[following]),
            conductance=edges[k].conductance * edges[following].conductance / total,
        ))

    rotations = {v: list(r) for v, r in net.rotations.items() if v != vertex}
    for k, u in enumerate(outer):
        rotations[u] = _replace_in_rotation(
            rotations[u], [spokes[k]], [sides[k].id, sides[k - 1].id], cyclic=u in net.internal_vertices
        )
    logger.info("Y-Δ at %s: removed %s, added %s", vertex, list(spokes), [s.id for s in sides])
    return _rebuild(
        net,
        internal_vertices=[v for v in net.internal_vertices if v != vertex],
        edges=[e.model_dump() for e in net.edges if e.id not in spokes] + [s.model_dump() for s in sides],
        rotations=rotations,
    )


def _triangle_face(cmap: CactusMap, site: Sequence[str]) -> List[Dart]:
    wanted = set(site)
    for face in cmap.faces():
        if len(face) == 3 and not any(d.is_arc for d in face) and {d.key for d in face} == wanted:
            return face
    raise SiteShapeError(f"edges {sorted(wanted)} do not bound a triangular face")


def delta_to_y(net: CactusNetwork, site: Sequence[str]) -> CactusNetwork:
    ensure_valid(net)
    if len(set(site)) != 3:
        raise SiteShapeError("a Δ site is given by three distinct edge ids")
    cmap = CactusMap(net)
    darts = _triangle_face(cmap, site)
    if len({cmap.tail(d) for d in darts}) != 3:
        raise SiteShapeError("the triangle does not have three distinct corners")

    corners = [dart_origin(net, d) for d in darts]
    if any(dart_origin(net, darts[k - 1].reverse()) != corners[k] for k in range(3)):
        raise SiteShapeError("a corner of the triangle is split between two members of a block")
    conductance = [net.edge(d.key).conductance for d in darts]
    product_sum = (
        conductance[0] * conductance[1] + conductance[0] * conductance[2] + conductance[1] * conductance[2]
    )
    taken = {e.id for e in net.edges} | set(net.vertices)
    m = _fresh_index(taken, "y{m}", "y{m}_1", "y{m}_2", "y{m}_3")
    center = f"y{m}"
    spokes = [
        Edge(id=f"y{m}_{k + 1}", ends=(corners[k], center), conductance=product_sum / conductance[(k + 1) % 3])
        for k in range(3)
    ]

    rotations = {v: list(r) for v, r in net.rotations.items()}
    for k, w in enumerate(corners):
        rotations[w] = _replace_in_rotation(
            rotations.get(w, []), [darts[k - 1].key, darts[k].key], [spokes[k].id],
            cyclic=w in net.internal_vertices,
        )
    rotations[center] = [spokes[0].id, spokes[2].id, spokes[1].id]
    removed = {d.key for d in darts}
    logger.info("Δ-Y on %s: new center %s", sorted(removed), center)
    return _rebuild(
        net,
        internal_vertices=list(net.internal_vertices) + [center],
        edges=[e.model_dump() for e in net.edges if e.id not in removed] + [s.model_dump() for s in spokes],
        rotations=rotations,
    )


def ydelta(net: CactusNetwork, site: Union[str, Sequence[str]], direction: Direction) -> CactusNetwork:
    """Y-to-Δ at an internal vertex id, or Δ-to-Y on a face named by its three edge ids."""
    if direction == "ytod":
        if not isinstance(site, str):
            raise SiteShapeError("Y-to-Δ expects a single vertex id")
        return y_to_delta(net, site)
    if direction == "dtoy":
        edge_ids = site.split(",") if isinstance(site, str) else list(site)
        return delta_to_y(net, [e.strip() for e in edge_ids])
    raise PreconditionError(f"unknown direction {direction!r}")


# -----------------------------
# Planar dual
# -----------------------------

def _check_attached(net: CactusNetwork) -> None:
    gamma = quotient_graph(net)
    for component in nx.connected_components(gamma.graph):
        if not any(v in gamma.boundary for v in component):
            raise PreconditionError(f"internal component {sorted(component)} does not touch the boundary")


def _starting_after_arc(face: List[Dart]) -> List[Dart]:
    last_arc = max(i for i, d in enumerate(face) if d.is_arc)
    return face[last_arc + 1:] + face[:last_arc + 1]


def dual(net: CactusNetwork) -> CactusNetwork:
    """Faces of the quotient become vertices, e becomes e* with conductance 1/c(e).

    The boundary face holding the tilde point between labels i and i+1 supplies
    dual boundary vertex ``b{i}``; the tilde blocks form the dual shape, already
    shifted back onto 1..n.
    """
    ensure_valid(net)
    _check_attached(net)
    cmap = CactusMap(net)
    exterior = set(cmap.face_of(Dart("arc", 1, 0)))

    assign: Dict[Tuple[str, int], str] = {}
    rotations: Dict[str, List[str]] = {}
    internal: List[str] = []
    shape: List[List[int]] = []

    for face in cmap.faces():
        if face[0] in exterior:
            continue
        if not any(d.is_arc for d in face):
            name = f"f{len(internal) + 1}"
            internal.append(name)
            for d in face:
                assign[(d.key, d.side)] = name
            rotations[name] = [f"{d.key}*" for d in reversed(face)]
            continue

        block: List[int] = []
        pending: List[Dart] = []
        for d in _starting_after_arc(face):
            if not d.is_arc:
                pending.append(d)
                continue
            if d.side != 1:
                raise IdentityViolation(f"forward arc {d.key} lies off the exterior face")
            member = CactusNetwork.boundary_name(d.key)
            block.append(d.key)
            for graph_dart in pending:
                assign[(graph_dart.key, graph_dart.side)] = member
            rotations[member] = [f"{g.key}*" for g in reversed(pending)]
            pending = []
        shape.append(block)

    edges = []
    for edge in net.edges:
        ends = (assign[(edge.id, 0)], assign[(edge.id, 1)])
        if ends[0] == ends[1]:
            raise PreconditionError(f"edge {edge.id} is a bridge to the boundary; its dual would be a loop")
        edges.append(Edge(id=f"{edge.id}*", ends=ends, conductance=1 / edge.conductance).model_dump())

    logger.info("dual: %d internal faces, shape %s", len(internal), shape)
    return _rebuild(
        net,
        shape=shape,
        internal_vertices=internal,
        edges=edges,
        rotations={v: r for v, r in rotations.items() if r},
    )
