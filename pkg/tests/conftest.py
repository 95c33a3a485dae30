import random
from pathlib import Path

import pytest
from sympy import Rational

from app.core.models import CactusNetwork
from app.core.serialization import load_network

NETWORKS = Path(__file__).resolve().parent.parent / "networks"


def network_file(name: str) -> Path:
    return NETWORKS / name


@pytest.fixture
def y_net() -> CactusNetwork:
    return load_network(network_file("y123.net"))


@pytest.fixture
def delta_net() -> CactusNetwork:
    return load_network(network_file("delta-1-half-third.net"))


@pytest.fixture
def cactus6_net() -> CactusNetwork:
    """Six boundary points, shape {1}{2,3}{4,6}{5}, edges a=b1-b6 (1), b=b5-b4 (2), c=b1-b3 (3).

    Edge c sits at b3 rather than b2: only then do the medial strands pair as
    1-7 2-6 3-12 4-5 8-10 9-11 and the Laplacian on {1},{2,3},{4,6},{5} have
    rows (-4,3,1,0), (3,-3,0,0), (1,0,-3,2), (0,0,2,-2).
    """
    return load_network(network_file("cactus-6.net"))


@pytest.fixture
def shorted_net() -> CactusNetwork:
    return load_network(network_file("shorted-12.net"))


@pytest.fixture
def disconnected_net() -> CactusNetwork:
    return load_network(network_file("disconnected-3.net"))


def y_network(a, b, c) -> CactusNetwork:
    return CactusNetwork(
        n=3,
        shape=[[1], [2], [3]],
        internal_vertices=["v"],
        edges=[
            {"id": "a", "ends": ["b1", "v"], "conductance": a},
            {"id": "b", "ends": ["b2", "v"], "conductance": b},
            {"id": "c", "ends": ["b3", "v"], "conductance": c},
        ],
        rotations={"b1": ["a"], "b2": ["b"], "b3": ["c"], "v": ["a", "b", "c"]},
    )


def wheel_network(n: int, rng: random.Random, density: float = 0.7) -> CactusNetwork:
    """A random planar network on a wheel: spokes b_i - v and rim edges b_i - b_{i+1}.

    The center is kept only with at least two spokes, so no edge is a pendant
    into the interior.
    """

    def conductance():
        return Rational(rng.randint(1, 5), rng.randint(1, 3))

    spokes = [i for i in range(1, n + 1) if rng.random() < density]
    if len(spokes) < 2:
        spokes = []
    rims = [i for i in range(1, n + 1) if rng.random() < density]

    edges = []
    rotations = {f"b{i}": [] for i in range(1, n + 1)}
    rim_id = {i: f"r{i}" for i in rims}
    for i in rims:
        following = i % n + 1
        edges.append({"id": rim_id[i], "ends": [f"b{i}", f"b{following}"], "conductance": conductance()})
    for i in spokes:
        edges.append({"id": f"s{i}", "ends": [f"b{i}", "v"], "conductance": conductance()})

    for i in range(1, n + 1):
        previous = (i - 2) % n + 1
        order = []
        if i in rim_id:
            order.append(rim_id[i])
        if i in spokes:
            order.append(f"s{i}")
        if previous in rim_id:
            order.append(rim_id[previous])
        rotations[f"b{i}"] = order
    if spokes:
        rotations["v"] = [f"s{i}" for i in spokes]

    return CactusNetwork(
        n=n,
        shape=[[i] for i in range(1, n + 1)],
        internal_vertices=["v"] if spokes else [],
        edges=edges,
        rotations={v: r for v, r in rotations.items() if r},
    )


def random_networks(count: int, sizes=(2, 3, 4), seed: int = 20240611):
    rng = random.Random(seed)
    return [wheel_network(sizes[k % len(sizes)], rng) for k in range(count)]


def random_connected_networks(count: int, sizes=(2, 3, 4), seed: int = 7):
    from networkx import is_connected

    from app.core.network import quotient_graph

    rng = random.Random(seed)
    found = []
    while len(found) < count:
        net = wheel_network(sizes[len(found) % len(sizes)], rng, density=0.8)
        if net.edges and is_connected(quotient_graph(net).graph):
            found.append(net)
    return found


def random_cactus_networks(count: int, sizes=(3, 4, 5), seed: int = 13):
    """Networks with a non-singleton block: duals of sparse random wheels."""
    from app.core.moves import dual

    rng = random.Random(seed)
    found = []
    while len(found) < count:
        net = dual(wheel_network(sizes[len(found) % len(sizes)], rng, density=0.5))
        if len(net.shape) < net.n:
            found.append(net)
    return found
